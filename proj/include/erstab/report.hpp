#pragma once

#include "erstab/constructions.hpp"
#include "erstab/h_family.hpp"
#include "erstab/search.hpp"
#include "erstab/verify.hpp"

#include <json.hpp>

#include <string>

namespace erstab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

// Deterministic report; `timing` adds the schedule-dependent diagnostics.
Json search_report_json(const SearchReport& report, bool timing = false);

Json classical_json(ClassicalLaw law, int t, const std::vector<ClassicalRow>& rows);

Json gap_report_json(const std::vector<GapRow>& rows);

Json hspec_json(const HSpec& spec);

// Descriptor written next to a construction's graph6 output. `order` is the
// clique size counted (3 for g1/g2, r+1 otherwise); formula is null when the
// kind has no closed form.
struct ConstructionSummary {
    std::string kind;
    ConstructionParams params;
    Graph graph;
    int order = 3;
    std::optional<std::int64_t> alpha;
    std::optional<std::int64_t> formula;
    std::optional<HSpec> hspec;
};

ConstructionSummary summarize_g1(const ConstructionParams& p);
ConstructionSummary summarize_g2(const ConstructionParams& p);
ConstructionSummary summarize_g3(int n, int r);
ConstructionSummary summarize_g4(int n, int r, int t);
// Minimizer of the H family for K_{r+1}; throws Infeasible if the family is empty.
ConstructionSummary summarize_h(int n, int r, int s, int t);

// Measures clique count and covering number of the summarized graph.
Json construction_json(const ConstructionSummary& summary);

Json vertex_set_json(VertexSet s);

} // namespace erstab
