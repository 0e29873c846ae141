#include "erstab/report.hpp"

#include "erstab/cliques.hpp"
#include "erstab/covering.hpp"
#include "erstab/errors.hpp"
#include "erstab/graph6.hpp"

namespace erstab {

namespace {

std::string schema(const char* kind) { return std::string("erstab.") + kind + "/" + kSchemaVersion; }

template <typename T>
Json optional_json(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

Json hvertex_json(const HVertex& v) {
    Json j;
    j["class"] = v.cls;
    j["role"] = v.matched ? "class-edge" : "plain";
    j["index"] = v.index;
    if (v.matched) j["side"] = v.side;
    return j;
}

} // namespace

Json vertex_set_json(VertexSet s) { return Json(s.to_vector()); }

Json search_report_json(const SearchReport& report, bool timing) {
    Json j;
    j["schema"] = schema("search");
    j["query"] = {{"n", report.query.n},
                  {"m", report.query.m},
                  {"k", report.query.k},
                  {"cover_order", report.query.cover_order},
                  {"min_tau", report.query.min_tau}};
    j["min_count"] = optional_json(report.min_count);
    j["minimizers"] = report.minimizers;
    j["witnesses"] = report.witnesses;
    j["witness_cap"] = report.witness_cap;
    j["witnesses_truncated"] = report.witnesses_truncated;
    j["stats"] = {{"graphs_scanned", report.subsets}, {"seed_bound", optional_json(report.seed_bound)}};
    if (timing) j["timing"] = {{"elapsed_seconds", report.elapsed_seconds}, {"tau_checks", report.tau_checks}};
    return j;
}

Json classical_json(ClassicalLaw law, int t, const std::vector<ClassicalRow>& rows) {
    Json j;
    j["schema"] = schema("verify");
    j["suite"] = law_name(law);
    if (law == ClassicalLaw::LovaszSimonovits) j["t"] = t;
    bool pass = true;
    Json table = Json::array();
    for (const auto& row : rows) {
        pass = pass && row.holds;
        Json r = {{"n", row.n},
                  {"m", row.m},
                  {"min_count", optional_json(row.min_count)},
                  {row.exact ? "expected" : "lower_bound", row.expected},
                  {"holds", row.holds}};
        if (!row.note.empty()) r["note"] = row.note;
        table.push_back(r);
    }
    j["rows"] = table;
    j["pass"] = pass;
    return j;
}

Json gap_report_json(const std::vector<GapRow>& rows) {
    Json j;
    j["schema"] = schema("conjecture-gap");
    Json table = Json::array();
    for (const auto& row : rows) {
        auto family = [](const std::optional<OptimizedA>& o) {
            return o ? Json{{"a", o->a}, {"count", o->count}} : Json(nullptr);
        };
        table.push_back({{"n", row.n},
                         {"s", row.s},
                         {"t", row.t},
                         {"conjectured", row.conjectured},
                         {"g1", family(row.g1)},
                         {"g2", family(row.g2)},
                         {"theorem_bound", optional_json(row.bound)},
                         {"g1_gap", optional_json(row.g1_gap)},
                         {"bound_gap", optional_json(row.bound_gap)}});
    }
    j["rows"] = table;
    return j;
}

Json hspec_json(const HSpec& spec) {
    Json missing = Json::array();
    for (const auto& m : spec.missing_edges) missing.push_back({hvertex_json(m.u), hvertex_json(m.v)});
    return {{"class_sizes", spec.class_sizes}, {"class_edge_counts", spec.class_edge_counts}, {"missing_edges", missing}};
}

ConstructionSummary summarize_g1(const ConstructionParams& p) {
    return {"g1", p, build_g1(p), 3, alpha(p.n, p.s, p.t, p.a), t3_g1_formula(p.n, p.s, p.t, p.a), std::nullopt};
}

ConstructionSummary summarize_g2(const ConstructionParams& p) {
    return {"g2", p, build_g2(p), 3, alpha(p.n, p.s, p.t, p.a), t3_g2_formula(p.n, p.s, p.t, p.a), std::nullopt};
}

ConstructionSummary summarize_g3(int n, int r) {
    ConstructionParams p{n, r, 2, 1, 0};
    return {"g3", p, build_g3(n, r), r + 1, std::nullopt, g3_clique_product(n, r), std::nullopt};
}

ConstructionSummary summarize_g4(int n, int r, int t) {
    ConstructionParams p{n, r, 0, t, 0};
    return {"g4", p, build_g4(n, r, t), r + 1, std::nullopt, g4_clique_count(n, r, t), std::nullopt};
}

ConstructionSummary summarize_h(int n, int r, int s, int t) {
    const auto best = h_min(n, r, s, t, r + 1);
    if (!best) throw Infeasible("h: family is empty for these parameters");
    ConstructionParams p{n, r, s, t, 0};
    return {"h", p, realize(best->witness), r + 1, std::nullopt, std::nullopt, best->witness};
}

Json construction_json(const ConstructionSummary& summary) {
    const auto& p = summary.params;
    const Graph& g = summary.graph;
    Json j;
    j["schema"] = schema("construction");
    j["kind"] = summary.kind;
    Json params = {{"n", p.n}, {"r", p.r}};
    if (summary.kind != "g3" && summary.kind != "g4") params["s"] = p.s;
    if (summary.kind != "g3") params["t"] = p.t;
    if (summary.kind == "g1" || summary.kind == "g2") params["a"] = p.a;
    j["params"] = params;
    j["alpha"] = optional_json(summary.alpha);
    j["graph6"] = graph6_encode(g);
    j["edges"] = g.edge_count();
    j["turan_edges"] = turan_edges(p.n, p.r);
    j["clique_order"] = summary.order;
    j["formula_count"] = optional_json(summary.formula);
    j["measured_count"] = count_cliques(g, summary.order);
    const auto cover = clique_cover_number(g, summary.order);
    j["cover"] = {{"order", summary.order}, {"size", cover.size}, {"witness", vertex_set_json(cover.witness)}};
    if (summary.hspec) j["hspec"] = hspec_json(*summary.hspec);
    return j;
}

} // namespace erstab
