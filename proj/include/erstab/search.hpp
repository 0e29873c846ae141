#pragma once

#include "erstab/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace erstab {

// Minimize T_k over all labelled n-vertex graphs with exactly m edges and
// tau_{cover_order} >= min_tau (min_tau = 0 means unconstrained).
struct SearchQuery {
    int n = 0;
    int m = 0;
    int k = 3;
    int cover_order = 3;
    int min_tau = 0;
};

struct SearchOptions {
    std::uint64_t budget = std::uint64_t{1} << 30; // max edge subsets to sweep
    int threads = 1;
    std::size_t witness_cap = 32;
    // Graphs tried before the sweep; each one that meets the query seeds the
    // pruning incumbent with its clique count.
    std::vector<Graph> seeds;
};

struct SearchReport {
    SearchQuery query;
    std::uint64_t subsets = 0;          // C(n(n-1)/2, m)
    std::optional<std::uint64_t> min_count; // nullopt: no graph meets the query
    std::uint64_t minimizers = 0;       // graphs attaining min_count
    std::vector<std::string> witnesses; // graph6, first minimizers in colex rank order
    std::size_t witness_cap = 0;
    bool witnesses_truncated = false;
    std::optional<std::uint64_t> seed_bound;
    // Schedule-dependent diagnostics; not part of the deterministic report.
    std::uint64_t tau_checks = 0;
    double elapsed_seconds = 0;
};

// Edge slot order used by the sweep: (0,1), (0,2), (1,2), (0,3), ... Subset
// rank is the colex rank of the chosen slot indices.
std::vector<Edge> edge_slots(int n);

// Saturating binomial coefficient.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// tau_{order}(g) >= min_tau, checked by trying every vertex set of size
// min_tau - 1 as a cover. Independent of the branch-and-bound solver.
bool cover_number_at_least(const Graph& g, int order, int min_tau);

// Exhaustive sweep over edge subsets in fixed-size colex shards. Throws
// BudgetExceeded when C(n(n-1)/2, m) exceeds the budget and
// std::invalid_argument for an out-of-range query. Results do not depend on
// the thread count.
SearchReport min_cliques_exhaustive(const SearchQuery& query, const SearchOptions& options = {});

enum class ClassicalLaw { Mantel, Rademacher, LovaszSimonovits };

const char* law_name(ClassicalLaw law);

struct ClassicalRow {
    int n = 0;
    int m = 0;
    std::optional<std::uint64_t> min_count;
    std::uint64_t expected = 0; // lower bound, or exact value for Rademacher
    bool exact = false;         // true when min_count must equal expected
    bool holds = false;
    std::string note;
};

// Mantel: m = floor(n^2/4)+1, min >= 1. Rademacher: same m, min == floor(n/2).
// Lovasz-Simonovits: m = floor(n^2/4)+t, min >= t*floor(n/2). Sizes where m
// exceeds C(n,2) are reported as skipped with holds = true.
std::vector<ClassicalRow> verify_classical(int n_min, int n_max, ClassicalLaw law, int t = 1,
                                           const SearchOptions& options = {});

} // namespace erstab
