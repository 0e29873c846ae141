#pragma once

#include "erstab/partition.hpp"
#include "erstab/search.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace erstab {

struct SweepOutcome {
    std::uint64_t checked = 0;
    std::vector<std::string> failures;

    bool ok() const noexcept { return failures.empty(); }
};

// Every buildable (n, s, t, a) with n in [n_min, n_max], 2 <= s <= s_max:
// triangle counts of G1/G2 against their closed forms, edge counts against
// floor(n^2/4) + t, and tau_3 = s exactly when n <= tau_max_n.
SweepOutcome check_two_class_formulas(int n_min, int n_max, int s_max, int tau_max_n);

// G3 for the given r and n in [n_min, n_max]: e = t_r(n) + 1, the K_{r+1}
// count against both closed forms, and tau_{r+1} = 2 when n <= tau_max_n.
SweepOutcome check_g3(int r, int n_min, int n_max, int tau_max_n);

// h_min(n, 2, s, t, 3) == theorem_bound(n, s, t) for n in [max(n_min, 4s+4), n_max].
SweepOutcome check_h_closure(int n_min, int n_max, int s_max);

struct SupersatOutcome {
    int n = 0;
    std::uint64_t graphs = 0;
    std::uint64_t pairs = 0; // (graph, x) pairs checked
    double min_slack = 0;    // min of T_3 - bound over all pairs
    std::vector<std::string> failures;
};

// Every labelled graph on n vertices and every 0 <= x <= min_class_edges(g, 2):
// T_3(g) >= supersat_lower_bound(n, 2, e(g), x).
SupersatOutcome check_supersaturation(int n);

struct OracleComparison {
    SearchReport report;
    std::int64_t bound = 0;
    // Constructions that meet the query, with their clique counts.
    std::vector<std::pair<std::string, std::uint64_t>> constructions;
    bool oracle_within_bound = false; // min_count <= bound
};

// Oracle at m = floor(n^2/4) + t, tau_3 >= s against theorem_bound(n, s, t);
// buildable G1/G2 members seed the search.
OracleComparison compare_two_class_bound(int n, int s, int t, const SearchOptions& options);

// Oracle at m = t_r(n) + 1, tau_{r+1} >= 2 against the K_{r+1} count of G3.
OracleComparison compare_g3_bound(int n, int r, const SearchOptions& options);

} // namespace erstab
