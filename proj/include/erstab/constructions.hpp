#pragma once

#include "erstab/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace erstab {

// Parameters of the two-class constructions. Class A has ceil(n/2)+a vertices
// and class B has floor(n/2)-a.
struct ConstructionParams {
    int n = 0;
    int r = 2;
    int s = 0;
    int t = 0;
    int a = 0;
};

enum class Family { G1, G2 };

const char* family_name(Family f);

// Missing cross-edge count forced by the edge budget:
// s - t - a^2 when n is even, s - t - a - a^2 when n is odd. May be negative.
std::int64_t alpha(int n, int s, int t, int a);

// Reason the builder would reject p, or nullopt when it is buildable.
std::optional<std::string> g1_infeasibility(const ConstructionParams& p);
std::optional<std::string> g2_infeasibility(const ConstructionParams& p);

// Layout: A = [0, |A|), B = [|A|, n). In A the matching pairs are
// x_i = 2(i-1), y_i = 2(i-1)+1 for i = 1..s-1; u1 = |A|, u2 = |A|+1. The
// deleted cross edges are {u1, x_1..x_alpha}. Throws Infeasible.
Graph build_g1(const ConstructionParams& p);

// Layout: A = [0, |A|) holds the s matching pairs at its lowest indices,
// u = |A|; deleted cross edges are {u, x_1..x_alpha}. Throws Infeasible.
Graph build_g2(const ConstructionParams& p);

// Balanced class sizes, largest first; V_1 occupies the lowest indices. v1, v2
// are the first two vertices of V_1, u1, u2 the first two of V_2. The cross
// edge v1u1 is removed and v1v2, u1u2 are added. Throws Infeasible when
// |V_2| < 2 or r < 2.
Graph build_g3(int n, int r);

// Balanced complete r-partite graph plus a t-matching on the lowest indices of
// the largest class. Throws Infeasible when that class has fewer than 2t vertices.
Graph build_g4(int n, int r, int t);

// Closed-form triangle counts of G1 / G2; throw Infeasible when alpha < 0.
std::int64_t t3_g1_formula(int n, int s, int t, int a);
std::int64_t t3_g2_formula(int n, int s, int t, int a);
std::int64_t t3_formula(Family f, int n, int s, int t, int a);

// K_{r+1} count of G3 from its class sizes: (|V_1|+|V_2|-2) * prod_{i>=3} |V_i|.
std::int64_t g3_clique_product(int n, int r);
// The same count via n = rm + l: 2m(m+1)^{l-2}m^{r-l} for 2<=l<=r-1,
// (2m-1)m^{r-2} for l=1 and (2m-2)m^{r-2} for l=0.
std::int64_t g3_clique_cases(int n, int r);
// K_{r+1} count of G4: t * prod_{i>=2} |V_i|.
std::int64_t g4_clique_count(int n, int r, int t);

enum class Feasibility {
    Buildable,   // alpha >= 0 and the builder preconditions hold
    FormulaOnly, // alpha >= 0 only
};

struct OptimizedA {
    int a = 0;
    std::int64_t count = 0;
};

// Minimizes the family's formula over a in [0, floor(sqrt(s)) + 1], smallest a
// on ties. Throws std::invalid_argument unless 0 < t < s and Infeasible when no
// a qualifies.
OptimizedA optimize_a(int n, int s, int t, Family f, Feasibility mode = Feasibility::Buildable);
std::optional<OptimizedA> try_optimize_a(int n, int s, int t, Family f,
                                         Feasibility mode = Feasibility::Buildable);

struct TheoremBound {
    std::int64_t value = 0;
    Family family = Family::G1;
    int a = 0;
};

// min over optimize_a(G1), optimize_a(G2). Ties report G1.
TheoremBound theorem_bound_detail(int n, int s, int t, Feasibility mode = Feasibility::Buildable);
std::int64_t theorem_bound(int n, int s, int t, Feasibility mode = Feasibility::Buildable);

// (s-1)ceil(n/2) + floor(n/2) - 2(s-t).
std::int64_t conjecture11_value(int n, int s, int t);

struct GapRow {
    int n = 0, s = 0, t = 0;
    std::int64_t conjectured = 0;
    std::optional<OptimizedA> g1;
    std::optional<OptimizedA> g2;
    std::optional<std::int64_t> bound; // theorem_bound
    // conjectured - best G1 value (the construction family the conjecture came from).
    std::optional<std::int64_t> g1_gap;
    // conjectured - theorem_bound.
    std::optional<std::int64_t> bound_gap;
};

// One row per (n, s, t) with n in [n_min, n_max], 2 <= s <= s_max, 0 < t < s.
std::vector<GapRow> conjecture_gap_report(int n_min, int n_max, int s_max,
                                          Feasibility mode = Feasibility::Buildable);

} // namespace erstab
