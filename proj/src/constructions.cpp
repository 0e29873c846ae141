#include "erstab/constructions.hpp"

#include "erstab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace erstab {

namespace {

int class_a(int n, int a) { return (n + 1) / 2 + a; }
int class_b(int n, int a) { return n / 2 - a; }

void require_st(int s, int t) {
    if (!(0 < t && t < s))
        throw std::invalid_argument("need 0 < t < s (got s=" + std::to_string(s) +
                                    ", t=" + std::to_string(t) + ")");
}

std::optional<std::string> common_infeasibility(const ConstructionParams& p) {
    if (p.r != 2) return "two-class construction requires r=2";
    if (!(0 < p.t && p.t < p.s)) return "need 0 < t < s";
    if (p.a < 0) return "a must be >= 0";
    if (p.n < 0 || p.n > kMaxVertices) return "n outside 0..64";
    if (alpha(p.n, p.s, p.t, p.a) < 0)
        return "alpha = " + std::to_string(alpha(p.n, p.s, p.t, p.a)) + " < 0";
    return std::nullopt;
}

Graph two_class_base(int n, int a) {
    return complete_multipartite({class_a(n, a), class_b(n, a)});
}

} // namespace

const char* family_name(Family f) { return f == Family::G1 ? "g1" : "g2"; }

std::int64_t alpha(int n, int s, int t, int a) {
    const std::int64_t aa = a;
    return std::int64_t{s} - t - aa * aa - (n % 2 != 0 ? aa : 0);
}

std::optional<std::string> g1_infeasibility(const ConstructionParams& p) {
    if (auto why = common_infeasibility(p)) return why;
    const auto al = alpha(p.n, p.s, p.t, p.a);
    if (al > p.s - 1) return "alpha = " + std::to_string(al) + " exceeds the s-1 matching vertices x_i";
    if (2 * (p.s - 1) > class_a(p.n, p.a))
        return "class A (" + std::to_string(class_a(p.n, p.a)) + ") cannot hold " +
               std::to_string(2 * (p.s - 1)) + " matching vertices";
    if (class_b(p.n, p.a) < 2) return "class B (" + std::to_string(class_b(p.n, p.a)) + ") needs 2 vertices";
    return std::nullopt;
}

std::optional<std::string> g2_infeasibility(const ConstructionParams& p) {
    if (auto why = common_infeasibility(p)) return why;
    if (2 * p.s > class_a(p.n, p.a))
        return "class A (" + std::to_string(class_a(p.n, p.a)) + ") cannot hold " +
               std::to_string(2 * p.s) + " matching vertices";
    if (class_b(p.n, p.a) < 1) return "class B is empty";
    return std::nullopt;
}

Graph build_g1(const ConstructionParams& p) {
    if (auto why = g1_infeasibility(p)) throw Infeasible("g1: " + *why);
    Graph g = two_class_base(p.n, p.a);
    const int u1 = class_a(p.n, p.a);
    for (int i = 0; i < p.s - 1; ++i) g.add_edge(2 * i, 2 * i + 1);
    g.add_edge(u1, u1 + 1);
    const auto al = alpha(p.n, p.s, p.t, p.a);
    for (int i = 0; i < al; ++i) g.remove_edge(u1, 2 * i);
    return g;
}

Graph build_g2(const ConstructionParams& p) {
    if (auto why = g2_infeasibility(p)) throw Infeasible("g2: " + *why);
    Graph g = two_class_base(p.n, p.a);
    const int u = class_a(p.n, p.a);
    for (int i = 0; i < p.s; ++i) g.add_edge(2 * i, 2 * i + 1);
    const auto al = alpha(p.n, p.s, p.t, p.a);
    for (int i = 0; i < al; ++i) g.remove_edge(u, 2 * i);
    return g;
}

Graph build_g3(int n, int r) {
    if (r < 2) throw Infeasible("g3: need r >= 2");
    if (n < 0 || n > kMaxVertices) throw Infeasible("g3: n outside 0..64");
    const auto sizes = balanced_sizes(n, r);
    if (sizes[1] < 2) throw Infeasible("g3: class V_2 has " + std::to_string(sizes[1]) + " < 2 vertices");
    Graph g = complete_multipartite(sizes);
    const int v1 = 0, v2 = 1, u1 = sizes[0], u2 = sizes[0] + 1;
    g.remove_edge(v1, u1);
    g.add_edge(v1, v2);
    g.add_edge(u1, u2);
    return g;
}

Graph build_g4(int n, int r, int t) {
    if (r < 1 || t < 0) throw Infeasible("g4: need r >= 1, t >= 0");
    if (n < 0 || n > kMaxVertices) throw Infeasible("g4: n outside 0..64");
    const auto sizes = balanced_sizes(n, r);
    if (sizes[0] < 2 * t)
        throw Infeasible("g4: matching of size " + std::to_string(t) + " does not fit in class of " +
                         std::to_string(sizes[0]));
    Graph g = complete_multipartite(sizes);
    for (int i = 0; i < t; ++i) g.add_edge(2 * i, 2 * i + 1);
    return g;
}

std::int64_t t3_g1_formula(int n, int s, int t, int a) {
    const auto al = alpha(n, s, t, a);
    if (al < 0) throw Infeasible("g1 formula: alpha < 0 at a=" + std::to_string(a));
    return std::int64_t{s - 1} * class_b(n, a) + class_a(n, a) - 2 * al;
}

std::int64_t t3_g2_formula(int n, int s, int t, int a) {
    const auto al = alpha(n, s, t, a);
    if (al < 0) throw Infeasible("g2 formula: alpha < 0 at a=" + std::to_string(a));
    return std::int64_t{s} * class_b(n, a) - al;
}

std::int64_t t3_formula(Family f, int n, int s, int t, int a) {
    return f == Family::G1 ? t3_g1_formula(n, s, t, a) : t3_g2_formula(n, s, t, a);
}

std::int64_t g3_clique_product(int n, int r) {
    const auto sizes = balanced_sizes(n, r);
    std::int64_t value = sizes[0] + sizes[1] - 2;
    for (int i = 2; i < r; ++i) value *= sizes[i];
    return value;
}

std::int64_t g3_clique_cases(int n, int r) {
    const std::int64_t m = n / r;
    const int l = n % r;
    auto power = [](std::int64_t b, int e) {
        std::int64_t v = 1;
        while (e-- > 0) v *= b;
        return v;
    };
    if (l >= 2) return 2 * m * power(m + 1, l - 2) * power(m, r - l);
    if (l == 1) return (2 * m - 1) * power(m, r - 2);
    return (2 * m - 2) * power(m, r - 2);
}

std::int64_t g4_clique_count(int n, int r, int t) {
    const auto sizes = balanced_sizes(n, r);
    std::int64_t value = t;
    for (int i = 1; i < r; ++i) value *= sizes[i];
    return value;
}

std::optional<OptimizedA> try_optimize_a(int n, int s, int t, Family f, Feasibility mode) {
    require_st(s, t);
    const int a_max = static_cast<int>(std::sqrt(static_cast<double>(s))) + 1;
    std::optional<OptimizedA> best;
    for (int a = 0; a <= a_max; ++a) {
        if (alpha(n, s, t, a) < 0) continue;
        if (mode == Feasibility::Buildable) {
            const ConstructionParams p{n, 2, s, t, a};
            if ((f == Family::G1 ? g1_infeasibility(p) : g2_infeasibility(p))) continue;
        }
        const auto value = t3_formula(f, n, s, t, a);
        if (!best || value < best->count) best = OptimizedA{a, value};
    }
    return best;
}

OptimizedA optimize_a(int n, int s, int t, Family f, Feasibility mode) {
    auto best = try_optimize_a(n, s, t, f, mode);
    if (!best)
        throw Infeasible(std::string(family_name(f)) + ": no feasible a for n=" + std::to_string(n) +
                         ", s=" + std::to_string(s) + ", t=" + std::to_string(t));
    return *best;
}

TheoremBound theorem_bound_detail(int n, int s, int t, Feasibility mode) {
    const auto g1 = try_optimize_a(n, s, t, Family::G1, mode);
    const auto g2 = try_optimize_a(n, s, t, Family::G2, mode);
    if (!g1 && !g2)
        throw Infeasible("theorem bound: neither construction is feasible for n=" + std::to_string(n) +
                         ", s=" + std::to_string(s) + ", t=" + std::to_string(t));
    if (g1 && (!g2 || g1->count <= g2->count)) return {g1->count, Family::G1, g1->a};
    return {g2->count, Family::G2, g2->a};
}

std::int64_t theorem_bound(int n, int s, int t, Feasibility mode) {
    return theorem_bound_detail(n, s, t, mode).value;
}

std::int64_t conjecture11_value(int n, int s, int t) {
    require_st(s, t);
    return std::int64_t{s - 1} * ((n + 1) / 2) + n / 2 - 2 * std::int64_t{s - t};
}

std::vector<GapRow> conjecture_gap_report(int n_min, int n_max, int s_max, Feasibility mode) {
    std::vector<GapRow> rows;
    for (int n = n_min; n <= n_max; ++n) {
        for (int s = 2; s <= s_max; ++s) {
            for (int t = 1; t < s; ++t) {
                GapRow row;
                row.n = n;
                row.s = s;
                row.t = t;
                row.conjectured = conjecture11_value(n, s, t);
                row.g1 = try_optimize_a(n, s, t, Family::G1, mode);
                row.g2 = try_optimize_a(n, s, t, Family::G2, mode);
                if (row.g1) row.g1_gap = row.conjectured - row.g1->count;
                if (row.g1 || row.g2) {
                    row.bound = std::min(row.g1 ? row.g1->count : std::numeric_limits<std::int64_t>::max(), row.g2 ? row.g2->count : std::numeric_limits<std::int64_t>::max());
                    row.bound_gap = row.conjectured - *row.bound;
                }
                rows.push_back(row);
            }
        }
    }
    return rows;
}

} // namespace erstab
