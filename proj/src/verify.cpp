#include "erstab/verify.hpp"

#include "erstab/cliques.hpp"
#include "erstab/constructions.hpp"
#include "erstab/covering.hpp"
#include "erstab/h_family.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace erstab {

namespace {

template <typename... Parts>
std::string describe(const Parts&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    return os.str();
}

} // namespace

SweepOutcome check_two_class_formulas(int n_min, int n_max, int s_max, int tau_max_n) {
    SweepOutcome out;
    for (int n = n_min; n <= n_max; ++n) {
        for (int s = 2; s <= s_max; ++s) {
            for (int t = 1; t < s; ++t) {
                for (int a = 0; alpha(n, s, t, a) >= 0; ++a) {
                    const ConstructionParams p{n, 2, s, t, a};
                    for (Family f : {Family::G1, Family::G2}) {
                        const bool buildable = !(f == Family::G1 ? g1_infeasibility(p) : g2_infeasibility(p));
                        if (!buildable) continue;
                        ++out.checked;
                        const Graph g = f == Family::G1 ? build_g1(p) : build_g2(p);
                        const auto tag = describe(family_name(f), "(n=", n, ",s=", s, ",t=", t, ",a=", a, ")");
                        const auto triangles = static_cast<std::int64_t>(count_cliques(g, 3));
                        const auto formula = t3_formula(f, n, s, t, a);
                        if (triangles != formula)
                            out.failures.push_back(describe(tag, ": T3 ", triangles, " != formula ", formula));
                        if (g.edge_count() != n * n / 4 + t)
                            out.failures.push_back(describe(tag, ": e ", g.edge_count(), " != ", n * n / 4 + t));
                        if (n <= tau_max_n) {
                            const auto tau = clique_cover_number(g, 3).size;
                            if (tau != s) out.failures.push_back(describe(tag, ": tau_3 ", tau, " != s"));
                        }
                    }
                }
            }
        }
    }
    return out;
}

SweepOutcome check_g3(int r, int n_min, int n_max, int tau_max_n) {
    SweepOutcome out;
    for (int n = n_min; n <= n_max; ++n) {
        ++out.checked;
        const Graph g = build_g3(n, r);
        const auto tag = describe("g3(n=", n, ",r=", r, ")");
        if (g.edge_count() != turan_edges(n, r) + 1)
            out.failures.push_back(describe(tag, ": e ", g.edge_count(), " != t_r(n)+1"));
        const auto cliques = static_cast<std::int64_t>(count_cliques(g, r + 1));
        if (cliques != g3_clique_product(n, r))
            out.failures.push_back(describe(tag, ": T ", cliques, " != product ", g3_clique_product(n, r)));
        if (cliques != g3_clique_cases(n, r))
            out.failures.push_back(describe(tag, ": T ", cliques, " != case formula ", g3_clique_cases(n, r)));
        if (n <= tau_max_n) {
            const auto tau = clique_cover_number(g, r + 1).size;
            if (tau != 2) out.failures.push_back(describe(tag, ": tau ", tau, " != 2"));
        }
    }
    return out;
}

SweepOutcome check_h_closure(int n_min, int n_max, int s_max) {
    SweepOutcome out;
    for (int s = 2; s <= s_max; ++s) {
        for (int t = 1; t < s; ++t) {
            for (int n = std::max(n_min, 4 * s + 4); n <= n_max; ++n) {
                ++out.checked;
                const auto tag = describe("H(n=", n, ",s=", s, ",t=", t, ")");
                const auto h = h_min(n, 2, s, t, 3);
                if (!h) {
                    out.failures.push_back(describe(tag, ": empty family"));
                    continue;
                }
                const auto bound = theorem_bound(n, s, t);
                if (static_cast<std::int64_t>(h->count) != bound)
                    out.failures.push_back(describe(tag, ": h_min ", h->count, " != theorem bound ", bound));
            }
        }
    }
    return out;
}

SupersatOutcome check_supersaturation(int n) {
    SupersatOutcome out;
    out.n = n;
    out.min_slack = std::numeric_limits<double>::infinity();
    const auto slots = edge_slots(n);
    const std::uint64_t total = std::uint64_t{1} << slots.size();
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        Graph g(n);
        for (std::size_t i = 0; i < slots.size(); ++i)
            if ((bits >> i) & 1) g.add_edge(slots[i].first, slots[i].second);
        ++out.graphs;
        const auto triangles = static_cast<double>(count_cliques(g, 3));
        const int distance = min_class_edges(g, 2).count;
        for (int x = 0; x <= distance; ++x) {
            ++out.pairs;
            const double slack = triangles - supersat_lower_bound(n, 2, g.edge_count(), x);
            out.min_slack = std::min(out.min_slack, slack);
            if (slack < 0 && out.failures.size() < 16)
                out.failures.push_back(describe("n=", n, " edges=", bits, " x=", x, ": T3 ", triangles,
                                                " below bound"));
        }
    }
    return out;
}

OracleComparison compare_two_class_bound(int n, int s, int t, const SearchOptions& options) {
    OracleComparison out;
    out.bound = theorem_bound(n, s, t);
    SearchOptions opts = options;
    for (int a = 0; alpha(n, s, t, a) >= 0; ++a) {
        const ConstructionParams p{n, 2, s, t, a};
        for (Family f : {Family::G1, Family::G2}) {
            if (f == Family::G1 ? g1_infeasibility(p) : g2_infeasibility(p)) continue;
            const Graph g = f == Family::G1 ? build_g1(p) : build_g2(p);
            if (g.edge_count() != n * n / 4 + t || !cover_number_at_least(g, 3, s)) continue;
            out.constructions.emplace_back(describe(family_name(f), "(a=", a, ")"), count_cliques(g, 3));
            opts.seeds.push_back(g);
        }
    }
    out.report = min_cliques_exhaustive({n, n * n / 4 + t, 3, 3, s}, opts);
    out.oracle_within_bound =
        out.report.min_count && static_cast<std::int64_t>(*out.report.min_count) <= out.bound;
    return out;
}

OracleComparison compare_g3_bound(int n, int r, const SearchOptions& options) {
    OracleComparison out;
    const Graph g3 = build_g3(n, r);
    out.bound = static_cast<std::int64_t>(count_cliques(g3, r + 1));
    SearchOptions opts = options;
    if (cover_number_at_least(g3, r + 1, 2)) {
        out.constructions.emplace_back("g3", count_cliques(g3, r + 1));
        opts.seeds.push_back(g3);
    }
    const int m = static_cast<int>(turan_edges(n, r)) + 1;
    out.report = min_cliques_exhaustive({n, m, r + 1, r + 1, 2}, opts);
    out.oracle_within_bound =
        out.report.min_count && static_cast<std::int64_t>(*out.report.min_count) <= out.bound;
    return out;
}

} // namespace erstab
