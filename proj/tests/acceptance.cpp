// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include "erstab/cliques.hpp"
#include "erstab/constructions.hpp"
#include "erstab/covering.hpp"
#include "erstab/graph6.hpp"
#include "erstab/partition.hpp"
#include "erstab/report.hpp"
#include "erstab/search.hpp"
#include "erstab/verify.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace erstab;

namespace {

struct Outcome {
    bool pass = true;
    std::string summary;
    std::vector<std::string> details;

    void fail(std::string what) {
        pass = false;
        details.push_back(std::move(what));
    }
};

void absorb(Outcome& out, const SweepOutcome& sweep) {
    for (const auto& f : sweep.failures) out.fail(f);
}

Outcome formulas() {
    Outcome out;
    const auto sweep = check_two_class_formulas(8, 40, 6, 16);
    absorb(out, sweep);
    out.summary = std::to_string(sweep.checked) + " constructions, " + std::to_string(sweep.failures.size()) +
                  " mismatches";
    return out;
}

Outcome g3_agreement() {
    Outcome out;
    std::uint64_t checked = 0;
    for (int r = 2; r <= 5; ++r) {
        const auto sweep = check_g3(r, 2 * r + 2, 24, 14);
        checked += sweep.checked;
        absorb(out, sweep);
    }
    out.summary = std::to_string(checked) + " graphs";
    return out;
}

Outcome classical() {
    Outcome out;
    int rows = 0;
    auto take = [&](ClassicalLaw law, int n_min, int t) {
        for (const auto& row : verify_classical(n_min, 7, law, t)) {
            ++rows;
            if (!row.holds)
                out.fail(std::string(law_name(law)) + " t=" + std::to_string(t) + " n=" + std::to_string(row.n) +
                         " min=" + (row.min_count ? std::to_string(*row.min_count) : "none"));
        }
    };
    take(ClassicalLaw::Mantel, 1, 1);
    take(ClassicalLaw::Rademacher, 4, 1);
    take(ClassicalLaw::LovaszSimonovits, 1, 1);
    take(ClassicalLaw::LovaszSimonovits, 1, 2);
    out.summary = std::to_string(rows) + " rows";
    return out;
}

Outcome supersaturation() {
    Outcome out;
    std::uint64_t pairs = 0;
    double slack = 1e300;
    for (int n = 1; n <= 7; ++n) {
        const auto s = check_supersaturation(n);
        pairs += s.pairs;
        if (s.pairs > 0) slack = std::min(slack, s.min_slack);
        for (const auto& f : s.failures) out.fail(f);
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "%llu (graph, x) pairs, min slack %.4f", static_cast<unsigned long long>(pairs),
                  slack);
    out.summary = buf;
    return out;
}

Outcome oracle_vs_bound() {
    Outcome out;
    SearchOptions options;
    options.threads = 8;
    for (int n : {7, 8}) {
        const auto cmp = compare_two_class_bound(n, 2, 1, options);
        const auto tag = "n=" + std::to_string(n);
        if (!cmp.report.min_count) {
            out.fail(tag + ": no graph meets the query");
            continue;
        }
        const auto min = static_cast<std::int64_t>(*cmp.report.min_count);
        if (!cmp.oracle_within_bound) out.fail(tag + ": oracle above bound");
        if (cmp.constructions.empty()) out.fail(tag + ": no construction witness");
        if (cmp.report.witnesses.empty()) out.fail(tag + ": no oracle witness");
        if (!out.summary.empty()) out.summary += "; ";
        out.summary += tag + " oracle " + std::to_string(min) + " bound " + std::to_string(cmp.bound) +
                       (min == cmp.bound ? " (equal)" : " (gap " + std::to_string(cmp.bound - min) + ")");
    }
    return out;
}

Outcome h_closure() {
    Outcome out;
    const auto sweep = check_h_closure(0, 30, 4);
    absorb(out, sweep);
    out.summary = std::to_string(sweep.checked) + " (n, s, t)";
    return out;
}

Outcome conjecture_gap() {
    Outcome out;
    const auto rows = conjecture_gap_report(8, 40, 8);
    int zero_rows = 0, positive_large_s = 0, g1_nonzero = 0, unbuildable = 0;
    for (const auto& row : rows) {
        if (row.s <= 4 && row.n % 2 == 0) {
            if (!row.bound_gap) {
                ++unbuildable;
                continue;
            }
            if (*row.bound_gap == 0)
                ++zero_rows;
            else
                out.fail("n=" + std::to_string(row.n) + " s=" + std::to_string(row.s) + " t=" +
                         std::to_string(row.t) + ": gap " + std::to_string(*row.bound_gap));
            if (row.g1_gap && *row.g1_gap != 0) ++g1_nonzero;
        }
        if (row.s >= 5 && row.bound_gap && *row.bound_gap > 0) ++positive_large_s;
    }
    if (positive_large_s == 0) out.fail("no positive gap for s >= 5");
    out.summary = "s<=4 even n: " + std::to_string(zero_rows) + " zero, " + std::to_string(out.details.size()) +
                  " nonzero, " + std::to_string(unbuildable) + " without construction; G1-only gap nonzero in " +
                  std::to_string(g1_nonzero) + "; s>=5 positive in " + std::to_string(positive_large_s);
    return out;
}

Outcome properties() {
    Outcome out;
    std::mt19937_64 rng(20240611);
    for (int n = 1; n <= 12; ++n)
        for (int i = 0; i < 10000; ++i) {
            const Graph g = oracle::random_graph(n, 0.15 + 0.7 * (i % 8) / 7.0, rng);
            const auto naive = oracle::naive_clique_counts(g);
            for (int k = 1; k <= n; ++k)
                if (count_cliques(g, k) != naive[k]) {
                    out.fail("clique count n=" + std::to_string(n) + " k=" + std::to_string(k) + " " +
                             graph6_encode(g));
                    break;
                }
        }
    for (int n = 1; n <= 9; ++n)
        for (int i = 0; i < 300; ++i) {
            const Graph g = oracle::random_graph(n, 0.3 + 0.1 * (i % 6), rng);
            for (int k = 2; k <= 4; ++k) {
                const auto c = clique_cover_number(g, k);
                if (c.size != oracle::brute_cover_number(g, k) || !is_cover(g, k, c.witness))
                    out.fail("cover n=" + std::to_string(n) + " k=" + std::to_string(k) + " " + graph6_encode(g));
            }
        }
    for (int n = 1; n <= 6; ++n)
        for (int i = 0; i < 200; ++i) {
            const Graph g = oracle::random_graph(n, 0.3 + 0.1 * (i % 6), rng);
            for (int r = 2; r <= 3; ++r)
                for (int x = 0; x <= 4; ++x)
                    if (is_x_far(g, r, x) != oracle::literal_x_far(g, r, x))
                        out.fail("x-far n=" + std::to_string(n) + " r=" + std::to_string(r) + " x=" +
                                 std::to_string(x) + " " + graph6_encode(g));
        }
    for (int n = 0; n <= 64; ++n)
        for (int i = 0; i < 200; ++i) {
            const Graph g = oracle::random_graph(n, 0.5, rng);
            if (graph6_decode(graph6_encode(g)) != g) out.fail("graph6 round trip n=" + std::to_string(n));
        }
    for (const SearchQuery q : {SearchQuery{7, 13, 3, 3, 2}, SearchQuery{6, 10, 3, 3, 0}, SearchQuery{7, 11, 3, 3, 1}}) {
        std::string reference;
        for (int threads : {1, 2, 8}) {
            SearchOptions options;
            options.threads = threads;
            const auto dump = search_report_json(min_cliques_exhaustive(q, options)).dump();
            if (reference.empty())
                reference = dump;
            else if (dump != reference)
                out.fail("search report differs at " + std::to_string(threads) + " threads, n=" +
                         std::to_string(q.n) + " m=" + std::to_string(q.m));
        }
    }
    out.summary = "clique counts, covers, x-far, graph6, search determinism";
    return out;
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"formula-enumeration agreement", formulas},
        {"G3 agreement", g3_agreement},
        {"classical laws", classical},
        {"supersaturation bound", supersaturation},
        {"oracle vs theorem bound", oracle_vs_bound},
        {"H-family closure", h_closure},
        {"conjecture gap", conjecture_gap},
        {"property suites", properties},
    };
    int failed = 0, index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = run();
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %d %s: %s (%.1fs)\n", out.pass ? "PASS" : "FAIL", index, name, out.summary.c_str(), secs);
        const std::size_t shown = std::min<std::size_t>(out.details.size(), 12);
        for (std::size_t i = 0; i < shown; ++i) std::printf("       %s\n", out.details[i].c_str());
        if (out.details.size() > shown) std::printf("       ... %zu more\n", out.details.size() - shown);
        std::fflush(stdout);
        failed += !out.pass;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
