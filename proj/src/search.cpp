#include "erstab/search.hpp"

#include "erstab/cliques.hpp"
#include "erstab/errors.hpp"
#include "erstab/graph6.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <stdexcept>
#include <thread>

namespace erstab {

namespace {

constexpr std::uint64_t kShardSize = std::uint64_t{1} << 16;
constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

struct ShardResult {
    std::uint64_t min = kNone;
    std::uint64_t minimizers = 0;
    std::vector<Graph> witnesses;
    std::uint64_t tau_checks = 0;
};

// Colex unranking of an m-subset of {0..N-1}.
void unrank(std::uint64_t rank, int slots, int m, std::vector<int>& out) {
    out.assign(m, 0);
    int upper = slots;
    for (int i = m; i >= 1; --i) {
        int c = i - 1;
        while (c + 1 < upper && binomial(c + 1, i) <= rank) ++c;
        out[i - 1] = c;
        rank -= binomial(c, i);
        upper = c;
    }
}

// Advances to the next subset in colex order; false after the last one.
bool next_colex(std::vector<int>& c, int slots) {
    const int m = static_cast<int>(c.size());
    for (int i = 0; i < m; ++i) {
        const int limit = (i + 1 < m) ? c[i + 1] : slots;
        if (c[i] + 1 < limit) {
            ++c[i];
            for (int j = 0; j < i; ++j) c[j] = j;
            return true;
        }
    }
    return false;
}

void lower_incumbent(std::atomic<std::uint64_t>& incumbent, std::uint64_t value) {
    std::uint64_t cur = incumbent.load(std::memory_order_relaxed);
    while (value < cur && !incumbent.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
    }
}

} // namespace

std::vector<Edge> edge_slots(int n) {
    std::vector<Edge> slots;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) slots.emplace_back(i, j);
    return slots;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 value = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        value = value * (n - k + i) / i;
        if (value > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(value);
}

bool cover_number_at_least(const Graph& g, int order, int min_tau) {
    if (min_tau <= 0) return true;
    const int n = g.order();
    const int size = min_tau - 1;
    if (size >= n) return false; // the whole vertex set already covers
    const Mask all = g.vertex_mask();
    if (size == 0) return has_clique_within(g, order, all);
    // Gosper's hack over size-element subsets of n vertices.
    for (Mask s = low_bits(size);;) {
        if (!has_clique_within(g, order, all & ~s)) return false;
        const Mask c = s & (~s + 1);
        const Mask r = s + c;
        if (r == 0) break;
        const Mask next = (((r ^ s) >> 2) / c) | r;
        if (n < 64 && (next >> n) != 0) break;
        s = next;
    }
    return true;
}

SearchReport min_cliques_exhaustive(const SearchQuery& query, const SearchOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    if (query.n < 1 || query.n > kMaxVertices) throw std::invalid_argument("search: n outside 1..64");
    const int slots = query.n * (query.n - 1) / 2;
    if (query.m < 0 || query.m > slots) throw std::invalid_argument("search: m outside 0..n(n-1)/2");
    if (query.k < 1 || query.cover_order < 1) throw std::invalid_argument("search: clique orders must be >= 1");

    SearchReport report;
    report.query = query;
    report.witness_cap = options.witness_cap;
    report.subsets = binomial(slots, query.m);
    if (report.subsets > options.budget)
        throw BudgetExceeded("search needs C(" + std::to_string(slots) + "," + std::to_string(query.m) + ") = " +
                                 std::to_string(report.subsets) + " subsets, budget " + std::to_string(options.budget),
                             report.subsets, options.budget);

    std::atomic<std::uint64_t> incumbent{kNone};
    for (const Graph& seed : options.seeds) {
        if (seed.order() != query.n || seed.edge_count() != query.m) continue;
        if (!cover_number_at_least(seed, query.cover_order, query.min_tau)) continue;
        const auto value = count_cliques(seed, query.k);
        if (!report.seed_bound || value < *report.seed_bound) report.seed_bound = value;
    }
    if (report.seed_bound) incumbent = *report.seed_bound;

    const auto all_slots = edge_slots(query.n);
    const std::uint64_t shard_count = (report.subsets + kShardSize - 1) / kShardSize;
    std::vector<ShardResult> shards(shard_count);
    std::atomic<std::uint64_t> next_shard{0};

    auto worker = [&] {
        std::vector<int> comb;
        for (;;) {
            const std::uint64_t shard = next_shard.fetch_add(1);
            if (shard >= shard_count) return;
            ShardResult& out = shards[shard];
            const std::uint64_t first = shard * kShardSize;
            const std::uint64_t last = std::min(report.subsets, first + kShardSize);
            unrank(first, slots, query.m, comb);
            for (std::uint64_t rank = first; rank < last; ++rank) {
                Graph g(query.n);
                for (int idx : comb) g.add_edge(all_slots[idx].first, all_slots[idx].second);
                const auto count = count_cliques(g, query.k);
                if (count <= out.min && count <= incumbent.load(std::memory_order_relaxed)) {
                    bool feasible = true;
                    if (query.min_tau > 0) {
                        ++out.tau_checks;
                        feasible = cover_number_at_least(g, query.cover_order, query.min_tau);
                    }
                    if (feasible) {
                        if (count < out.min) {
                            out.min = count;
                            out.minimizers = 0;
                            out.witnesses.clear();
                            lower_incumbent(incumbent, count);
                        }
                        ++out.minimizers;
                        if (out.witnesses.size() < options.witness_cap) out.witnesses.push_back(g);
                    }
                }
                if (rank + 1 < last) next_colex(comb, slots);
            }
        }
    };

    const int threads = std::max(1, options.threads);
    std::vector<std::thread> pool;
    for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    std::uint64_t best = kNone;
    for (const auto& s : shards) best = std::min(best, s.min);
    for (const auto& s : shards) report.tau_checks += s.tau_checks;
    if (best != kNone) {
        report.min_count = best;
        for (const auto& s : shards) {
            if (s.min != best) continue;
            report.minimizers += s.minimizers;
            for (const auto& w : s.witnesses) {
                if (report.witnesses.size() < options.witness_cap) report.witnesses.push_back(graph6_encode(w));
            }
        }
        report.witnesses_truncated = report.minimizers > report.witnesses.size();
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

const char* law_name(ClassicalLaw law) {
    switch (law) {
    case ClassicalLaw::Mantel:
        return "mantel";
    case ClassicalLaw::Rademacher:
        return "rademacher";
    case ClassicalLaw::LovaszSimonovits:
        return "lovasz-simonovits";
    }
    return "?";
}

std::vector<ClassicalRow> verify_classical(int n_min, int n_max, ClassicalLaw law, int t,
                                           const SearchOptions& options) {
    if (law != ClassicalLaw::LovaszSimonovits) t = 1;
    std::vector<ClassicalRow> rows;
    for (int n = std::max(1, n_min); n <= n_max; ++n) {
        ClassicalRow row;
        row.n = n;
        row.m = n * n / 4 + t;
        switch (law) {
        case ClassicalLaw::Mantel:
            row.expected = 1;
            break;
        case ClassicalLaw::Rademacher:
            row.expected = n / 2;
            row.exact = true;
            break;
        case ClassicalLaw::LovaszSimonovits:
            row.expected = static_cast<std::uint64_t>(t) * (n / 2);
            break;
        }
        if (row.m > n * (n - 1) / 2) {
            row.holds = true;
            row.note = "skipped: m exceeds C(n,2)";
            rows.push_back(row);
            continue;
        }
        const auto report = min_cliques_exhaustive({n, row.m, 3, 3, 0}, options);
        row.min_count = report.min_count;
        row.holds = report.min_count &&
                    (row.exact ? *report.min_count == row.expected : *report.min_count >= row.expected);
        rows.push_back(row);
    }
    return rows;
}

} // namespace erstab
