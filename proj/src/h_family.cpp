#include "erstab/h_family.hpp"

#include "erstab/cliques.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace erstab {

int vertex_index(const HSpec& spec, const HVertex& v) {
    int offset = 0;
    for (int c = 0; c < v.cls; ++c) offset += spec.class_sizes[c];
    return v.matched ? offset + 2 * v.index + v.side
                     : offset + 2 * spec.class_edge_counts[v.cls] + v.index;
}

Graph realize(const HSpec& spec) {
    Graph g = complete_multipartite(spec.class_sizes);
    int offset = 0;
    for (std::size_t c = 0; c < spec.class_sizes.size(); ++c) {
        for (int e = 0; e < spec.class_edge_counts[c]; ++e) g.add_edge(offset + 2 * e, offset + 2 * e + 1);
        offset += spec.class_sizes[c];
    }
    for (const auto& m : spec.missing_edges) g.remove_edge(vertex_index(spec, m.u), vertex_index(spec, m.v));
    return g;
}

namespace {

using Pattern = std::vector<HMissingEdge>;

// First-appearance relabelling of class-edges, their endpoints and plain
// vertices, class by class.
Pattern relabel(const Pattern& edges, const std::vector<int>& order, int r) {
    std::vector<std::map<int, int>> edge_map(r), plain_map(r);
    std::vector<std::map<int, std::map<int, int>>> sides(r);
    auto map_vertex = [&](HVertex v) {
        if (v.matched) {
            auto& em = edge_map[v.cls];
            const int e = em.try_emplace(v.index, static_cast<int>(em.size())).first->second;
            auto& sm = sides[v.cls][e];
            const int sd = sm.try_emplace(v.side, static_cast<int>(sm.size())).first->second;
            return HVertex{v.cls, true, e, sd};
        }
        auto& pm = plain_map[v.cls];
        const int p = pm.try_emplace(v.index, static_cast<int>(pm.size())).first->second;
        return HVertex{v.cls, false, p, 0};
    };
    Pattern out;
    out.reserve(edges.size());
    for (int i : order) {
        const HVertex u = map_vertex(edges[i].u);
        const HVertex v = map_vertex(edges[i].v);
        out.push_back({u, v});
    }
    return out;
}

Pattern canonical_form(const Pattern& edges, int r) {
    std::vector<int> order(edges.size());
    std::iota(order.begin(), order.end(), 0);
    Pattern best;
    do {
        Pattern candidate = relabel(edges, order, r);
        if (best.empty() || candidate < best) best = std::move(candidate);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

void descending_sizes(int remaining, int parts, int cap, std::vector<int>& cur,
                      const std::function<void(const std::vector<int>&)>& emit) {
    if (parts == 0) {
        if (remaining == 0) emit(cur);
        return;
    }
    for (int x = std::min(cap, remaining); x >= 0; --x) {
        if (static_cast<long>(x) * parts < remaining) break;
        cur.push_back(x);
        descending_sizes(remaining - x, parts - 1, x, cur, emit);
        cur.pop_back();
    }
}

void distributions(int remaining, std::size_t cls, const std::vector<int>& sizes, std::vector<int>& cur,
                   const std::function<void(const std::vector<int>&)>& emit) {
    if (cls + 1 == sizes.size()) {
        if (2 * remaining <= sizes[cls]) {
            cur.push_back(remaining);
            emit(cur);
            cur.pop_back();
        }
        return;
    }
    for (int x = std::min(remaining, sizes[cls] / 2); x >= 0; --x) {
        cur.push_back(x);
        distributions(remaining - x, cls + 1, sizes, cur, emit);
        cur.pop_back();
    }
}

std::set<Pattern> missing_patterns(const std::vector<int>& sizes, const std::vector<int>& matched,
                                   std::int64_t missing) {
    const int r = static_cast<int>(sizes.size());
    int used_classes = 0;
    for (int m : matched) used_classes += m > 0 ? 1 : 0;
    const bool both_ends = used_classes >= 2;

    std::vector<std::vector<HVertex>> roles(r);
    for (int c = 0; c < r; ++c) {
        for (int e = 0; e < matched[c]; ++e)
            for (int sd = 0; sd < 2; ++sd) roles[c].push_back({c, true, e, sd});
        if (!both_ends) {
            const int plain = static_cast<int>(std::min<std::int64_t>(sizes[c] - 2 * matched[c], missing));
            for (int p = 0; p < plain; ++p) roles[c].push_back({c, false, p, 0});
        }
    }
    Pattern candidates;
    for (int ci = 0; ci < r; ++ci)
        for (int cj = ci + 1; cj < r; ++cj)
            for (const auto& u : roles[ci])
                for (const auto& v : roles[cj]) {
                    const bool ok = both_ends ? (u.matched && v.matched) : (u.matched || v.matched);
                    if (ok) candidates.push_back({u, v});
                }

    std::set<Pattern> out;
    const auto k = static_cast<std::size_t>(missing);
    if (k > candidates.size()) return out;
    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    Pattern chosen(k);
    for (;;) {
        for (std::size_t i = 0; i < k; ++i) chosen[i] = candidates[pick[i]];
        out.insert(canonical_form(chosen, r));
        // next k-combination in lexicographic order
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == candidates.size() - k + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

} // namespace

void enumerate_h(int n, int r, int s, int t, const std::function<bool(const HSpec&, const Graph&)>& visit) {
    if (!(0 < t && t < s)) throw std::invalid_argument("enumerate_h: need 0 < t < s");
    if (r < 2) throw std::invalid_argument("enumerate_h: need r >= 2");
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("enumerate_h: n outside 0..64");
    const std::int64_t target_edges = turan_edges(n, r) + t;

    bool stop = false;
    std::vector<int> cur;
    descending_sizes(n, r, n, cur, [&](const std::vector<int>& sizes) {
        if (stop) return;
        const std::int64_t missing = cross_pair_count(sizes) + s - target_edges;
        if (missing < 0 || missing > s - t) return;
        std::vector<int> dist;
        distributions(s, 0, sizes, dist, [&](const std::vector<int>& matched) {
            if (stop) return;
            for (const auto& pattern : missing_patterns(sizes, matched, missing)) {
                HSpec spec{sizes, matched, pattern};
                if (!visit(spec, realize(spec))) {
                    stop = true;
                    return;
                }
            }
        });
    });
}

std::uint64_t h_family_size(int n, int r, int s, int t) {
    std::uint64_t total = 0;
    enumerate_h(n, r, s, t, [&](const HSpec&, const Graph&) {
        ++total;
        return true;
    });
    return total;
}

std::optional<HMinResult> h_min(int n, int r, int s, int t, int k) {
    std::optional<HMinResult> best;
    std::uint64_t members = 0;
    enumerate_h(n, r, s, t, [&](const HSpec& spec, const Graph& g) {
        ++members;
        const auto count = count_cliques(g, k);
        if (!best || count < best->count) best = HMinResult{count, spec, 0};
        return true;
    });
    if (best) best->members = members;
    return best;
}

std::int64_t h_case_lower_bound(const HSpec& spec) {
    if (spec.class_sizes.size() != 2) throw std::invalid_argument("h_case_lower_bound: two classes only");
    const std::int64_t a = spec.class_sizes[0], b = spec.class_sizes[1];
    const std::int64_t ma = spec.class_edge_counts[0], mb = spec.class_edge_counts[1];
    const auto missing = static_cast<std::int64_t>(spec.missing_edges.size());
    const std::int64_t per_missing = (ma > 0 && mb > 0) ? 2 : 1;
    return ma * b + mb * a - per_missing * missing;
}

} // namespace erstab
