#include "erstab/partition.hpp"

#include "erstab/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace erstab {

RPartition RPartition::from_sizes(std::span<const int> sizes) {
    RPartition p;
    p.r = static_cast<int>(sizes.size());
    for (int c = 0; c < p.r; ++c) p.labels.insert(p.labels.end(), sizes[c], c);
    return p;
}

Mask RPartition::class_mask(int c) const {
    Mask m = 0;
    for (int v = 0; v < order(); ++v)
        if (labels[v] == c) m |= bit(v);
    return m;
}

std::vector<int> RPartition::class_sizes() const {
    std::vector<int> sizes(r, 0);
    for (int c : labels) ++sizes[c];
    return sizes;
}

void RPartition::validate_for(const Graph& g) const {
    if (order() != g.order())
        throw std::invalid_argument("partition labels " + std::to_string(order()) +
                                    " vertices, graph has " + std::to_string(g.order()));
    if (r < 1) throw std::invalid_argument("partition needs r >= 1");
    for (int c : labels)
        if (c < 0 || c >= r) throw std::invalid_argument("partition label " + std::to_string(c) + " out of range");
}

EdgeClassification classify_edges(const Graph& g, const RPartition& p) {
    p.validate_for(g);
    EdgeClassification out;
    for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            const bool same = p.labels[u] == p.labels[v];
            if (g.adjacent(u, v))
                (same ? out.class_edges : out.cross_edges).emplace_back(u, v);
            else if (!same)
                out.missing_cross_edges.emplace_back(u, v);
        }
    }
    return out;
}

Mask class_edge_endpoints(const Graph& g, const RPartition& p) {
    p.validate_for(g);
    Mask out = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.neighbours(v) & p.class_mask(p.labels[v])) out |= bit(v);
    return out;
}

namespace {

double canonical_space(int n, int r) {
    double factorial = 1;
    for (int i = 2; i <= r; ++i) factorial *= i;
    return std::pow(static_cast<double>(r), n) / factorial;
}

class ExactPartitioner {
public:
    ExactPartitioner(const Graph& g, int r) : g_(g), r_(r), labels_(g.order(), 0), classes_(r, 0) {}

    MinClassEdges run() {
        best_ = g_.edge_count() + 1;
        if (g_.order() == 0) return {0, RPartition{r_, {}}, true};
        place(0, 0, 0);
        return {best_, RPartition{r_, best_labels_}, true};
    }

private:
    void place(int v, int opened, int running) {
        if (running >= best_) return;
        if (v == g_.order()) {
            best_ = running;
            best_labels_ = labels_;
            return;
        }
        const int limit = std::min(r_ - 1, opened);
        for (int c = 0; c <= limit; ++c) {
            const int added = std::popcount(g_.neighbours(v) & classes_[c]);
            labels_[v] = c;
            classes_[c] |= bit(v);
            place(v + 1, std::max(opened, c + 1), running + added);
            classes_[c] &= ~bit(v);
        }
    }

    const Graph& g_;
    int r_;
    std::vector<int> labels_;
    std::vector<Mask> classes_;
    std::vector<int> best_labels_;
    int best_ = 0;
};

MinClassEdges local_search(const Graph& g, int r) {
    const int n = g.order();
    RPartition p{r, std::vector<int>(n)};
    for (int v = 0; v < n; ++v) p.labels[v] = v % r;
    std::vector<Mask> classes(r);
    for (int c = 0; c < r; ++c) classes[c] = p.class_mask(c);
    for (bool moved = true; moved;) {
        moved = false;
        for (int v = 0; v < n; ++v) {
            const int cur = p.labels[v];
            int best = cur;
            int best_cost = std::popcount(g.neighbours(v) & classes[cur]);
            for (int c = 0; c < r; ++c) {
                const int cost = std::popcount(g.neighbours(v) & classes[c] & ~bit(v));
                if (cost < best_cost) {
                    best_cost = cost;
                    best = c;
                }
            }
            if (best != cur) {
                classes[cur] &= ~bit(v);
                classes[best] |= bit(v);
                p.labels[v] = best;
                moved = true;
            }
        }
    }
    int count = 0;
    for (auto [u, v] : g.edges())
        if (p.labels[u] == p.labels[v]) ++count;
    return {count, p, false};
}

} // namespace

MinClassEdges min_class_edges(const Graph& g, int r, const PartitionOptions& options) {
    if (r < 1) throw std::invalid_argument("min_class_edges: need r >= 1");
    if (!options.exact) return local_search(g, r);
    const double space = canonical_space(g.order(), r);
    if (space > static_cast<double>(options.budget))
        throw BudgetExceeded("exact partition search needs ~" + std::to_string(static_cast<std::uint64_t>(space)) +
                                 " colourings, budget " + std::to_string(options.budget),
                             static_cast<std::uint64_t>(space), options.budget);
    return ExactPartitioner(g, r).run();
}

bool is_x_far(const Graph& g, int r, int x, const PartitionOptions& options) {
    PartitionOptions exact = options;
    exact.exact = true;
    return min_class_edges(g, r, exact).count >= x;
}

double supersat_lower_bound(int n, int r, std::int64_t m, std::int64_t x) {
    double factorial = 1;
    for (int i = 2; i <= r; ++i) factorial *= i;
    const double nn = n;
    const double scale = std::pow(nn, r - 1) / (std::exp(2.0 * r) * factorial);
    return scale * (static_cast<double>(m) + static_cast<double>(x) - (1.0 - 1.0 / r) * nn * nn / 2.0);
}

double proof_far_threshold(int s, int r) {
    double factorial = 1;
    for (int i = 2; i <= r; ++i) factorial *= i;
    return 2.0 * s * factorial * std::exp(2.0 * r);
}

std::optional<Graph> flip_step(const Graph& g, const RPartition& p) {
    const auto cls = classify_edges(g, p);
    const Mask endpoints = class_edge_endpoints(g, p);
    auto on_class_edge = [&](int v) { return (endpoints >> v) & 1; };

    std::optional<Edge> add;
    for (auto [u, v] : cls.missing_cross_edges) {
        if (!on_class_edge(u) && !on_class_edge(v)) {
            add = Edge{u, v};
            break;
        }
    }
    if (!add) return std::nullopt;
    for (auto [x, y] : cls.cross_edges) {
        if (on_class_edge(x) != on_class_edge(y)) return g.with_edge(add->first, add->second).without_edge(x, y);
    }
    return std::nullopt;
}

namespace {

struct HostSearch {
    std::vector<Edge> candidates;
    std::vector<int> edge_of;  // class-edge index of each vertex, -1 if none
    std::vector<int> used_end; // per class-edge: vertex used by M, -1 if none
    std::vector<Edge> chosen;
    std::size_t target = 0;

    bool compatible(int v) const {
        const int e = edge_of[v];
        return used_end[e] < 0 || used_end[e] == v;
    }

    bool run(std::size_t from) {
        if (chosen.size() == target) return true;
        for (std::size_t i = from; i < candidates.size(); ++i) {
            auto [u, v] = candidates[i];
            if (!compatible(u) || !compatible(v)) continue;
            const int su = used_end[edge_of[u]], sv = used_end[edge_of[v]];
            used_end[edge_of[u]] = u;
            used_end[edge_of[v]] = v;
            chosen.push_back(candidates[i]);
            if (run(i + 1)) return true;
            chosen.pop_back();
            used_end[edge_of[u]] = su;
            used_end[edge_of[v]] = sv;
        }
        return false;
    }
};

} // namespace

Graph redistribute_missing_edges(const Graph& g, const RPartition& p) {
    const auto cls = classify_edges(g, p);
    const int n = g.order();

    std::vector<int> edge_of(n, -1);
    std::vector<bool> class_used(p.r, false);
    for (std::size_t i = 0; i < cls.class_edges.size(); ++i) {
        auto [u, v] = cls.class_edges[i];
        if (edge_of[u] >= 0 || edge_of[v] >= 0) throw Infeasible("redistribute: class-edges are not a matching");
        edge_of[u] = edge_of[v] = static_cast<int>(i);
        class_used[p.labels[u]] = true;
    }
    int used_classes = 0;
    for (bool b : class_used) used_classes += b ? 1 : 0;
    if (used_classes < 2) throw Infeasible("redistribute: class-edges occupy fewer than two classes");
    const std::size_t missing = cls.missing_cross_edges.size();
    if (missing + 1 > cls.class_edges.size())
        throw Infeasible("redistribute: " + std::to_string(missing) + " missing cross-edges exceed s-1 = " +
                         std::to_string(cls.class_edges.size() - 1));

    HostSearch search;
    search.edge_of = edge_of;
    search.used_end.assign(cls.class_edges.size(), -1);
    search.target = missing;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge_of[u] >= 0 && edge_of[v] >= 0 && p.labels[u] != p.labels[v]) search.candidates.emplace_back(u, v);
    if (!search.run(0)) throw Infeasible("redistribute: no admissible set of removals hosts the missing cross-edges");

    Graph out = g;
    for (auto [u, v] : cls.missing_cross_edges) out.add_edge(u, v);
    for (auto [u, v] : search.chosen) out.remove_edge(u, v);
    return out;
}

} // namespace erstab
