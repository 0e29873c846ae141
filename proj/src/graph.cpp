#include "erstab/graph.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace erstab {

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    for (Mask m = bits_; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("vertex count " + std::to_string(n) + " outside 0..64");
}

int Graph::edge_count() const noexcept {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (Mask m = adj_[u] & ~low_bits(u + 1); m; m &= m - 1)
            out.emplace_back(u, std::countr_zero(m));
    return out;
}

void Graph::check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                    "} out of range for n=" + std::to_string(n_));
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
}

void Graph::add_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
}

Graph Graph::with_edge(int u, int v) const {
    Graph g = *this;
    g.add_edge(u, v);
    return g;
}

Graph Graph::without_edge(int u, int v) const {
    Graph g = *this;
    g.remove_edge(u, v);
    return g;
}

Graph Graph::induced_without(VertexSet removed) const {
    Graph g = *this;
    const Mask keep = ~removed.bits();
    for (int v = 0; v < n_; ++v) g.adj_[v] = removed.contains(v) ? 0 : (adj_[v] & keep);
    return g;
}

Graph from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph complete_multipartite(std::span<const int> sizes) {
    if (sizes.empty()) throw std::invalid_argument("complete_multipartite: no classes");
    long total = 0;
    for (int s : sizes) {
        if (s < 0) throw std::invalid_argument("complete_multipartite: negative class size");
        total += s;
    }
    if (total > kMaxVertices)
        throw std::invalid_argument("complete_multipartite: " + std::to_string(total) +
                                    " vertices exceeds capacity 64");
    Graph g(static_cast<int>(total));
    int start = 0;
    for (int s : sizes) {
        for (int u = start; u < start + s; ++u)
            for (int v = start + s; v < total; ++v) g.add_edge(u, v);
        start += s;
    }
    return g;
}

Graph complete_multipartite(std::initializer_list<int> sizes) {
    return complete_multipartite(std::span<const int>(sizes.begin(), sizes.size()));
}

std::vector<int> balanced_sizes(int n, int r) {
    if (r < 1 || n < 0) throw std::invalid_argument("balanced_sizes: need r >= 1, n >= 0");
    std::vector<int> sizes(r, n / r);
    for (int i = 0; i < n % r; ++i) ++sizes[i];
    return sizes;
}

std::int64_t cross_pair_count(std::span<const int> sizes) {
    std::int64_t total = 0, squares = 0;
    for (int s : sizes) {
        total += s;
        squares += std::int64_t{s} * s;
    }
    return (total * total - squares) / 2;
}

std::int64_t turan_edges(int n, int r) {
    const auto sizes = balanced_sizes(n, r);
    return cross_pair_count(sizes);
}

} // namespace erstab
