#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace erstab {

inline constexpr int kMaxVertices = 64;

using Mask = std::uint64_t;

constexpr Mask low_bits(int count) noexcept {
    return count >= 64 ? ~Mask{0} : (Mask{1} << count) - 1;
}

constexpr Mask bit(int v) noexcept { return Mask{1} << v; }

// A set of vertices of some graph, stored as a bit mask.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(Mask bits) : bits_(bits) {}

    static VertexSet of(std::initializer_list<int> vertices) {
        VertexSet s;
        for (int v : vertices) s.insert(v);
        return s;
    }

    constexpr Mask bits() const noexcept { return bits_; }
    constexpr bool contains(int v) const noexcept { return (bits_ >> v) & 1; }
    constexpr int size() const noexcept { return std::popcount(bits_); }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr void insert(int v) noexcept { bits_ |= bit(v); }
    constexpr void erase(int v) noexcept { bits_ &= ~bit(v); }

    std::vector<int> to_vector() const;

    friend constexpr bool operator==(VertexSet, VertexSet) = default;

private:
    Mask bits_ = 0;
};

using Edge = std::pair<int, int>;

// Simple undirected graph on at most 64 vertices. Row v of the adjacency holds
// the neighbours of v as a bit mask. Values are immutable once built except via
// the explicit with_edge/without_edge copies.
class Graph {
public:
    Graph() = default;

    // Empty graph on n vertices. Throws std::invalid_argument for n outside 0..64.
    explicit Graph(int n);

    int order() const noexcept { return n_; }
    int edge_count() const noexcept;
    Mask neighbours(int v) const noexcept { return adj_[v]; }
    int degree(int v) const noexcept { return std::popcount(adj_[v]); }
    bool adjacent(int u, int v) const noexcept { return (adj_[u] >> v) & 1; }
    Mask vertex_mask() const noexcept { return low_bits(n_); }

    // Edges as (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;
    Graph induced_without(VertexSet removed) const;

    // In-place mutation for builders. Both validate endpoints.
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    friend bool operator==(const Graph& a, const Graph& b) noexcept {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    void check_pair(int u, int v) const;

    int n_ = 0;
    std::array<Mask, kMaxVertices> adj_{};
};

// Builds a graph from an edge list; duplicate pairs collapse to one edge.
// Throws std::invalid_argument on n > 64, a loop, or an out-of-range endpoint.
Graph from_edges(int n, std::span<const Edge> edges);
Graph from_edges(int n, std::initializer_list<Edge> edges);

// Complete multipartite graph; class i occupies the next sizes[i] indices.
Graph complete_multipartite(std::span<const int> sizes);
Graph complete_multipartite(std::initializer_list<int> sizes);

// Class sizes of the balanced r-partition of n, largest first.
std::vector<int> balanced_sizes(int n, int r);

// t_r(n): edge count of the complete balanced r-partite graph on n vertices.
std::int64_t turan_edges(int n, int r);

// Sum over class pairs of |V_i||V_j|.
std::int64_t cross_pair_count(std::span<const int> sizes);

} // namespace erstab
