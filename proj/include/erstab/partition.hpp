#pragma once

#include "erstab/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace erstab {

// Assignment of each vertex to one of r classes.
struct RPartition {
    int r = 0;
    std::vector<int> labels;

    // Labels v < first_size get class 0, the next block class 1, and so on.
    static RPartition from_sizes(std::span<const int> sizes);

    int order() const noexcept { return static_cast<int>(labels.size()); }
    Mask class_mask(int c) const;
    std::vector<int> class_sizes() const;

    // Throws std::invalid_argument unless labels cover exactly g's vertices and lie in 0..r-1.
    void validate_for(const Graph& g) const;

    friend bool operator==(const RPartition&, const RPartition&) = default;
};

struct EdgeClassification {
    std::vector<Edge> class_edges;
    std::vector<Edge> cross_edges;
    std::vector<Edge> missing_cross_edges;
};

EdgeClassification classify_edges(const Graph& g, const RPartition& p);

// Vertices incident to at least one class-edge.
Mask class_edge_endpoints(const Graph& g, const RPartition& p);

struct PartitionOptions {
    bool exact = true;
    // Cap on r^n / r!, the size of the canonical colouring space.
    std::uint64_t budget = std::uint64_t{1} << 15;
};

struct MinClassEdges {
    int count = 0;
    RPartition witness;
    bool exact = true; // false: local-search upper bound
};

// Minimum number of class-edges over all r-partitions (for r = 2 this is
// e(G) - maxcut(G)). Exact mode enumerates colourings with vertex 0 pinned to
// class 0 and classes opened in first-use order, and raises BudgetExceeded
// when r^n/r! exceeds the budget. Non-exact mode runs a deterministic local
// search and flags the result as an upper bound.
MinClassEdges min_class_edges(const Graph& g, int r, const PartitionOptions& options = {});

// G is x-far from r-partite iff at least x edge deletions are needed to make
// it r-colourable, i.e. min_class_edges(g, r) >= x. Requires exact mode.
bool is_x_far(const Graph& g, int r, int x, const PartitionOptions& options = {});

// n^{r-1} / (e^{2r} r!) * (m + x - (1 - 1/r) n^2 / 2), unrounded; values <= 0 are vacuous.
double supersat_lower_bound(int n, int r, std::int64_t m, std::int64_t x);

// 2 s r! e^{2r}: the far-ness level above which the supersaturation bound alone
// already forces s n^{r-1} cliques. Informational only.
double proof_far_threshold(int s, int r);

// Adds the lexicographically least missing cross-edge uv with neither endpoint
// on a class-edge and removes the lexicographically least cross-edge xy with
// exactly one endpoint on a class-edge. nullopt when either does not exist.
std::optional<Graph> flip_step(const Graph& g, const RPartition& p);

// Adds every missing cross-edge, then removes e^c cross-edges M so that each
// edge of M joins class-edge endpoints in different classes and every
// class-edge meets M at no more than one of its endpoints. M is the
// lexicographically first such set. Throws Infeasible if the class-edges are
// not a matching spanning at least two classes, if e^c exceeds
// (class-edge count - 1), or if no M exists.
Graph redistribute_missing_edges(const Graph& g, const RPartition& p);

} // namespace erstab
