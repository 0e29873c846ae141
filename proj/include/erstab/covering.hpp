#pragma once

#include "erstab/graph.hpp"

#include <cstdint>
#include <vector>

namespace erstab {

struct CoverResult {
    int size = 0;
    VertexSet witness;
};

struct CoverOptions {
    // Upper limit on materialized k-cliques; exceeding it raises BudgetExceeded.
    std::uint64_t clique_cap = 10'000'000;
};

// All k-cliques as vertex masks, in ordered-expansion order. Throws
// BudgetExceeded once more than `cap` cliques are found.
std::vector<Mask> list_cliques(const Graph& g, int k, std::uint64_t cap);

// tau_k(G): exact minimum vertex set meeting every k-clique. Branch and bound
// over the clique hypergraph, branching on the uncovered clique with the fewest
// undecided vertices; the lower bound is a greedy packing of uncovered cliques
// that are disjoint on undecided vertices.
CoverResult clique_cover_number(const Graph& g, int k, const CoverOptions& options = {});

// True iff every k-clique of g meets s.
bool is_cover(const Graph& g, int k, VertexSet s);

} // namespace erstab
