#pragma once

#include "erstab/graph.hpp"

#include <bit>
#include <cstdint>

namespace erstab {

namespace detail {

// Ordered expansion: a k-clique is visited once, from its lowest vertex upward.
// `candidates` holds vertices above the last chosen one that are adjacent to
// every chosen vertex.
template <typename Visit>
bool expand_cliques(const Graph& g, Mask chosen, Mask candidates, int remaining, Visit& visit) {
    if (remaining == 0) return visit(chosen);
    if (std::popcount(candidates) < remaining) return true;
    for (Mask m = candidates; m; m &= m - 1) {
        const int v = std::countr_zero(m);
        const Mask above = ~low_bits(v + 1);
        if (!expand_cliques(g, chosen | bit(v), candidates & g.neighbours(v) & above,
                            remaining - 1, visit))
            return false;
    }
    return true;
}

} // namespace detail

// Calls visit(mask) for every k-clique lying inside `within`. visit returns
// false to stop early; the function then returns false as well.
template <typename Visit>
bool for_each_clique(const Graph& g, int k, Mask within, Visit&& visit) {
    if (k < 1) return true;
    return detail::expand_cliques(g, Mask{0}, within & g.vertex_mask(), k, visit);
}

template <typename Visit>
bool for_each_clique(const Graph& g, int k, Visit&& visit) {
    return for_each_clique(g, k, g.vertex_mask(), std::forward<Visit>(visit));
}

// T_k(G), the number of copies of K_k. Throws std::invalid_argument for k < 1;
// k > n gives 0.
std::uint64_t count_cliques(const Graph& g, int k);

// Number of k-cliques whose vertices all lie in `within`.
std::uint64_t count_cliques_within(const Graph& g, int k, Mask within);

// True iff some k-clique lies entirely in `within`.
bool has_clique_within(const Graph& g, int k, Mask within);

} // namespace erstab
