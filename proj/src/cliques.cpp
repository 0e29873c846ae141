#include "erstab/cliques.hpp"

#include <stdexcept>

namespace erstab {

namespace {

// Triangle counting is the hot path for the exhaustive searches, so it gets a
// direct popcount loop instead of the generic expansion.
std::uint64_t count_triangles(const Graph& g, Mask within) {
    std::uint64_t total = 0;
    for (Mask mu = within; mu; mu &= mu - 1) {
        const int u = std::countr_zero(mu);
        const Mask nu = g.neighbours(u) & within & ~low_bits(u + 1);
        for (Mask mv = nu; mv; mv &= mv - 1) {
            const int v = std::countr_zero(mv);
            total += std::popcount(nu & g.neighbours(v) & ~low_bits(v + 1));
        }
    }
    return total;
}

} // namespace

std::uint64_t count_cliques_within(const Graph& g, int k, Mask within) {
    if (k < 1) throw std::invalid_argument("count_cliques: clique size must be >= 1");
    within &= g.vertex_mask();
    switch (k) {
    case 1:
        return std::popcount(within);
    case 2: {
        std::uint64_t twice = 0;
        for (Mask m = within; m; m &= m - 1) twice += std::popcount(g.neighbours(std::countr_zero(m)) & within);
        return twice / 2;
    }
    case 3:
        return count_triangles(g, within);
    default: {
        std::uint64_t total = 0;
        for_each_clique(g, k, within, [&](Mask) {
            ++total;
            return true;
        });
        return total;
    }
    }
}

std::uint64_t count_cliques(const Graph& g, int k) {
    return count_cliques_within(g, k, g.vertex_mask());
}

bool has_clique_within(const Graph& g, int k, Mask within) {
    if (k < 1) throw std::invalid_argument("has_clique_within: clique size must be >= 1");
    bool found = false;
    for_each_clique(g, k, within, [&](Mask) {
        found = true;
        return false;
    });
    return found;
}

} // namespace erstab
