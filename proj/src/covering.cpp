#include "erstab/covering.hpp"

#include "erstab/cliques.hpp"
#include "erstab/errors.hpp"

#include <stdexcept>
#include <string>

namespace erstab {

std::vector<Mask> list_cliques(const Graph& g, int k, std::uint64_t cap) {
    std::vector<Mask> out;
    for_each_clique(g, k, [&](Mask c) {
        if (out.size() >= cap)
            throw BudgetExceeded("clique list exceeds cap of " + std::to_string(cap), out.size() + 1, cap);
        out.push_back(c);
        return true;
    });
    return out;
}

bool is_cover(const Graph& g, int k, VertexSet s) {
    if (k < 1) throw std::invalid_argument("is_cover: clique size must be >= 1");
    return !has_clique_within(g, k, g.vertex_mask() & ~s.bits());
}

namespace {

class HittingSetSolver {
public:
    explicit HittingSetSolver(std::vector<Mask> cliques) : cliques_(std::move(cliques)) {}

    CoverResult solve(Mask all_vertices) {
        // Greedy incumbent: add the vertex lying in the most uncovered cliques
        // (lowest index on ties) until everything is hit.
        Mask greedy = 0;
        for (;;) {
            int counts[kMaxVertices] = {};
            bool uncovered = false;
            for (Mask c : cliques_) {
                if (c & greedy) continue;
                uncovered = true;
                for (Mask m = c; m; m &= m - 1) ++counts[std::countr_zero(m)];
            }
            if (!uncovered) break;
            int best = -1;
            for (Mask m = all_vertices; m; m &= m - 1) {
                const int v = std::countr_zero(m);
                if (best < 0 || counts[v] > counts[best]) best = v;
            }
            greedy |= bit(best);
        }
        best_ = greedy;
        best_size_ = std::popcount(greedy);
        search(0, 0);
        return {best_size_, VertexSet(best_)};
    }

private:
    // Lower bound: disjoint (on undecided vertices) uncovered cliques each need a
    // distinct new vertex.
    int packing_bound(Mask chosen, Mask excluded) const {
        Mask used = 0;
        int packed = 0;
        for (Mask c : cliques_) {
            if (c & chosen) continue;
            const Mask free = c & ~excluded;
            if (free & used) continue;
            used |= free;
            ++packed;
        }
        return packed;
    }

    void search(Mask chosen, Mask excluded) {
        const int have = std::popcount(chosen);
        // Branch clique: uncovered, fewest undecided vertices, first in list order on ties.
        Mask branch = 0;
        int branch_free = kMaxVertices + 1;
        for (Mask c : cliques_) {
            if (c & chosen) continue;
            const int free = std::popcount(c & ~excluded);
            if (free == 0) return;
            if (free < branch_free) {
                branch_free = free;
                branch = c;
            }
        }
        if (branch_free > kMaxVertices) {
            if (have < best_size_) {
                best_size_ = have;
                best_ = chosen;
            }
            return;
        }
        if (have + packing_bound(chosen, excluded) >= best_size_) return;

        // Vertices in increasing index; later branches exclude the earlier picks.
        Mask tried = 0;
        for (Mask m = branch & ~excluded; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            search(chosen | bit(v), excluded | tried);
            tried |= bit(v);
        }
    }

    std::vector<Mask> cliques_;
    Mask best_ = 0;
    int best_size_ = 0;
};

} // namespace

CoverResult clique_cover_number(const Graph& g, int k, const CoverOptions& options) {
    if (k < 1) throw std::invalid_argument("clique_cover_number: clique size must be >= 1");
    auto cliques = list_cliques(g, k, options.clique_cap);
    if (cliques.empty()) return {};
    HittingSetSolver solver(std::move(cliques));
    return solver.solve(g.vertex_mask());
}

} // namespace erstab
