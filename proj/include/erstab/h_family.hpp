#pragma once

#include "erstab/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace erstab {

// A vertex of an H-family member described by its role inside its class: one
// endpoint of a class-edge (matched) or an ordinary vertex (plain). Within a
// class the matched vertices come first, pair e at 2e and 2e+1, then the plain
// ones.
struct HVertex {
    int cls = 0;
    bool matched = false;
    int index = 0; // class-edge index, or plain index
    int side = 0;  // 0/1 endpoint of the class-edge; unused for plain

    friend auto operator<=>(const HVertex&, const HVertex&) = default;
};

struct HMissingEdge {
    HVertex u; // u.cls < v.cls
    HVertex v;

    friend auto operator<=>(const HMissingEdge&, const HMissingEdge&) = default;
};

// Canonical description of a member of the H family: class sizes (largest
// first), per-class matching sizes, and the missing cross-edges up to
// relabelling of class-edges, their endpoints and plain vertices.
struct HSpec {
    std::vector<int> class_sizes;
    std::vector<int> class_edge_counts;
    std::vector<HMissingEdge> missing_edges;

    friend bool operator==(const HSpec&, const HSpec&) = default;
};

int vertex_index(const HSpec& spec, const HVertex& v);
Graph realize(const HSpec& spec);

// Streams every canonical member on n vertices with r classes, s class-edges,
// and t_r(n) + t edges. The missing cross-edge count is forced to
// sum_{i<j}|V_i||V_j| + s - t - t_r(n) and must lie in [0, s - t]. Members are
// produced in a fixed order: class-size vectors in reverse lexicographic order,
// then matching distributions in reverse lexicographic order, then canonical
// missing-edge patterns in increasing order. The callback returns false to stop.
void enumerate_h(int n, int r, int s, int t,
                 const std::function<bool(const HSpec&, const Graph&)>& visit);

std::uint64_t h_family_size(int n, int r, int s, int t);

struct HMinResult {
    std::uint64_t count = 0;
    HSpec witness;
    std::uint64_t members = 0;
};

// Minimum K_k count over the family, first minimizer in stream order as
// witness. nullopt when the family is empty.
std::optional<HMinResult> h_min(int n, int r, int s, int t, int k);

// Two-class lower bound on the triangle count of a member with class A the
// first class: |M_A||B| + |M_B||A| - c * e^c with c = 2 when both classes hold
// class-edges and c = 1 otherwise.
std::int64_t h_case_lower_bound(const HSpec& spec);

} // namespace erstab
