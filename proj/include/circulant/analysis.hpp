#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "circulant/partition.hpp"

namespace circulant {

// Intersection-array rows summed over each level of the distance partition:
// back[l], same[l] and fwd[l] count the edge endpoints from level l into
// levels l-1, l and l+1 respectively. back[0] and fwd[k] are structurally
// absent and stored as 0 (rendered "-" in CSV).
//
// Invariants: back[l] + same[l] + fwd[l] = n_l * d, fwd[l] = back[l+1],
// and every same[l] is even.
struct TotalIntersectionArray {
    std::vector<std::int64_t> back;
    std::vector<std::int64_t> same;
    std::vector<std::int64_t> fwd;

    std::size_t levels() const { return back.size(); }
};

TotalIntersectionArray total_intersection_array(const LevelAssignment& assignment);

// Arbitrary undirected graph as adjacency lists, for fixtures such as the
// dodecahedron. Format: one line per vertex listing its neighbors,
// whitespace-separated; '#' starts a comment.
struct AdjacencyGraph {
    std::vector<std::vector<std::int32_t>> adj;

    std::int64_t order() const { return static_cast<std::int64_t>(adj.size()); }
};

AdjacencyGraph load_adjacency(std::istream& in);

// BFS levels of an adjacency graph around the given root.
// dist/profile/diameter as in LevelAssignment. Throws DisconnectedGraph.
struct RootedLevels {
    std::vector<std::int32_t> dist;
    std::int64_t diameter;
    std::vector<std::int64_t> profile;
};

RootedLevels rooted_levels(const AdjacencyGraph& g, std::int64_t root);

TotalIntersectionArray total_intersection_array(const AdjacencyGraph& g, std::int64_t root);

// Length of the shortest odd closed walk (= shortest odd cycle), computed as
// the distance from (0, even) to (0, odd) in the parity double cover.
// nullopt for bipartite graphs.
std::optional<std::int64_t> odd_girth(const GraphSpec& spec);

// counts[l][s] = number of level-l vertices with exactly s neighbors in
// level l-1 (type T_s); counts[0][0] = 1. t1_total = sum over l of
// counts[l][1].
struct TypeCensus {
    int degree;
    std::int64_t diameter;
    std::vector<std::vector<std::int64_t>> counts;
    std::int64_t t1_total;

    std::int64_t at(std::int64_t level, int s) const {
        if (level < 0 || level >= static_cast<std::int64_t>(counts.size())) return 0;
        if (s < 0 || s >= static_cast<int>(counts[level].size())) return 0;
        return counts[level][s];
    }
};

TypeCensus vertex_types(const LevelAssignment& assignment);

// Predicted number of type T_s vertices in a maximal level l.
// Even degree d = 2f:  C(f,s) * sum_{i=1}^{s} (-1)^{s-i} C(s,i) lmac(2i,l).
// Odd degree d = 2f+1: d at (s=1, l=1);
//                      VT(2f,s,l) + VT(2f,s-1,l-1) for l >= 2, where the
//                      s=1 case degenerates to 2f (the half element adds a
//                      T_1 vertex in level 1 only).
// Structurally impossible (s,l) combinations return 0.
std::int64_t vt_formula(int degree, int s, std::int64_t level);

// Total number of T_1 vertices as a linear function of the diameter:
// 2k (d=2), 2k+1 (d=3), 4k (d=4), 4k-1 (d=5), 4k / 4k+2 (d=6 by class),
// 4k-1 / 4k+1 (d=7 by class), 4k+4 (d=8), 4k+1 (d=9, both classes).
// Throws UnknownFamily when (degree, class) has no tabulated value.
std::int64_t t1_total_formula(int degree, std::int64_t diameter,
                              std::optional<int> class_id = std::nullopt);

}  // namespace circulant
