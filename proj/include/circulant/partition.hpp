#pragma once

#include <cstdint>
#include <vector>

#include "circulant/graph_spec.hpp"

namespace circulant {

// Distance partition of a connected circulant graph around vertex 0.
// dist[v] is the exact BFS distance of residue v; profile[l] counts the
// vertices at distance l, so profile = (1, n_1, ..., n_k) with k = diameter.
struct LevelAssignment {
    GraphSpec spec;
    std::vector<std::int32_t> dist;
    std::int64_t diameter;
    std::vector<std::int64_t> profile;
};

// Per-level defects D(l) = lmac(d,l) - n_l, with D(0) = 0.
using DefectProfile = std::vector<std::int64_t>;

// Breadth-first distance partition from vertex 0.
// Throws DisconnectedGraph when the connection set does not generate Z_n.
LevelAssignment distance_levels(const GraphSpec& spec);

// Defect vector of a profile against the level bound for the given degree.
// Throws NegativeDefect if any level exceeds lmac(d,l) -- the bound is
// proven, so that would be a computational bug.
DefectProfile defects_of_profile(int degree, const std::vector<std::int64_t>& profile);

DefectProfile level_defects(const LevelAssignment& assignment);

// Largest L such that D(l) = 0 for all l <= L.
std::int64_t maximal_prefix(const LevelAssignment& assignment);

// Sum of all level defects; for catalog graphs this equals
// mac_bound(d,k) - order.
std::int64_t total_defect(const LevelAssignment& assignment);

}  // namespace circulant
