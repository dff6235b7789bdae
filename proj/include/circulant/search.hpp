#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "circulant/graph_spec.hpp"

namespace circulant {

struct SearchOptions {
    int threads = 0;                      // 0 = available parallelism
    std::int64_t budget = 100'000'000;    // cap on raw candidate generator sets
    bool progress = false;                // checkpoint lines to stderr
};

// Result of an exhaustive scan for the largest order admitting diameter <= k.
// witnesses holds one canonical representative per multiplier class, in
// lexicographic order, so multiplier_classes == witnesses.size(). explored
// counts every candidate generator set enumerated across all scanned orders.
struct SearchReport {
    int degree = 0;
    std::int64_t diameter = 0;
    std::int64_t n_max = 0;
    std::int64_t best_order = 0;          // 0 when no order in range works
    std::vector<GraphSpec> witnesses;
    std::int64_t multiplier_classes = 0;
    std::int64_t explored = 0;

    std::string to_json() const;
};

// BFS eccentricity of vertex 0; equals the diameter by vertex transitivity.
// Throws DisconnectedGraph.
std::int64_t graph_diameter(const GraphSpec& spec);

// Image of the spec under multiplication by a unit of Z_n, generators folded
// back into (0, n/2). Defines an isomorphic graph.
GraphSpec multiplier_image(const GraphSpec& spec, std::int64_t unit);

// Lexicographically least generator set over all unit multiples; the half
// flag is preserved (n/2 is fixed by every unit). Idempotent and constant on
// multiplier orbits.
GraphSpec canonical_form(const GraphSpec& spec);

// Number of raw generator-set candidates of the right dimension on n vertices
// (saturates at INT64_MAX); used for budget checks.
std::int64_t candidate_count(int degree, std::int64_t n);

// Scan n = n_max, n_max-1, ... downward; at each order enumerate generator
// sets of dimension floor(degree/2) (odd degree forces even n and the half
// element), keep those with BFS diameter <= k, and stop at the first order
// with a witness. Deterministic result independent of worker count.
// Throws RangeTooLarge when the raw candidate space exceeds options.budget.
SearchReport extremal_search(int degree, std::int64_t diameter, std::int64_t n_max,
                             const SearchOptions& options = {});

// First generator set in lexicographic order with BFS diameter exactly k on
// n vertices (equivalently the canonical-form witness: multiplier images of
// later sets cannot precede it), or nullopt. Throws RangeTooLarge once the
// scan itself exceeds the budget.
std::optional<GraphSpec> find_witness(int degree, std::int64_t diameter, std::int64_t n,
                                      const SearchOptions& options = {});

// find_witness with an acceptance predicate evaluated on diameter hits in
// enumeration order. The catalog uses it to skip structurally exceptional
// witnesses (one order-21 diameter-2 class contains a triangle).
std::optional<GraphSpec> find_witness_where(int degree, std::int64_t diameter, std::int64_t n,
                                            const std::function<bool(const GraphSpec&)>& keep,
                                            const SearchOptions& options = {});

}  // namespace circulant
