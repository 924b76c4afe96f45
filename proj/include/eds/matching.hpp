#pragma once

#include "eds/graph.hpp"
#include "eds/search_state.hpp"

#include <optional>

namespace eds {

struct Matching {
    EdgeList edges; // vertex-disjoint
    int size() const { return static_cast<int>(edges.size()); }
};

// Maximum-cardinality matching in a general graph (Edmonds blossom
// contraction, augmenting BFS per free vertex). Terminates only when no
// free vertex admits an augmenting path.
Matching maximum_matching(const Graph& g);

// Mate array form: mate[v] = partner or -1.
std::vector<int> maximum_matching_mates(const Graph& g);

// Minimum edge set M inside G[cover u deferred] with every cover vertex
// an endpoint, no excluded endpoint, and at most one uncovered vertex
// per deferred clique. Requires a state with no undecided vertices.
// Returns nullopt iff some cover vertex has no incident edge avoiding
// the excluded set. When a solution exists its size is
// |cover| + |deferred| - mu, where mu is the maximum matching size of
// the clique-augmented graph built internally.
std::optional<Solution> min_constrained_eds(const SearchState& s);

} // namespace eds
