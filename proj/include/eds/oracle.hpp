#pragma once

#include "eds/graph.hpp"
#include "eds/search_state.hpp"

#include <optional>
#include <utility>

// Exhaustive ground-truth solvers. These exist to be obviously correct,
// not fast; each one guards its input size and enumerates candidate sets
// in increasing size so the first hit is a true minimum.
namespace eds::oracle {

// Minimum edge dominating set. Guard: at most 26 edges.
std::pair<int, Solution> brute_min_eds(const Graph& g);

// Minimum edge set M inside G[C u deferred] with C subset of V(M), no
// excluded endpoint, and at most one uncovered vertex per deferred
// clique. Requires a state with no undecided vertices; nullopt when no
// such M exists. Guard: at most 24 candidate edges.
std::optional<std::pair<int, Solution>> brute_min_constrained_eds(const SearchState& s);

// Minimum maximal matching. Guard: at most 26 edges.
std::pair<int, Solution> brute_min_maximal_matching(const Graph& g);

// Minimum set of 1-entries dominating every 1-entry (same row or same
// column). Guard: at most 20 ones.
std::pair<int, std::vector<std::pair<int, int>>> brute_matrix_domination(const BinaryMatrix& m);

// Maximum matching size by exhaustive search. Guard: at most 26 edges.
int brute_max_matching_size(const Graph& g);

} // namespace eds::oracle
