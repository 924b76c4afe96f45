#pragma once

#include "eds/graph.hpp"
#include "eds/matching.hpp"
#include "eds/solver.hpp"

#include <optional>

namespace eds {

// Shrinks an edge dominating set into a maximal matching of no larger
// size: repeatedly detach one edge at a vertex of degree >= 2 in F,
// swapping in an undominated edge when dropping it would expose one.
// Throws std::invalid_argument if F is not an eds of g.
Matching eds_to_maximal_matching(const Graph& g, const Solution& f);

// Maximal matching of size <= k, if one exists (its minimum size equals
// the minimum eds size, so this rides on the eds solver).
std::optional<Matching> solve_maximal_matching(const Graph& g, int k,
                                               const SolveOptions& opts = {});

struct MatrixDominationResult {
    std::vector<std::pair<int, int>> selected; // chosen 1-entries
    Report report;                             // underlying eds report
};

// Selects at most k 1-entries so that every 1-entry shares a row or a
// column with a selected one, via edge domination in the row/column
// incidence graph. nullopt when no such selection exists.
std::optional<MatrixDominationResult> solve_matrix_domination(const BinaryMatrix& m, int k,
                                                              const SolveOptions& opts = {});

// Row/column incidence graph: one vertex per row, one per column
// (columns shifted by the row count), one edge per 1-entry.
Graph matrix_to_graph(const BinaryMatrix& m);

} // namespace eds
