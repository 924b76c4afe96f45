#pragma once

#include "eds/graph.hpp"

#include <cstdint>
#include <random>

namespace eds {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph petersen_graph();

// Erdos-Renyi G(n, p).
Graph random_gnp(int n, double p, std::mt19937& rng);

// Random 3-regular graph by the pairing model (n must be even, n >= 4);
// resamples until the pairing is simple.
Graph random_cubic(int n, std::mt19937& rng);

// Graph number `mask` on n labeled vertices: bit i of mask selects the
// i-th pair in lexicographic order. Drives the exhaustive suites.
Graph graph_from_mask(int n, std::uint64_t mask);
int pair_count(int n);

BinaryMatrix random_matrix(int rows, int cols, double density, std::mt19937& rng);

} // namespace eds
