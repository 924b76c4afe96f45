#pragma once

#include <cstdint>
#include <exception>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace eds {

// Edges are stored normalized: (u, v) with u < v.
using Edge = std::pair<int, int>;
using EdgeList = std::vector<Edge>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Simple undirected graph over vertex ids 0..n-1. Immutable once built:
// no self-loops, no parallel edges, adjacency lists kept sorted.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}
    Graph(int n, const EdgeList& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;
    bool has_vertex(int v) const { return v >= 0 && v < vertex_count(); }

    // Sorted, deduplicated, normalized.
    const EdgeList& edges() const { return edges_; }

private:
    std::vector<std::vector<int>> adj_;
    EdgeList edges_;
};

struct Solution {
    EdgeList edges;
    int size() const { return static_cast<int>(edges.size()); }
};

// 0/1 matrix given by its dimensions and the positions of its 1-entries.
struct BinaryMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::pair<int, int>> ones; // sorted (row, col) positions
};

enum class GraphFormat { Dimacs, EdgeList };

struct ParseError : std::exception {
    std::string message;
    int line;
    ParseError(std::string msg, int line_no);
    const char* what() const noexcept override { return message.c_str(); }
};

// DIMACS: "p edge <n> <m>" header, "e <u> <v>" edge lines (1-based ids),
// "c" comment lines. Edge list: one "u v" pair per line (0-based), "#"
// comments allowed. Duplicate edges are dropped, self-loops rejected.
Graph parse_graph(std::istream& in, GraphFormat format);
Graph parse_dimacs(std::istream& in);
Graph parse_edge_list(std::istream& in);

std::string write_dimacs(const Graph& g);
std::string write_edge_list(const Graph& g);

// "<rows> <cols>" then one row of '0'/'1' characters per line.
BinaryMatrix parse_matrix(std::istream& in);

// True iff every edge of g shares an endpoint with some edge of m,
// i.e. the endpoint set V(m) is a vertex cover of g. Throws if m
// contains an edge not present in g.
bool is_eds(const Graph& g, const EdgeList& m);

// Endpoint set of an edge list, sorted and deduplicated.
std::vector<int> endpoint_set(const EdgeList& m);

} // namespace eds
