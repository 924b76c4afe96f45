#include "eds/reductions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace eds {

namespace {

bool dominated_by(const Graph& g, const std::set<Edge>& f, Edge e) {
    for (int end : {e.first, e.second})
        for (int w : g.neighbors(end))
            if (f.count(make_edge(end, w)))
                return true;
    return false;
}

} // namespace

Matching eds_to_maximal_matching(const Graph& g, const Solution& input) {
    if (!is_eds(g, input.edges))
        throw std::invalid_argument("eds_to_maximal_matching: input is not an eds");
    std::set<Edge> f(input.edges.begin(), input.edges.end());
    std::vector<int> deg(g.vertex_count(), 0);
    for (auto [u, v] : f) {
        ++deg[u];
        ++deg[v];
    }
    for (;;) {
        int u = -1;
        for (int v = 0; v < g.vertex_count() && u == -1; ++v)
            if (deg[v] >= 2)
                u = v;
        if (u == -1)
            break; // F is a matching, and it still dominates: maximal

        int w = -1;
        for (int nb : g.neighbors(u))
            if (f.count(make_edge(u, nb))) {
                w = nb;
                break;
            }
        Edge e = make_edge(u, w);
        f.erase(e);
        --deg[u];
        --deg[w];

        // does dropping e expose an edge at w?
        Edge exposed{-1, -1};
        for (int z : g.neighbors(w)) {
            Edge wz = make_edge(w, z);
            if (!dominated_by(g, f, wz)) {
                exposed = wz;
                break;
            }
        }
        if (exposed.first != -1) {
            f.insert(exposed);
            ++deg[exposed.first];
            ++deg[exposed.second];
        }
    }
    Matching out{EdgeList(f.begin(), f.end())};
    if (out.size() > input.size() || !is_eds(g, out.edges))
        throw std::logic_error("eds_to_maximal_matching: transformation broke the contract");
    return out;
}

std::optional<Matching> solve_maximal_matching(const Graph& g, int k, const SolveOptions& opts) {
    Report rep = solve_eds1(g, k, opts);
    if (!rep.decision)
        return std::nullopt;
    return eds_to_maximal_matching(g, *rep.witness);
}

Graph matrix_to_graph(const BinaryMatrix& m) {
    EdgeList edges;
    for (auto [r, c] : m.ones)
        edges.push_back({r, m.rows + c});
    return Graph(m.rows + m.cols, edges);
}

std::optional<MatrixDominationResult> solve_matrix_domination(const BinaryMatrix& m, int k,
                                                              const SolveOptions& opts) {
    Graph g = matrix_to_graph(m);
    Report rep = solve_eds1(g, k, opts);
    if (!rep.decision)
        return std::nullopt;
    MatrixDominationResult res;
    for (auto [u, v] : rep.witness->edges)
        res.selected.emplace_back(u, v - m.rows); // rows carry the smaller ids
    std::sort(res.selected.begin(), res.selected.end());
    res.report = std::move(rep);
    return res;
}

} // namespace eds
