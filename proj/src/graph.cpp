#include "eds/graph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace eds {

ParseError::ParseError(std::string msg, int line_no)
    : message("line " + std::to_string(line_no) + ": " + std::move(msg)), line(line_no) {}

Graph::Graph(int n, const EdgeList& edges) : adj_(n) {
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u == v)
            throw std::invalid_argument("self-loop " + std::to_string(u));
        if (!has_vertex(u) || !has_vertex(v))
            throw std::invalid_argument("vertex id out of range");
        edges_.push_back(make_edge(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_)
        std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v))
        return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

namespace {

bool blank_or_comment(const std::string& line, char comment_char) {
    for (char c : line) {
        if (c == comment_char)
            return true;
        if (!isspace(static_cast<unsigned char>(c)))
            return false;
    }
    return true;
}

} // namespace

Graph parse_dimacs(std::istream& in) {
    std::string line;
    int line_no = 0;
    int n = -1;
    long declared_m = -1;
    EdgeList edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c' || blank_or_comment(line, 'c'))
            continue;
        std::istringstream ls(line);
        char tag;
        ls >> tag;
        if (tag == 'p') {
            if (n >= 0)
                throw ParseError("duplicate problem line", line_no);
            std::string kind;
            ls >> kind >> n >> declared_m;
            if (ls.fail() || kind != "edge" || n < 0 || declared_m < 0)
                throw ParseError("malformed header, expected 'p edge <n> <m>'", line_no);
        } else if (tag == 'e') {
            if (n < 0)
                throw ParseError("edge line before problem line", line_no);
            int u, v;
            ls >> u >> v;
            if (ls.fail())
                throw ParseError("malformed edge line", line_no);
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("vertex id out of declared range", line_no);
            if (u == v)
                throw ParseError("self-loop", line_no);
            edges.push_back(make_edge(u - 1, v - 1));
        } else {
            throw ParseError(std::string("unknown line tag '") + tag + "'", line_no);
        }
    }
    if (n < 0)
        throw ParseError("missing problem line", line_no);
    return Graph(n, edges);
}

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    int max_id = -1;
    EdgeList edges;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.resize(hash);
        if (blank_or_comment(line, '#'))
            continue;
        std::istringstream ls(line);
        int u, v;
        ls >> u >> v;
        std::string rest;
        if (ls.fail() || (ls >> rest))
            throw ParseError("expected 'u v'", line_no);
        if (u < 0 || v < 0)
            throw ParseError("negative vertex id", line_no);
        if (u == v)
            throw ParseError("self-loop", line_no);
        max_id = std::max({max_id, u, v});
        edges.push_back(make_edge(u, v));
    }
    return Graph(max_id + 1, edges);
}

Graph parse_graph(std::istream& in, GraphFormat format) {
    return format == GraphFormat::Dimacs ? parse_dimacs(in) : parse_edge_list(in);
}

std::string write_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

BinaryMatrix parse_matrix(std::istream& in) {
    std::string line;
    int line_no = 1;
    if (!std::getline(in, line))
        throw ParseError("missing '<rows> <cols>' header", line_no);
    std::istringstream hs(line);
    BinaryMatrix m;
    hs >> m.rows >> m.cols;
    if (hs.fail() || m.rows < 0 || m.cols < 0)
        throw ParseError("malformed header, expected '<rows> <cols>'", line_no);
    for (int r = 0; r < m.rows; ++r) {
        ++line_no;
        if (!std::getline(in, line))
            throw ParseError("missing matrix row", line_no);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (static_cast<int>(line.size()) != m.cols)
            throw ParseError("row length mismatch", line_no);
        for (int c = 0; c < m.cols; ++c) {
            if (line[c] == '1')
                m.ones.emplace_back(r, c);
            else if (line[c] != '0')
                throw ParseError("non-binary character", line_no);
        }
    }
    return m;
}

std::vector<int> endpoint_set(const EdgeList& m) {
    std::vector<int> vs;
    vs.reserve(m.size() * 2);
    for (auto [u, v] : m) {
        vs.push_back(u);
        vs.push_back(v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

bool is_eds(const Graph& g, const EdgeList& m) {
    std::vector<char> covered(g.vertex_count(), 0);
    for (auto [u, v] : m) {
        if (!g.has_edge(u, v))
            throw std::invalid_argument("edge not in graph");
        covered[u] = covered[v] = 1;
    }
    for (auto [u, v] : g.edges())
        if (!covered[u] && !covered[v])
            return false;
    return true;
}

} // namespace eds
