#include "eds/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace eds::oracle {

namespace {

void guard_edges(std::size_t m, std::size_t limit) {
    if (m > limit)
        throw std::invalid_argument("oracle guard: instance too large");
}

// Visits all index subsets of {0..m-1} in increasing size, smallest-size
// first, lexicographic within a size. Stops when visit returns true.
template <typename F>
bool for_subsets_by_size(int m, int max_size, F&& visit) {
    std::vector<int> idx;
    for (int s = 0; s <= std::min(m, max_size); ++s) {
        idx.resize(s);
        for (int i = 0; i < s; ++i)
            idx[i] = i;
        while (true) {
            if (visit(idx))
                return true;
            int i = s - 1;
            while (i >= 0 && idx[i] == m - s + i)
                --i;
            if (i < 0)
                break;
            ++idx[i];
            for (int j = i + 1; j < s; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    return false;
}

EdgeList pick(const EdgeList& edges, const std::vector<int>& idx) {
    EdgeList out;
    out.reserve(idx.size());
    for (int i : idx)
        out.push_back(edges[i]);
    return out;
}

bool is_matching(const EdgeList& m) {
    std::vector<int> vs;
    for (auto [u, v] : m) {
        vs.push_back(u);
        vs.push_back(v);
    }
    std::sort(vs.begin(), vs.end());
    return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

} // namespace

std::pair<int, Solution> brute_min_eds(const Graph& g) {
    const auto& edges = g.edges();
    guard_edges(edges.size(), 26);
    std::pair<int, Solution> result{-1, {}};
    for_subsets_by_size(static_cast<int>(edges.size()), static_cast<int>(edges.size()),
                        [&](const std::vector<int>& idx) {
                            EdgeList m = pick(edges, idx);
                            if (!is_eds(g, m))
                                return false;
                            result = {static_cast<int>(m.size()), Solution{std::move(m)}};
                            return true;
                        });
    // an edgeless graph is dominated by the empty set, so a hit always exists
    return result;
}

std::optional<std::pair<int, Solution>> brute_min_constrained_eds(const SearchState& s) {
    if (s.has_undecided())
        throw std::logic_error("brute_min_constrained_eds: undecided vertices remain");
    const Graph& g = s.graph();
    EdgeList candidates;
    for (auto [u, v] : g.edges())
        if (s.label(u) != Label::Excluded && s.label(v) != Label::Excluded)
            candidates.push_back({u, v});
    guard_edges(candidates.size(), 24);

    auto cover_set = s.vertices_with_label(Label::InCover);
    const auto& cliques = s.deferred_cliques();
    int required_cap = static_cast<int>(cover_set.size());
    for (const auto& q : cliques)
        required_cap += static_cast<int>(q.size());

    std::optional<std::pair<int, Solution>> result;
    for_subsets_by_size(
        static_cast<int>(candidates.size()), required_cap, [&](const std::vector<int>& idx) {
            EdgeList m = pick(candidates, idx);
            std::vector<char> covered(g.vertex_count(), 0);
            for (auto [u, v] : m)
                covered[u] = covered[v] = 1;
            for (int c : cover_set)
                if (!covered[c])
                    return false;
            for (const auto& q : cliques) {
                int uncovered = 0;
                for (int u : q)
                    if (!covered[u])
                        ++uncovered;
                if (uncovered > 1)
                    return false;
            }
            result = {static_cast<int>(m.size()), Solution{std::move(m)}};
            return true;
        });
    return result;
}

std::pair<int, Solution> brute_min_maximal_matching(const Graph& g) {
    const auto& edges = g.edges();
    guard_edges(edges.size(), 26);
    std::pair<int, Solution> result{-1, {}};
    for_subsets_by_size(static_cast<int>(edges.size()), static_cast<int>(edges.size()),
                        [&](const std::vector<int>& idx) {
                            EdgeList m = pick(edges, idx);
                            // a matching is maximal iff no edge can be added,
                            // i.e. it dominates every edge
                            if (!is_matching(m) || !is_eds(g, m))
                                return false;
                            result = {static_cast<int>(m.size()), Solution{std::move(m)}};
                            return true;
                        });
    return result;
}

std::pair<int, std::vector<std::pair<int, int>>> brute_matrix_domination(const BinaryMatrix& mat) {
    guard_edges(mat.ones.size(), 20);
    const auto& ones = mat.ones;
    std::pair<int, std::vector<std::pair<int, int>>> result{-1, {}};
    for_subsets_by_size(
        static_cast<int>(ones.size()), static_cast<int>(ones.size()),
        [&](const std::vector<int>& idx) {
            for (const auto& [r, c] : ones) {
                bool dominated = false;
                for (int i : idx)
                    if (ones[i].first == r || ones[i].second == c) {
                        dominated = true;
                        break;
                    }
                if (!dominated)
                    return false;
            }
            std::vector<std::pair<int, int>> sel;
            for (int i : idx)
                sel.push_back(ones[i]);
            result = {static_cast<int>(sel.size()), std::move(sel)};
            return true;
        });
    return result;
}

int brute_max_matching_size(const Graph& g) {
    const auto& edges = g.edges();
    guard_edges(edges.size(), 26);
    int best = 0;
    // greedy chosen-edge recursion over the edge list
    std::vector<char> used(g.vertex_count(), 0);
    auto rec = [&](auto&& self, std::size_t from, int size) -> void {
        best = std::max(best, size);
        for (std::size_t i = from; i < edges.size(); ++i) {
            auto [u, v] = edges[i];
            if (used[u] || used[v])
                continue;
            used[u] = used[v] = 1;
            self(self, i + 1, size + 1);
            used[u] = used[v] = 0;
        }
    };
    rec(rec, 0, 0);
    return best;
}

} // namespace eds::oracle
