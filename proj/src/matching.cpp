#include "eds/matching.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace eds {

namespace {

// Edmonds' algorithm with blossom shrinking via base[] relabeling.
// One BFS per augmentation attempt; O(V^3) overall, ample at kernel scale.
class BlossomMatcher {
public:
    explicit BlossomMatcher(const Graph& g)
        : g_(g), n_(g.vertex_count()), mate_(n_, -1), parent_(n_), base_(n_), reached_(n_) {}

    std::vector<int> run() {
        // greedy warm start keeps the augmenting phase short
        for (int v = 0; v < n_; ++v)
            if (mate_[v] == -1)
                for (int w : g_.neighbors(v))
                    if (mate_[w] == -1) {
                        mate_[v] = w;
                        mate_[w] = v;
                        break;
                    }
        bool augmented = true;
        while (augmented) {
            augmented = false;
            for (int v = 0; v < n_; ++v)
                if (mate_[v] == -1 && try_augment(v))
                    augmented = true;
        }
        return mate_;
    }

private:
    bool try_augment(int root) {
        std::fill(reached_.begin(), reached_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        reached_[root] = 1;
        std::queue<int> queue;
        queue.push(root);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (int to : g_.neighbors(v)) {
                if (base_[v] == base_[to] || mate_[v] == to)
                    continue;
                if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
                    // odd cycle: contract the blossom at the common base
                    int stem = lowest_common_base(v, to);
                    std::vector<char> in_blossom(n_, 0);
                    mark_path(v, stem, to, in_blossom);
                    mark_path(to, stem, v, in_blossom);
                    for (int u = 0; u < n_; ++u)
                        if (in_blossom[base_[u]]) {
                            base_[u] = stem;
                            if (!reached_[u]) {
                                reached_[u] = 1;
                                queue.push(u);
                            }
                        }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (mate_[to] == -1) {
                        augment_along(to);
                        return true;
                    }
                    reached_[mate_[to]] = 1;
                    queue.push(mate_[to]);
                }
            }
        }
        return false;
    }

    int lowest_common_base(int a, int b) {
        std::vector<char> seen(n_, 0);
        for (int v = a;;) {
            v = base_[v];
            seen[v] = 1;
            if (mate_[v] == -1)
                break;
            v = parent_[mate_[v]];
        }
        for (int v = b;;) {
            v = base_[v];
            if (seen[v])
                return v;
            v = parent_[mate_[v]];
        }
    }

    void mark_path(int v, int stem, int child, std::vector<char>& in_blossom) {
        while (base_[v] != stem) {
            in_blossom[base_[v]] = 1;
            in_blossom[base_[mate_[v]]] = 1;
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    void augment_along(int v) {
        while (v != -1) {
            int pv = parent_[v];
            int next = mate_[pv];
            mate_[v] = pv;
            mate_[pv] = v;
            v = next;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> mate_;
    std::vector<int> parent_;
    std::vector<int> base_;
    std::vector<char> reached_;
};

} // namespace

std::vector<int> maximum_matching_mates(const Graph& g) {
    return BlossomMatcher(g).run();
}

Matching maximum_matching(const Graph& g) {
    auto mate = maximum_matching_mates(g);
    Matching m;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (mate[v] > v)
            m.edges.push_back({v, mate[v]});
    return m;
}

std::optional<Solution> min_constrained_eds(const SearchState& s) {
    if (s.has_undecided())
        throw std::logic_error("min_constrained_eds: undecided vertices remain");
    const Graph& g = s.graph();
    const int n = g.vertex_count();
    const auto& cliques = s.deferred_cliques();
    const int ghosts = static_cast<int>(cliques.size());

    // Host graph restricted to non-excluded vertices, plus one ghost per
    // deferred clique adjacent to all of it. A vertex matched to its
    // ghost is the clique member allowed to stay uncovered.
    EdgeList aug_edges;
    for (auto [u, v] : g.edges())
        if (s.label(u) != Label::Excluded && s.label(v) != Label::Excluded)
            aug_edges.push_back({u, v});
    int deferred_total = 0;
    for (int i = 0; i < ghosts; ++i) {
        deferred_total += static_cast<int>(cliques[i].size());
        for (int u : cliques[i])
            aug_edges.push_back(make_edge(u, n + i));
    }
    Graph aug(n + ghosts, aug_edges);
    auto mate = maximum_matching_mates(aug);
    int mu = 0;
    for (int v = 0; v < aug.vertex_count(); ++v)
        if (mate[v] > v)
            ++mu;

    // Exchange step: rotate each unmatched ghost onto a matched clique
    // member; size-preserving, and a fully unmatched ghost+clique would
    // contradict maximality.
    for (int i = 0; i < ghosts; ++i) {
        int gi = n + i;
        if (mate[gi] != -1)
            continue;
        int pick = -1;
        for (int u : cliques[i])
            if (mate[u] != -1) {
                pick = u;
                break;
            }
        assert(pick != -1);
        mate[mate[pick]] = -1;
        mate[pick] = gi;
        mate[gi] = pick;
    }

    std::vector<char> required(n, 0);
    auto cover = s.vertices_with_label(Label::InCover);
    for (int c : cover)
        required[c] = 1;
    for (const auto& q : cliques)
        for (int u : q)
            required[u] = mate[u] < n; // ghost-matched members are exempt

    Solution out;
    std::vector<char> covered(n, 0);
    for (int v = 0; v < n; ++v) {
        int w = mate[v];
        if (w > v && w < n) {
            out.edges.push_back({v, w});
            covered[v] = covered[w] = 1;
        }
    }
    for (int v = 0; v < n; ++v) {
        if (!required[v] || covered[v])
            continue;
        int pick = -1;
        bool pick_required = false;
        for (int w : g.neighbors(v)) {
            if (s.label(w) == Label::Excluded)
                continue;
            bool wr = required[w] != 0;
            if (pick == -1 || (wr && !pick_required)) {
                pick = w;
                pick_required = wr;
            }
        }
        if (pick == -1)
            return std::nullopt; // required vertex with all neighbors excluded
        out.edges.push_back(make_edge(v, pick));
        covered[v] = covered[pick] = 1;
    }
    std::sort(out.edges.begin(), out.edges.end());
    out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
    assert(out.size() == static_cast<int>(cover.size()) + deferred_total - mu);
    return out;
}

} // namespace eds
