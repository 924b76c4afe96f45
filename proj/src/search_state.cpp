#include "eds/search_state.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace eds {

namespace {

void require(bool cond, const char* msg) {
    if (!cond)
        throw std::logic_error(msg);
}

} // namespace

const char* rule_name(Rule r) {
    switch (r) {
    case Rule::Tail: return "tail";
    case Rule::FourCycle: return "4cycle";
    case Rule::MaxDegreeVertex: return "max_degree";
    case Rule::HighDegreeVertex: return "degree_ge4";
    case Rule::TwoPathMiddle: return "2path_middle";
    case Rule::DegThreeTwoLeaves: return "deg3_two_leaves";
    case Rule::TailAnchorDeg2: return "tail_anchor_deg2";
    case Rule::TailAnchorDeg3: return "tail_anchor_deg3";
    case Rule::DegThreeOneLeaf: return "deg3_one_leaf";
    case Rule::FourCycleDeg3: return "4cycle_deg3";
    case Rule::DegThreeNextDeg2: return "deg3_next_deg2";
    case Rule::MaxDegreeDeg3: return "max_degree_deg3";
    }
    return "?";
}

std::vector<int> rule_drop_guarantee(Rule r, int degree) {
    switch (r) {
    case Rule::Tail:
    case Rule::FourCycle:
    case Rule::FourCycleDeg3:
    case Rule::TailAnchorDeg2:
    case Rule::TailAnchorDeg3:
        return {2, 2};
    case Rule::TwoPathMiddle:
        return {1, 2};
    case Rule::DegThreeTwoLeaves:
    case Rule::DegThreeOneLeaf:
    case Rule::DegThreeNextDeg2:
        return {1, 3};
    case Rule::MaxDegreeVertex:
    case Rule::HighDegreeVertex:
    case Rule::MaxDegreeDeg3:
        return {1, degree};
    }
    return {1, 1};
}

void BranchStats::note_branch(Rule r, int degree, int vertex, const std::vector<int>& drops) {
    ++rule_counts[r];
    auto mins = rule_drop_guarantee(r, degree);
    for (std::size_t i = 0; i < drops.size() && i < mins.size(); ++i)
        if (drops[i] < mins[i])
            ++guarantee_violations;
    if (record_nodes)
        node_records.push_back({r, vertex, drops});
}

SearchState::SearchState(const Graph& g, int k, BranchStats* stats)
    : g_(&g),
      labels_(g.vertex_count(), Label::Undecided),
      clique_index_(g.vertex_count(), -1),
      frozen_(g.vertex_count(), 0),
      k_(k),
      budget_(2 * k),
      stats_(stats) {
    require(k >= 0, "parameter k must be nonnegative");
}

SearchState init_state(const Graph& g, int k, BranchStats* stats) {
    return SearchState(g, k, stats);
}

std::vector<int> SearchState::vertices_with_label(Label l) const {
    std::vector<int> out;
    for (int v = 0; v < g_->vertex_count(); ++v)
        if (labels_[v] == l)
            out.push_back(v);
    return out;
}

bool SearchState::has_undecided() const {
    for (Label l : labels_)
        if (l == Label::Undecided)
            return true;
    return false;
}

bool SearchState::scope_empty(Scope scope) const {
    for (int v = 0; v < g_->vertex_count(); ++v)
        if (in_scope(v, scope))
            return false;
    return true;
}

int SearchState::scoped_degree(int v, Scope scope) const {
    int d = 0;
    for (int w : g_->neighbors(v))
        if (in_scope(w, scope))
            ++d;
    return d;
}

std::vector<int> SearchState::scoped_neighbors(int v, Scope scope) const {
    std::vector<int> out;
    for (int w : g_->neighbors(v))
        if (in_scope(w, scope))
            out.push_back(w);
    return out;
}

int SearchState::include_vertex(int v) {
    require(g_->has_vertex(v), "include_vertex: no such vertex");
    require(labels_[v] == Label::Undecided, "include_vertex: vertex is not undecided");
    labels_[v] = Label::InCover;
    budget_ -= 1;
    return 1;
}

int SearchState::exclude_vertex(int v) {
    require(g_->has_vertex(v), "exclude_vertex: no such vertex");
    require(labels_[v] == Label::Undecided, "exclude_vertex: vertex is not undecided");
    labels_[v] = Label::Excluded;
    int moved = 0;
    for (int w : g_->neighbors(v)) {
        require(labels_[w] != Label::Deferred, "exclude_vertex: deferred neighbor");
        if (labels_[w] == Label::Undecided) {
            require(!frozen_[w], "exclude_vertex: relabeling a frozen vertex");
            labels_[w] = Label::InCover;
            ++moved;
        }
    }
    budget_ -= moved;
    return moved;
}

void SearchState::defer_singleton(int v) {
    require(labels_[v] == Label::Undecided, "defer_singleton: vertex is not undecided");
    labels_[v] = Label::Deferred;
    clique_index_[v] = static_cast<int>(cliques_.size());
    cliques_.push_back({v});
}

std::vector<int> SearchState::component_of(int start, Scope scope, std::vector<char>& seen) const {
    std::vector<int> comp, stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        comp.push_back(v);
        for (int w : g_->neighbors(v))
            if (in_scope(w, scope) && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    std::sort(comp.begin(), comp.end());
    return comp;
}

bool SearchState::induces_clique(const std::vector<int>& vs) const {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g_->has_edge(vs[i], vs[j]))
                return false;
    return true;
}

int SearchState::sweep_cliques(Scope scope) {
    int total = 0;
    bool again = true;
    while (again) {
        again = false;
        std::vector<char> seen(g_->vertex_count(), 0);
        for (int v = 0; v < g_->vertex_count(); ++v) {
            if (!in_scope(v, scope) || seen[v])
                continue;
            auto comp = component_of(v, scope, seen);
            if (!induces_clique(comp))
                continue;
            int idx = static_cast<int>(cliques_.size());
            for (int u : comp) {
                labels_[u] = Label::Deferred;
                clique_index_[u] = idx;
            }
            cliques_.push_back(comp);
            int drop = static_cast<int>(comp.size()) - 1;
            budget_ -= drop;
            total += drop;
            again = true; // rescan; removing a component cannot split others
        }
    }
    return total;
}

std::optional<Tail> SearchState::find_tail(Scope scope) const {
    for (int v1 = 0; v1 < g_->vertex_count(); ++v1) {
        if (!in_scope(v1, scope))
            continue;
        auto nb = scoped_neighbors(v1, scope);
        if (nb.size() != 2)
            continue;
        for (int i = 0; i < 2; ++i) {
            int v0 = nb[i], v2 = nb[1 - i];
            if (scoped_degree(v0, scope) == 1 && scoped_degree(v2, scope) > 1)
                return Tail{v0, v1, v2};
        }
    }
    return std::nullopt;
}

std::optional<std::array<int, 4>> SearchState::find_4cycle(Scope scope) const {
    std::optional<std::array<int, 4>> best;
    std::array<int, 4> best_sorted{};
    const int n = g_->vertex_count();
    for (int a = 0; a < n; ++a) {
        if (!in_scope(a, scope))
            continue;
        for (int c = a + 1; c < n; ++c) {
            if (!in_scope(c, scope))
                continue;
            std::vector<int> common;
            for (int w : g_->neighbors(a))
                if (in_scope(w, scope) && w != c && g_->has_edge(c, w))
                    common.push_back(w);
            for (std::size_t i = 0; i < common.size(); ++i) {
                for (std::size_t j = i + 1; j < common.size(); ++j) {
                    std::array<int, 4> cyc{a, common[i], c, common[j]};
                    std::array<int, 4> key = cyc;
                    std::sort(key.begin(), key.end());
                    if (!best || key < best_sorted ||
                        (key == best_sorted && cyc < *best)) {
                        best = cyc;
                        best_sorted = key;
                    }
                }
            }
        }
    }
    return best;
}

std::vector<ComponentInfo> SearchState::classify_components(Scope scope) const {
    std::vector<ComponentInfo> out;
    std::vector<char> seen(g_->vertex_count(), 0);
    for (int v = 0; v < g_->vertex_count(); ++v) {
        if (!in_scope(v, scope) || seen[v])
            continue;
        ComponentInfo info;
        info.vertices = component_of(v, scope, seen);
        const auto& vs = info.vertices;
        int edges = 0, maxdeg = 0;
        for (int u : vs) {
            int d = scoped_degree(u, scope);
            edges += d;
            maxdeg = std::max(maxdeg, d);
        }
        edges /= 2;
        const int sz = static_cast<int>(vs.size());
        if (induces_clique(vs)) {
            info.kind = ComponentInfo::Kind::Clique;
            info.param = 0;
        } else if (maxdeg <= 2 && edges == sz - 1) {
            // a connected non-clique with max degree 2 and n-1 edges is a path
            info.kind = sz == 3 ? ComponentInfo::Kind::TwoPath : ComponentInfo::Kind::Path;
            info.param = sz == 3 ? 0 : edges;
        } else if (maxdeg == 2 && edges == sz) {
            info.kind = ComponentInfo::Kind::Cycle;
            info.param = sz;
        } else {
            info.kind = ComponentInfo::Kind::Other;
            info.param = maxdeg;
        }
        out.push_back(std::move(info));
    }
    return out;
}

void SearchState::freeze_two_paths() {
    require(phase_ == Phase::Branching, "freeze_two_paths: already frozen");
    for (const auto& comp : classify_components(Scope::All)) {
        if (comp.kind != ComponentInfo::Kind::TwoPath)
            continue;
        int mid = -1;
        for (int u : comp.vertices)
            if (scoped_degree(u, Scope::All) == 2)
                mid = u;
        std::array<int, 2> ends{};
        int e = 0;
        for (int u : comp.vertices)
            if (u != mid)
                ends[e++] = u;
        frozen_paths_.push_back({ends[0], mid, ends[1]});
        for (int u : comp.vertices)
            frozen_[u] = 1;
    }
    // frozen components are whole components of G[U2], so nothing in the
    // remaining scope can be adjacent to them
    for (int v = 0; v < g_->vertex_count(); ++v)
        if (in_scope(v, Scope::Unfrozen))
            for (int w : g_->neighbors(v))
                require(!frozen_[w], "freeze_two_paths: edge into a frozen 2-path");
    budget_at_freeze_ = budget_;
    phase_ = Phase::DegreeThree;
}

void SearchState::check_invariants() const {
    const int n = g_->vertex_count();
    // budget identity: p = 2k - |C| - sum (|Q|-1)
    int cover = 0;
    for (int v = 0; v < n; ++v)
        if (labels_[v] == Label::InCover)
            ++cover;
    int deferred_cost = 0;
    for (const auto& q : cliques_)
        deferred_cost += static_cast<int>(q.size()) - 1;
    require(budget_ == 2 * k_ - cover - deferred_cost, "budget identity violated");

    for (int v = 0; v < n; ++v) {
        if (labels_[v] == Label::Excluded)
            for (int w : g_->neighbors(v)) {
                require(labels_[w] != Label::Excluded, "excluded set is not independent");
                require(labels_[w] != Label::Undecided && labels_[w] != Label::Deferred,
                        "undecided vertex adjacent to the excluded set");
            }
        require((labels_[v] == Label::Deferred) == (clique_index_[v] >= 0),
                "clique index out of sync");
    }
    std::vector<char> in_some_clique(n, 0);
    for (std::size_t i = 0; i < cliques_.size(); ++i) {
        const auto& q = cliques_[i];
        require(!q.empty(), "empty deferred clique");
        require(induces_clique(q), "deferred entry does not induce a clique");
        for (int u : q) {
            require(clique_index_[u] == static_cast<int>(i), "clique membership mismatch");
            require(!in_some_clique[u], "vertex in two deferred cliques");
            in_some_clique[u] = 1;
            for (int w : g_->neighbors(u)) {
                bool inside = clique_index_[w] == static_cast<int>(i);
                require(inside || labels_[w] == Label::InCover || labels_[w] == Label::Excluded,
                        "deferred clique is not a component of the undecided graph");
            }
        }
    }
    std::vector<char> in_path(n, 0);
    for (const auto& t : frozen_paths_) {
        for (int u : {t.end0, t.mid, t.end1}) {
            require(!in_path[u], "frozen 2-paths are not disjoint");
            in_path[u] = 1;
            require(frozen_[u], "frozen path member not marked frozen");
        }
        require(g_->has_edge(t.end0, t.mid) && g_->has_edge(t.mid, t.end1) &&
                    !g_->has_edge(t.end0, t.end1),
                "frozen triple is not an induced 2-path");
    }
    for (int v = 0; v < n; ++v)
        require(!frozen_[v] || in_path[v], "frozen mark without a frozen path");
}

} // namespace eds
