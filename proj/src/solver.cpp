#include "eds/solver.hpp"

#include "eds/matching.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

namespace eds {

namespace {

struct Best {
    int size = std::numeric_limits<int>::max();
    Solution sol;
    int y = -1, z = -1;
    bool found = false;

    void offer(Solution cand, int y_used, int z_used) {
        if (!found || cand.size() < size) {
            size = cand.size();
            sol = std::move(cand);
            y = y_used;
            z = z_used;
            found = true;
        }
    }
};

// Open merged-branching group for the recurrence audit. A group spans a
// degree-<=3 rule firing plus the consecutive 2-path branchings it
// triggers; a cycle opener additionally tracks the cycle's vertices so
// the follow-up tail work on the remnant paths stays in the group.
struct GroupCtx {
    int index = -1;
    int root_budget = 0;
    std::vector<int> tracked; // nonempty = cycle group

    bool active() const { return index >= 0; }
};

// Structure the degree-<=3 subroutine decided to branch on.
struct Deg3Action {
    Rule rule;
    int vertex = -1;            // branch vertex (middle / anchor / picked vertex)
    int degree = 0;             // its scoped degree
    std::array<int, 4> cycle{}; // for the 4-cycle rule
    std::vector<int> structure; // vertices named by the rule
    std::vector<int> component; // component of the picked vertex (cycle opener)
};

class BranchSolver {
public:
    BranchSolver(const Graph& g, int k, const SolveOptions& opts, bool improved)
        : g_(g), k_(k), opts_(opts), improved_(improved) {
        stats_.record_nodes = opts.record_nodes;
        stats_.record_groups = opts.record_groups;
    }

    Report run() {
        SearchState root = init_state(g_, k_, &stats_);
        if (improved_)
            eds1_node(std::move(root));
        else
            eds_node(std::move(root));

        Report report;
        report.decision = best_.found && best_.size <= k_;
        if (report.decision) {
            assert(is_eds(g_, best_.sol.edges));
            report.witness = best_.sol;
            report.best_size = best_.size;
            report.y_used = best_.y;
            report.z_used = best_.z;
        }
        report.stats = std::move(stats_);
        return report;
    }

private:
    template <typename Apply>
    std::pair<SearchState, int> make_child(const SearchState& parent, Scope scope, Apply&& apply) {
        SearchState child = parent;
        apply(child);
        child.sweep_cliques(scope);
        return {std::move(child), parent.budget() - child.budget()};
    }

    // ---- simple algorithm -------------------------------------------------

    void eds_node(SearchState s) {
        if (stop_)
            return;
        ++stats_.nodes;
        s.sweep_cliques(Scope::All);
        if (s.budget() < 0)
            return;

        if (auto tail = s.find_tail(Scope::All)) {
            branch_vertex(s, tail->v2, Rule::Tail, s.scoped_degree(tail->v2, Scope::All),
                          Scope::All, [this](SearchState child) { eds_node(std::move(child)); });
            return;
        }
        if (auto cyc = s.find_4cycle(Scope::All)) {
            branch_four_cycle(s, *cyc, Rule::FourCycle, Scope::All,
                              [this](SearchState child) { eds_node(std::move(child)); });
            return;
        }

        auto comps = s.classify_components(Scope::All);
        const ComponentInfo* target = nullptr;
        for (const auto& c : comps)
            if (c.kind != ComponentInfo::Kind::TwoPath && (!target || c.vertices < target->vertices))
                target = &c;
        if (target) {
            int v = -1, deg = -1;
            for (int u : target->vertices) {
                int d = s.scoped_degree(u, Scope::All);
                if (d > deg) {
                    deg = d;
                    v = u;
                }
            }
            branch_vertex(s, v, Rule::MaxDegreeVertex, deg, Scope::All,
                          [this](SearchState child) { eds_node(std::move(child)); });
            return;
        }

        // every component is a 2-path: enumerate the unsigned subsets
        std::vector<TwoPath> paths;
        for (const auto& c : comps) {
            int mid = -1;
            for (int u : c.vertices)
                if (s.scoped_degree(u, Scope::All) == 2)
                    mid = u;
            int e0 = -1, e1 = -1;
            for (int u : c.vertices)
                if (u != mid)
                    (e0 == -1 ? e0 : e1) = u;
            paths.push_back({e0, mid, e1});
        }
        const int y = static_cast<int>(paths.size());
        ++stats_.enumeration_nodes;
        if (y > std::min(s.budget(), k_))
            return;
        int z = std::min(s.budget() - y, k_ - y);
        enumerate_signings(s, paths, z);
    }

    // ---- improved algorithm -----------------------------------------------

    void eds1_node(SearchState s) {
        if (stop_)
            return;
        ++stats_.nodes;
        s.sweep_cliques(Scope::All);
        if (s.budget() < 0)
            return;

        int hi = -1, hi_deg = -1;
        for (int v = 0; v < g_.vertex_count() && hi == -1; ++v)
            if (s.in_scope(v, Scope::All)) {
                int d = s.scoped_degree(v, Scope::All);
                if (d >= 4) {
                    hi = v;
                    hi_deg = d;
                }
            }
        if (hi != -1) {
            branch_vertex(s, hi, Rule::HighDegreeVertex, hi_deg, Scope::All,
                          [this](SearchState child) { eds1_node(std::move(child)); });
            return;
        }

        s.freeze_two_paths();
        deg3_body(std::move(s), GroupCtx{});
    }

    void deg3_node(SearchState s, GroupCtx ctx) {
        if (stop_)
            return;
        ++stats_.nodes;
        deg3_body(std::move(s), std::move(ctx));
    }

    void deg3_body(SearchState s, GroupCtx ctx) {
        s.sweep_cliques(Scope::Unfrozen);
        // a pruned branch spawns no subproblem, so it records no group exit
        if (s.budget() < 0)
            return;
        if (s.scope_empty(Scope::Unfrozen)) {
            close_group(ctx, s.budget());
            eds1_enumeration(s);
            return;
        }

        Deg3Action act = normalized(pick_deg3_action(s));
        if (ctx.active() && !group_continues(ctx, act)) {
            close_group(ctx, s.budget());
            ctx = GroupCtx{};
        }
        if (!ctx.active())
            ctx = maybe_open_group(s, act);

        auto recurse = [this, &ctx](SearchState child) { deg3_node(std::move(child), ctx); };
        switch (act.rule) {
        case Rule::FourCycleDeg3:
            branch_four_cycle(s, act.cycle, Rule::FourCycleDeg3, Scope::Unfrozen, recurse);
            break;
        default:
            branch_vertex(s, act.vertex, act.rule, act.degree, Scope::Unfrozen, recurse);
            break;
        }
    }

    void eds1_enumeration(SearchState& s) {
        ++stats_.enumeration_nodes;
        const int p0 = s.budget_at_freeze() - s.budget();
        ++stats_.p0_histogram[p0];
        const auto& paths = s.frozen_paths();
        const int y = static_cast<int>(paths.size());
        // y > min(p, k - p0/2), in integers: y > p or 2y > 2k - p0
        if (y > s.budget() || 2 * y > 2 * k_ - p0)
            return;
        int z = std::min(s.budget() - y, (2 * k_ - p0) / 2 - y);
        enumerate_signings(s, paths, z);
    }

    // ---- shared machinery ---------------------------------------------------

    template <typename Recurse>
    void branch_vertex(const SearchState& s, int v, Rule rule, int degree, Scope scope,
                       Recurse&& recurse) {
        auto [inc, d1] = make_child(s, scope, [&](SearchState& t) { t.include_vertex(v); });
        auto [exc, d2] = make_child(s, scope, [&](SearchState& t) { t.exclude_vertex(v); });
        stats_.note_branch(rule, degree, v, {d1, d2});
        recurse(std::move(inc));
        recurse(std::move(exc));
    }

    template <typename Recurse>
    void branch_four_cycle(const SearchState& s, const std::array<int, 4>& cyc, Rule rule,
                           Scope scope, Recurse&& recurse) {
        auto [ac, d1] = make_child(s, scope, [&](SearchState& t) {
            t.include_vertex(cyc[0]);
            t.include_vertex(cyc[2]);
        });
        auto [bd, d2] = make_child(s, scope, [&](SearchState& t) {
            t.include_vertex(cyc[1]);
            t.include_vertex(cyc[3]);
        });
        stats_.note_branch(rule, 0, -1, {d1, d2});
        recurse(std::move(ac));
        recurse(std::move(bd));
    }

    // Signing enumeration: for each subset of at most z paths, the
    // subset's paths are dominated through both ends and the rest through
    // their middles; the leftovers become deferred singletons.
    void enumerate_signings(const SearchState& s, const std::vector<TwoPath>& paths, int z) {
        const int y = static_cast<int>(paths.size());
        std::vector<int> chosen;
        for (int size = 0; size <= std::min(y, z) && !stop_; ++size) {
            chosen.resize(size);
            for (int i = 0; i < size; ++i)
                chosen[i] = i;
            while (!stop_) {
                solve_leaf(s, paths, chosen, y, z);
                int i = size - 1;
                while (i >= 0 && chosen[i] == y - size + i)
                    --i;
                if (i < 0)
                    break;
                ++chosen[i];
                for (int j = i + 1; j < size; ++j)
                    chosen[j] = chosen[j - 1] + 1;
            }
        }
    }

    void solve_leaf(const SearchState& base, const std::vector<TwoPath>& paths,
                    const std::vector<int>& unsigned_idx, int y, int z) {
        SearchState leaf = base;
        std::size_t next = 0;
        for (int i = 0; i < y; ++i) {
            if (next < unsigned_idx.size() && unsigned_idx[next] == i) {
                ++next;
                leaf.include_vertex(paths[i].end0);
                leaf.include_vertex(paths[i].end1);
            } else {
                leaf.include_vertex(paths[i].mid);
            }
        }
        leaf.sweep_cliques(Scope::All);
        assert(!leaf.has_undecided());
        assert(leaf.budget() >= 0);
        ++stats_.leaves;
        if (auto sol = min_constrained_eds(leaf)) {
            best_.offer(std::move(*sol), y, z);
            if (opts_.first_hit && best_.size <= k_)
                stop_ = true;
        }
    }

    // ---- degree-<=3 rule selection -----------------------------------------

    std::optional<Tail> find_tail_with_anchor_degree(const SearchState& s, int anchor_deg) const {
        for (int v1 = 0; v1 < g_.vertex_count(); ++v1) {
            if (!s.in_scope(v1, Scope::Unfrozen))
                continue;
            auto nb = s.scoped_neighbors(v1, Scope::Unfrozen);
            if (nb.size() != 2)
                continue;
            for (int i = 0; i < 2; ++i) {
                int v0 = nb[i], v2 = nb[1 - i];
                if (s.scoped_degree(v0, Scope::Unfrozen) == 1 &&
                    s.scoped_degree(v2, Scope::Unfrozen) == anchor_deg && anchor_deg > 1)
                    return Tail{v0, v1, v2};
            }
        }
        return std::nullopt;
    }

    // Lowest-id degree-3 vertex whose scoped degree-1 neighbor count
    // matches the predicate.
    template <typename Pred>
    int find_degree3_by_leaves(const SearchState& s, Pred&& pred) const {
        for (int v = 0; v < g_.vertex_count(); ++v) {
            if (!s.in_scope(v, Scope::Unfrozen) || s.scoped_degree(v, Scope::Unfrozen) != 3)
                continue;
            int leaves = 0;
            for (int w : s.scoped_neighbors(v, Scope::Unfrozen))
                if (s.scoped_degree(w, Scope::Unfrozen) == 1)
                    ++leaves;
            if (pred(leaves))
                return v;
        }
        return -1;
    }

    Deg3Action pick_deg3_action(const SearchState& s) {
        Deg3Action act;

        for (int v = 0; v < g_.vertex_count(); ++v)
            if (s.in_scope(v, Scope::Unfrozen) && s.scoped_degree(v, Scope::Unfrozen) >= 4)
                throw std::logic_error("degree-<=3 subroutine entered with a degree-4 vertex");

        auto comps = s.classify_components(Scope::Unfrozen);
        const ComponentInfo* two_path = nullptr;
        for (const auto& c : comps)
            if (c.kind == ComponentInfo::Kind::TwoPath &&
                (!two_path || c.vertices < two_path->vertices))
                two_path = &c;
        if (two_path) {
            act.rule = Rule::TwoPathMiddle;
            for (int u : two_path->vertices)
                if (s.scoped_degree(u, Scope::Unfrozen) == 2)
                    act.vertex = u;
            act.degree = 2;
            act.structure = two_path->vertices;
            return act;
        }

        if (int v = find_degree3_by_leaves(s, [](int l) { return l >= 2; }); v != -1) {
            act.rule = Rule::DegThreeTwoLeaves;
            act.vertex = v;
            act.degree = 3;
            act.structure = {v};
            return act;
        }
        if (auto t = find_tail_with_anchor_degree(s, 2)) {
            act.rule = Rule::TailAnchorDeg2;
            act.vertex = t->v2;
            act.degree = 2;
            act.structure = {t->v0, t->v1, t->v2};
            return act;
        }
        if (auto t = find_tail_with_anchor_degree(s, 3)) {
            act.rule = Rule::TailAnchorDeg3;
            act.vertex = t->v2;
            act.degree = 3;
            act.structure = {t->v0, t->v1, t->v2};
            return act;
        }
        if (int v = find_degree3_by_leaves(s, [](int l) { return l == 1; }); v != -1) {
            act.rule = Rule::DegThreeOneLeaf;
            act.vertex = v;
            act.degree = 3;
            act.structure = {v};
            return act;
        }
        if (auto cyc = s.find_4cycle(Scope::Unfrozen)) {
            act.rule = Rule::FourCycleDeg3;
            act.cycle = *cyc;
            act.structure.assign(cyc->begin(), cyc->end());
            return act;
        }
        for (int v = 0; v < g_.vertex_count(); ++v) {
            if (!s.in_scope(v, Scope::Unfrozen) || s.scoped_degree(v, Scope::Unfrozen) != 3)
                continue;
            for (int w : s.scoped_neighbors(v, Scope::Unfrozen))
                if (s.scoped_degree(w, Scope::Unfrozen) == 2) {
                    act.rule = Rule::DegThreeNextDeg2;
                    act.vertex = v;
                    act.degree = 3;
                    act.structure = {v};
                    return act;
                }
        }
        // leftover components are cycles or 3-regular graphs
        int v = -1, deg = -1;
        for (int u = 0; u < g_.vertex_count(); ++u)
            if (s.in_scope(u, Scope::Unfrozen)) {
                int d = s.scoped_degree(u, Scope::Unfrozen);
                if (d > deg) {
                    deg = d;
                    v = u;
                }
            }
        act.rule = Rule::MaxDegreeDeg3;
        act.vertex = v;
        act.degree = deg;
        act.structure = {v};
        if (deg == 2)
            for (const auto& c : comps)
                if (std::binary_search(c.vertices.begin(), c.vertices.end(), v))
                    act.component = c.vertices;
        return act;
    }

    static Deg3Action normalized(Deg3Action act) {
        std::sort(act.structure.begin(), act.structure.end());
        return act;
    }

    // ---- merged-group bookkeeping -------------------------------------------

    bool group_continues(const GroupCtx& ctx, const Deg3Action& act) const {
        if (!ctx.tracked.empty())
            return std::includes(ctx.tracked.begin(), ctx.tracked.end(), act.structure.begin(),
                                 act.structure.end());
        return act.rule == Rule::TwoPathMiddle;
    }

    void close_group(const GroupCtx& ctx, int budget_now) {
        if (ctx.active())
            stats_.macro_groups[ctx.index].exit_drops.push_back(ctx.root_budget - budget_now);
    }

    GroupCtx maybe_open_group(const SearchState& s, const Deg3Action& act) {
        if (!stats_.record_groups)
            return {};
        bool cycle_opener = act.rule == Rule::MaxDegreeDeg3 && act.degree == 2;
        bool rule_3x = act.rule == Rule::DegThreeTwoLeaves || act.rule == Rule::TailAnchorDeg2 ||
                       act.rule == Rule::TailAnchorDeg3 || act.rule == Rule::DegThreeOneLeaf ||
                       act.rule == Rule::FourCycleDeg3 || act.rule == Rule::DegThreeNextDeg2;
        if (!cycle_opener && !rule_3x)
            return {};
        GroupCtx ctx;
        ctx.index = static_cast<int>(stats_.macro_groups.size());
        ctx.root_budget = s.budget();
        if (cycle_opener)
            ctx.tracked = act.component;
        stats_.macro_groups.push_back({act.rule, act.degree, cycle_opener, {}});
        return ctx;
    }

    const Graph& g_;
    int k_;
    SolveOptions opts_;
    bool improved_;
    BranchStats stats_;
    Best best_;
    bool stop_ = false;
};

} // namespace

Report solve_eds(const Graph& g, int k, const SolveOptions& opts) {
    return BranchSolver(g, k, opts, false).run();
}

Report solve_eds1(const Graph& g, int k, const SolveOptions& opts) {
    return BranchSolver(g, k, opts, true).run();
}

} // namespace eds
