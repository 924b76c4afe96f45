#pragma once

#include "eds/graph.hpp"

#include <array>
#include <map>
#include <optional>
#include <vector>

namespace eds {

// Vertex roles during the search. Undecided vertices still have to be
// resolved; Deferred vertices sit in a clique component of the undecided
// graph and contribute |Q|-1 to the cover without branching.
enum class Label : std::uint8_t { Undecided, InCover, Excluded, Deferred };

// Detection scope: all undecided vertices, or only those outside the
// frozen 2-path components.
enum class Scope : std::uint8_t { All, Unfrozen };

enum class Phase : std::uint8_t { Branching, DegreeThree, Enumeration };

// Path v0-v1-v2 with deg(v0) = 1, deg(v1) = 2, deg(v2) > 1, degrees
// taken in the scoped undecided subgraph.
struct Tail {
    int v0, v1, v2;
};

// A whole component that is an induced path on three vertices.
struct TwoPath {
    int end0, mid, end1;
};

enum class Rule : std::uint8_t {
    Tail,              // branch on a tail anchor
    FourCycle,         // include opposite corners of a 4-cycle
    MaxDegreeVertex,   // branch on a max-degree vertex of a component
    HighDegreeVertex,  // branch on a vertex of degree >= 4
    TwoPathMiddle,     // branch on the middle of a 2-path component
    DegThreeTwoLeaves, // degree-3 vertex with two degree-1 neighbors
    TailAnchorDeg2,    // tail whose anchor has degree 2
    TailAnchorDeg3,    // tail whose anchor has degree 3
    DegThreeOneLeaf,   // degree-3 vertex with exactly one degree-1 neighbor
    FourCycleDeg3,     // 4-cycle inside the degree-<=3 subroutine
    DegThreeNextDeg2,  // degree-3 vertex adjacent to a degree-2 vertex
    MaxDegreeDeg3,     // fallback: max-degree vertex (cycle or 3-regular)
};

const char* rule_name(Rule r);

struct NodeRecord {
    Rule rule;
    int vertex;               // branch vertex, or -1 for 4-cycle rules
    std::vector<int> drops;   // budget decrease per child, include-child first
};

// Merged branching group used by the recurrence audit: a degree-<=3 rule
// firing plus every immediate 2-path follow-up branching, or a cycle
// opener plus the work until the cycle's vertices leave the scope.
struct MacroGroup {
    Rule opener;
    int opener_degree;
    bool cycle_group;
    std::vector<int> exit_drops; // budget decrease from group root to each exit
};

struct BranchStats {
    long nodes = 0;
    long leaves = 0;            // signing leaves handed to the leaf solver
    long enumeration_nodes = 0; // states that reached the enumeration phase
    long guarantee_violations = 0;
    std::map<Rule, long> rule_counts;
    std::map<int, long> p0_histogram; // budget spent by the degree-<=3 phase
    std::vector<MacroGroup> macro_groups;
    std::vector<NodeRecord> node_records; // filled only when record_nodes
    bool record_nodes = false;
    bool record_groups = true;

    void note_branch(Rule r, int degree, int vertex, const std::vector<int>& drops);
};

// Lower bounds on the per-child budget decrease for a branching rule;
// a violation is counted (never silently ignored) by note_branch.
std::vector<int> rule_drop_guarantee(Rule r, int degree);

struct ComponentInfo {
    enum class Kind : std::uint8_t { Clique, TwoPath, Path, Cycle, Other };
    Kind kind;
    int param; // Path: edge count, Cycle: length, Other: max degree, else 0
    std::vector<int> vertices; // sorted
};

// The branch-and-reduce search state: a partition of the vertices into
// cover / excluded / clique-deferred / undecided, plus the remaining
// budget of cover vertices. Cloning a state (copy construction) yields
// an independent child; the shared BranchStats pointer is the only link.
class SearchState {
public:
    SearchState(const Graph& g, int k, BranchStats* stats);

    const Graph& graph() const { return *g_; }
    int k() const { return k_; }
    int budget() const { return budget_; }
    Label label(int v) const { return labels_[v]; }
    bool frozen(int v) const { return frozen_[v] != 0; }
    BranchStats& stats() const { return *stats_; }

    Phase phase() const { return phase_; }
    int budget_at_freeze() const { return budget_at_freeze_; }
    const std::vector<TwoPath>& frozen_paths() const { return frozen_paths_; }
    const std::vector<std::vector<int>>& deferred_cliques() const { return cliques_; }

    std::vector<int> vertices_with_label(Label l) const;
    bool has_undecided() const;
    bool in_scope(int v, Scope scope) const {
        return labels_[v] == Label::Undecided && (scope == Scope::All || !frozen_[v]);
    }
    int scoped_degree(int v, Scope scope) const;
    std::vector<int> scoped_neighbors(int v, Scope scope) const;

    // Moves an undecided vertex into the cover. Returns the budget drop (1).
    int include_vertex(int v);

    // Excludes an undecided vertex: v joins the excluded set and every
    // undecided neighbor is forced into the cover. Returns the budget drop.
    int exclude_vertex(int v);

    // Moves every clique component of the scoped undecided subgraph
    // (singletons and single edges included) into the deferred set,
    // charging |Q|-1 each. Returns the total budget drop.
    int sweep_cliques(Scope scope);

    // Defers a single vertex as a one-vertex clique (budget drop 0).
    void defer_singleton(int v);

    std::optional<Tail> find_tail(Scope scope) const;
    // Returns a 4-cycle (a,b,c,d) with edges ab,bc,cd,da in scope; chords
    // permitted. Smallest by sorted id tuple, then by (a,b,c,d).
    std::optional<std::array<int, 4>> find_4cycle(Scope scope) const;
    std::vector<ComponentInfo> classify_components(Scope scope) const;

    // Freezes the current 2-path components of G[U2]: they keep their
    // Undecided label but leave the Unfrozen scope, and the budget at
    // this moment is remembered for the p0 accounting.
    void freeze_two_paths();
    bool scope_empty(Scope scope) const;

    // Full structural check of the state invariants; throws std::logic_error
    // with a description on the first violation. Test hook.
    void check_invariants() const;

private:
    std::vector<int> component_of(int start, Scope scope, std::vector<char>& seen) const;
    bool induces_clique(const std::vector<int>& vs) const;

    const Graph* g_;
    std::vector<Label> labels_;
    std::vector<int> clique_index_; // index into cliques_ for Deferred vertices
    std::vector<std::vector<int>> cliques_;
    std::vector<char> frozen_;
    std::vector<TwoPath> frozen_paths_;
    int k_;
    int budget_;
    int budget_at_freeze_ = -1;
    Phase phase_ = Phase::Branching;
    BranchStats* stats_;
};

SearchState init_state(const Graph& g, int k, BranchStats* stats);

} // namespace eds
