#pragma once

#include "eds/graph.hpp"
#include "eds/search_state.hpp"

#include <optional>

namespace eds {

struct SolveOptions {
    bool first_hit = false;    // stop at the first witness of size <= k
    bool record_nodes = false; // keep per-node rule/drop records
    bool record_groups = true; // keep merged-group records for the audit
};

struct Report {
    bool decision = false;
    std::optional<Solution> witness;     // present iff decision
    std::optional<int> best_size;        // minimum over all leaves, when <= k
    int y_used = -1;                     // 2-path count at the winning leaf
    int z_used = -1;                     // subset-size cap at the winning leaf
    BranchStats stats;
};

// Branch on tails, 4-cycles and maximum-degree vertices until every
// undecided component is a 2-path, then enumerate signings and solve
// each leaf in polynomial time. Exhaustive unless first_hit is set, so
// best_size is the true minimum whenever that minimum is <= k.
Report solve_eds(const Graph& g, int k, const SolveOptions& opts = {});

// Variant that first clears vertices of degree >= 4, freezes the 2-path
// components, empties the rest through a prioritized degree-<=3
// subroutine, and enumerates with the bound tightened by half the budget
// that subroutine consumed.
Report solve_eds1(const Graph& g, int k, const SolveOptions& opts = {});

} // namespace eds
