#pragma once

#include "eds/generators.hpp"
#include "eds/search_state.hpp"

#include <random>

namespace eds::testing {

// Random fully-decided state: drives a fresh state to U2 = empty through
// random include/exclude/sweep moves, so every invariant holds by
// construction. k is taken large enough that the budget never matters.
inline SearchState random_decided_state(const Graph& g, std::mt19937& rng, BranchStats* stats) {
    SearchState s = init_state(g, g.vertex_count() + 1, stats);
    while (s.has_undecided()) {
        auto undecided = s.vertices_with_label(Label::Undecided);
        int v = undecided[rng() % undecided.size()];
        switch (rng() % 4) {
        case 0:
            s.include_vertex(v);
            break;
        case 1:
            s.exclude_vertex(v);
            break;
        default:
            s.sweep_cliques(Scope::All);
            if (s.label(v) == Label::Undecided && rng() % 2 == 0)
                s.include_vertex(v);
            break;
        }
    }
    return s;
}

} // namespace eds::testing
