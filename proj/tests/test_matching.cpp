#include "eds/matching.hpp"
#include "eds/oracle.hpp"
#include "support.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace eds;

TEST_CASE("maximum_matching on fixed graphs") {
    CHECK(maximum_matching(path_graph(3)).size() == 1);
    CHECK(maximum_matching(cycle_graph(5)).size() == 2);
    CHECK(maximum_matching(petersen_graph()).size() == 5);
    CHECK(maximum_matching(Graph(4)).size() == 0);
    // the blossom case: two triangles joined by a bridge
    Graph bowtie(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
    CHECK(maximum_matching(bowtie).size() == 3);
}

TEST_CASE("matching output is a matching made of graph edges") {
    std::mt19937 rng(41);
    for (int it = 0; it < 300; ++it) {
        Graph g = random_gnp(4 + static_cast<int>(rng() % 8), 0.3, rng);
        Matching m = maximum_matching(g);
        std::vector<char> used(g.vertex_count(), 0);
        for (auto [u, v] : m.edges) {
            CHECK(g.has_edge(u, v));
            CHECK_FALSE(used[u]);
            CHECK_FALSE(used[v]);
            used[u] = used[v] = 1;
        }
    }
}

TEST_CASE("maximum_matching matches brute force on the 5-vertex suite") {
    for (std::uint64_t mask = 0; mask < (1u << pair_count(5)); ++mask) {
        Graph g = graph_from_mask(5, mask);
        REQUIRE(maximum_matching(g).size() == oracle::brute_max_matching_size(g));
    }
}

TEST_CASE("maximum_matching matches brute force on random sparse graphs") {
    std::mt19937 rng(43);
    int checked = 0;
    while (checked < 200) {
        Graph g = random_gnp(6 + static_cast<int>(rng() % 7), 0.25, rng);
        if (g.edge_count() > 12)
            continue;
        ++checked;
        CHECK(maximum_matching(g).size() == oracle::brute_max_matching_size(g));
    }
}

namespace {

// Builds small fully-decided path states directly through primitives.
SearchState path_state(const Graph& g, BranchStats* stats, std::vector<int> cover,
                       std::vector<int> singletons) {
    SearchState s = init_state(g, g.vertex_count() + 1, stats);
    for (int v : cover)
        s.include_vertex(v);
    for (int v : singletons)
        s.defer_singleton(v);
    return s;
}

} // namespace

TEST_CASE("min_constrained_eds on the fixed leaf states") {
    BranchStats stats;
    Graph p3 = path_graph(3);

    auto mid_cover = path_state(p3, &stats, {1}, {0, 2});
    auto sol = min_constrained_eds(mid_cover);
    REQUIRE(sol.has_value());
    CHECK(sol->size() == 1);

    auto ends_cover = path_state(p3, &stats, {0, 2}, {1});
    sol = min_constrained_eds(ends_cover);
    REQUIRE(sol.has_value());
    CHECK(sol->size() == 2);

    Graph k2 = path_graph(2);
    SearchState clique_only = init_state(k2, 3, &stats);
    clique_only.sweep_cliques(Scope::All);
    sol = min_constrained_eds(clique_only);
    REQUIRE(sol.has_value());
    CHECK(sol->size() == 1);

    // a required vertex whose only neighbor is excluded: infeasible
    SearchState stuck = init_state(k2, 3, &stats);
    stuck.include_vertex(0);
    stuck.exclude_vertex(1);
    CHECK_FALSE(min_constrained_eds(stuck).has_value());

    // calling with undecided vertices is a contract violation
    SearchState undecided = init_state(p3, 3, &stats);
    CHECK_THROWS_AS(min_constrained_eds(undecided), std::logic_error);
}

TEST_CASE("min_constrained_eds agrees with the brute oracle on random states") {
    std::mt19937 rng(47);
    BranchStats stats;
    int infeasible_seen = 0;
    for (int it = 0; it < 400; ++it) {
        Graph g = random_gnp(4 + static_cast<int>(rng() % 5), 0.35, rng);
        SearchState s = testing::random_decided_state(g, rng, &stats);
        auto fast = min_constrained_eds(s);
        auto brute = oracle::brute_min_constrained_eds(s);
        REQUIRE(fast.has_value() == brute.has_value());
        if (!fast) {
            ++infeasible_seen;
            continue;
        }
        REQUIRE(fast->size() == brute->first);
        // validity of the witness: cover covered, excluded avoided,
        // at most one uncovered vertex per deferred clique
        std::vector<char> covered(g.vertex_count(), 0);
        for (auto [u, v] : fast->edges) {
            REQUIRE(g.has_edge(u, v));
            REQUIRE(s.label(u) != Label::Excluded);
            REQUIRE(s.label(v) != Label::Excluded);
            covered[u] = covered[v] = 1;
        }
        for (int v : s.vertices_with_label(Label::InCover))
            REQUIRE(covered[v]);
        for (const auto& q : s.deferred_cliques()) {
            int uncovered = 0;
            for (int u : q)
                if (!covered[u])
                    ++uncovered;
            REQUIRE(uncovered <= 1);
        }
    }
    CHECK(infeasible_seen > 0);
}
