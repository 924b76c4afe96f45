#include "eds/kernelizer.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace eds {

namespace {

Matching greedy_maximal_matching(const Graph& g) {
    Matching m;
    std::vector<char> used(g.vertex_count(), 0);
    for (auto [u, v] : g.edges())
        if (!used[u] && !used[v]) {
            used[u] = used[v] = 1;
            m.edges.push_back({u, v});
        }
    return m;
}

} // namespace

KernelResult kernelize(const Graph& g, int k) {
    if (k < 0)
        throw std::invalid_argument("kernelize: k must be nonnegative");
    KernelResult r;
    r.k = k;
    r.m0 = greedy_maximal_matching(g);
    const int m = r.m0.size();
    const int n = g.vertex_count();

    std::vector<char> in_vm(n, 0);
    for (auto [u, v] : r.m0.edges)
        in_vm[u] = in_vm[v] = 1;
    for (int v = 0; v < n; ++v)
        (in_vm[v] ? r.matched : r.outside).push_back(v);

    if (m <= k) {
        r.status = KernelStatus::SolvedByMatching;
        r.kernel = g;
        r.roles.assign(n, VertexRole::Original);
        return r;
    }
    if (m > 2 * k) {
        // any eds of size <= k yields a vertex cover of size <= 2k, and no
        // matching can exceed a vertex cover
        r.status = KernelStatus::TooManyMatchingEdges;
        r.kernel = g;
        r.roles.assign(n, VertexRole::Original);
        return r;
    }

    for (int v : r.matched) {
        int x = 0;
        for (int w : g.neighbors(v))
            if (!in_vm[w])
                ++x;
        r.vstar_degree[v] = x;
        if (m + x > 2 * k)
            r.overloaded.push_back(v);
    }

    std::vector<char> labeled(n, 0), gone(n, 0);
    for (int v : r.overloaded)
        labeled[v] = 1;
    std::vector<int> degree(n, 0);
    for (int v = 0; v < n; ++v)
        degree[v] = g.degree(v);
    auto delete_vertex = [&](int v) {
        gone[v] = 1;
        for (int w : g.neighbors(v))
            if (!gone[w])
                --degree[w];
    };

    // degree-1 rule, one pass in id order over the matched vertices;
    // labeled vertices are protected from deletion so every member of A'
    // survives to receive its pendant
    for (int v : r.matched) {
        if (gone[v])
            continue;
        bool hit = false;
        for (int w : g.neighbors(v))
            if (!gone[w] && degree[w] == 1 && !labeled[w]) {
                delete_vertex(w);
                hit = true;
            }
        if (hit)
            labeled[v] = 1;
    }
    // outside vertices whose surviving neighbors are all labeled
    for (int u : r.outside) {
        if (gone[u])
            continue;
        bool all_labeled = true;
        for (int w : g.neighbors(u))
            if (!gone[w] && !labeled[w]) {
                all_labeled = false;
                break;
            }
        if (all_labeled)
            delete_vertex(u);
    }

    for (int v = 0; v < n; ++v) {
        if (gone[v])
            r.deleted.push_back(v);
        else if (labeled[v])
            r.labeled.push_back(v);
    }

    EdgeList kernel_edges;
    for (auto [u, v] : g.edges())
        if (!gone[u] && !gone[v])
            kernel_edges.push_back({u, v});
    r.roles.assign(n, VertexRole::Original);
    for (int v : r.deleted)
        r.roles[v] = VertexRole::Deleted;
    int next_id = n;
    for (int w : r.labeled) {
        r.pendant_of[w] = next_id;
        kernel_edges.push_back({w, next_id});
        r.roles.push_back(VertexRole::Pendant);
        ++next_id;
    }
    r.kernel = Graph(next_id, kernel_edges);
    r.status = KernelStatus::Kernelized;
    return r;
}

Solution lift_solution(const Graph& g, const KernelResult& r, const Solution& kernel_solution) {
    if (r.status == KernelStatus::TooManyMatchingEdges)
        throw std::invalid_argument("lift_solution: rejected instance has no solution");
    if (!is_eds(r.kernel, kernel_solution.edges))
        throw std::invalid_argument("lift_solution: not an eds of the kernel");
    if (r.status == KernelStatus::SolvedByMatching)
        return Solution{kernel_solution.edges};

    const int n = g.vertex_count();
    std::set<Edge> lifted;
    for (auto [u, v] : kernel_solution.edges) {
        if (v < n) {
            lifted.insert({u, v});
            continue;
        }
        // pendant edge: u is the labeled vertex, swap in its lowest-id
        // real neighbor
        int w = g.neighbors(u).front();
        lifted.insert(make_edge(u, w));
    }
    Solution out{EdgeList(lifted.begin(), lifted.end())};
    if (!is_eds(g, out.edges))
        throw std::logic_error("lift_solution: lifted set is not an eds of the input");
    return out;
}

KernelBoundsLedger kernel_stats(const KernelResult& r) {
    if (r.status != KernelStatus::Kernelized)
        throw std::invalid_argument("kernel_stats: no kernel was produced");
    KernelBoundsLedger led;
    led.m = r.m0.size();
    led.k = r.k;
    const Graph& kg = r.kernel;
    const int n_orig = static_cast<int>(r.roles.size()) - static_cast<int>(r.pendant_of.size());

    std::vector<char> gone(n_orig, 0), labeled(n_orig, 0), matched(n_orig, 0);
    for (int v : r.deleted)
        gone[v] = 1;
    for (int v : r.labeled)
        labeled[v] = 1;
    for (int v : r.matched)
        matched[v] = 1;

    auto is_outside = [&](int v) { return v >= n_orig || !matched[v]; };
    for (int v : r.matched)
        if (!gone[v] && !labeled[v])
            led.b_set.push_back(v);
    std::vector<char> in_b(kg.vertex_count(), 0);
    for (int v : led.b_set)
        in_b[v] = 1;

    for (int v = 0; v < kg.vertex_count(); ++v) {
        if (v < n_orig && (gone[v] || matched[v]))
            continue;
        bool next_to_b = false;
        for (int w : kg.neighbors(v))
            if (in_b[w])
                next_to_b = true;
        (next_to_b ? led.vstar1 : led.vstar2).push_back(v);
    }
    for (auto [u, v] : kg.edges()) {
        bool uo = is_outside(u), vo = is_outside(v);
        if (!uo && !vo)
            ++led.e1;
        else if (in_b[u] || in_b[v])
            ++led.e3;
        else
            ++led.e2;
    }
    led.q = led.e3;
    led.active_vertices = r.active_vertex_count();

    const long bound = 2L * led.k * led.k + 2L * led.k;
    led.vertex_bound_applies = led.m >= led.k + 1 && led.m <= 2 * led.k - 1;
    if (led.vertex_bound_applies)
        led.vertex_bound_ok = led.active_vertices <= bound;
    else // m == 2k boundary regime
        led.vertex_bound_ok = led.active_vertices <= std::max(bound, 8L * led.k);

    led.invariants_ok =
        led.q <= static_cast<long>(led.b_set.size()) * (2 * led.k - led.m) &&
        static_cast<long>(led.vstar1.size()) <= led.q &&
        led.vstar2.size() == r.labeled.size() &&
        led.e1 + led.e2 + led.e3 == kg.edge_count();
    led.edge_bound_ok =
        led.e1 <= static_cast<long>(led.m) * (2 * led.m - 1) &&
        led.e2 <= static_cast<long>(r.labeled.size()) * static_cast<long>(led.vstar1.size()) +
                      static_cast<long>(led.vstar2.size()) &&
        led.e3 == led.q;
    return led;
}

} // namespace eds
