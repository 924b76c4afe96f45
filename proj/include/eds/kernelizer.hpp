#pragma once

#include "eds/graph.hpp"
#include "eds/matching.hpp"

#include <map>
#include <vector>

namespace eds {

enum class KernelStatus {
    SolvedByMatching,      // the greedy maximal matching already has size <= k
    TooManyMatchingEdges,  // maximal matching larger than 2k: decision no
    Kernelized,
};

enum class VertexRole { Original, Pendant, Deleted };

// Output of the kernelization. The kernel graph keeps the original vertex
// ids; deleted vertices remain as isolated id slots (listed in `deleted`)
// and the pendant of each labeled vertex gets a fresh id appended after
// the original range.
struct KernelResult {
    KernelStatus status;
    Graph kernel;
    int k = 0;                    // unchanged parameter
    Matching m0;                  // greedy maximal matching of the input
    std::vector<int> matched;     // V(M0), sorted
    std::vector<int> outside;     // V - V(M0), sorted
    std::map<int, int> vstar_degree;  // v in V(M0) -> |outside & N(v)| in the input
    std::vector<int> overloaded;  // A: m + x_v > 2k
    std::vector<int> labeled;     // A': overloaded plus the degree-1 rule hits
    std::vector<int> deleted;     // sorted original ids removed by the reduction
    std::map<int, int> pendant_of; // labeled vertex -> its pendant id
    std::vector<VertexRole> roles; // per kernel id

    int active_vertex_count() const {
        return kernel.vertex_count() - static_cast<int>(deleted.size());
    }
};

// Edge/vertex counting ledger of the kernel output, mirroring the bound
// bookkeeping: B = surviving matched vertices outside A', q = edges
// between B and the outside set, the outside set split by adjacency to
// B, and the three edge classes.
struct KernelBoundsLedger {
    int m = 0;
    int k = 0;
    std::vector<int> b_set;       // surviving matched vertices not labeled
    long q = 0;                   // edges between b_set and surviving outside
    std::vector<int> vstar1;      // surviving outside vertices adjacent to b_set
    std::vector<int> vstar2;      // remaining outside vertices (the pendants)
    long e1 = 0;                  // both endpoints matched
    long e2 = 0;                  // labeled <-> outside (pendant edges included)
    long e3 = 0;                  // b_set <-> outside
    int active_vertices = 0;
    bool vertex_bound_applies = false; // k+1 <= m <= 2k-1
    bool vertex_bound_ok = false;      // |V| <= 2k^2+2k (or the m=2k relaxation)
    bool edge_bound_ok = false;        // E1 <= C(2m,2), E2 <= |A'||V*1|+|V*2|, E3 = q
    bool invariants_ok = false;        // q <= |B|(2k-m), |V*1| <= q, |V*2| = |A'|
};

// Linear kernelization: greedy maximal matching, overloaded
// labeling, degree-1 deletions (already-labeled vertices are never
// deleted), deletion of outside vertices with only labeled neighbors,
// then one pendant per labeled vertex. Answer-preserving with k' = k.
KernelResult kernelize(const Graph& g, int k);

// Replaces every pendant edge of a kernel solution by a real edge of the
// input incident to the labeled endpoint (lowest-id neighbor). Validates
// the result; throws std::invalid_argument if the input is not an eds of
// the kernel.
Solution lift_solution(const Graph& g, const KernelResult& r, const Solution& kernel_solution);

// Requires status Kernelized.
KernelBoundsLedger kernel_stats(const KernelResult& r);

} // namespace eds
