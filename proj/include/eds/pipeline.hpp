#pragma once

#include "eds/kernelizer.hpp"
#include "eds/solver.hpp"

namespace eds {

struct PipelineResult {
    Report report;       // witness already lifted back to the input graph
    KernelResult kernel;
};

// kernelize-then-solve. Rejected instances answer no outright; the
// matching shortcut answers yes but not necessarily with a minimum
// witness, so that case falls through to the plain solver on the input;
// kernelized instances are solved on the kernel and lifted (the kernel
// minimum equals the input minimum whenever the answer is yes).
// use_improved selects the degree-<=3 variant (the default) or the
// simple solver for the solving step.
PipelineResult solve_with_kernelization(const Graph& g, int k, const SolveOptions& opts = {},
                                        bool use_improved = true);

} // namespace eds
