#include "eds/pipeline.hpp"

namespace eds {

PipelineResult solve_with_kernelization(const Graph& g, int k, const SolveOptions& opts,
                                        bool use_improved) {
    auto solve = [&](const Graph& graph) {
        return use_improved ? solve_eds1(graph, k, opts) : solve_eds(graph, k, opts);
    };
    PipelineResult out;
    out.kernel = kernelize(g, k);
    switch (out.kernel.status) {
    case KernelStatus::TooManyMatchingEdges:
        out.report = Report{};
        break;
    case KernelStatus::SolvedByMatching:
        out.report = solve(g);
        break;
    case KernelStatus::Kernelized:
        out.report = solve(out.kernel.kernel);
        if (out.report.decision) {
            Solution lifted = lift_solution(g, out.kernel, *out.report.witness);
            out.report.witness = lifted;
            out.report.best_size = lifted.size();
        }
        break;
    }
    return out;
}

} // namespace eds
