#pragma once

#include <string>

#include "dce/fpt.hpp"
#include "dce/instance.hpp"
#include "dce/kernelize.hpp"
#include "dce/oracle.hpp"
#include "dce/solve_result.hpp"

namespace dce {

/// Kernelize, then search the kernel exhaustively. The witness is lifted to the
/// original vertices when the trace allows it, otherwise it refers to the kernel.
inline SolveResult solve_combined(const Instance& inst, const OracleOptions& opt = {}) {
    if (inst.k < 0 || inst.d < 0) throw Error(ErrorCode::InvalidInstance, "k and d must be nonnegative");
    SolveResult r;
    r.solver = "combined";
    r.kernel_before = inst.n();
    auto kr = kernelize(inst);
    r.trace = kr.trace;
    if (kr.no) return r;
    r.kernel_after = kr.reduced.n();
    if (kr.reduced.n() > opt.cap)
        throw Error(ErrorCode::KernelTooLargeForOracle,
                    "kernel has " + std::to_string(kr.reduced.n()) + " vertices, oracle cap is " +
                        std::to_string(opt.cap));
    auto ks = oracle_solve(kr.reduced, opt);
    if (!ks) return r;
    r.yes = true;
    if (auto lifted = lift_solution(inst, kr, *ks)) {
        r.witness = std::move(lifted);
    } else {
        r.witness = std::move(ks);
        r.scope = WitnessScope::Kernel;
        r.kernel = kr.reduced;
        r.kernel_labels = kr.labels;
    }
    return r;
}

enum class Algo { Auto, Oracle, Combined, FptK, FptD };

/// Solver picked by Auto.
inline Algo auto_algo(const Instance& inst) {
    if (inst.variant == Variant::Deletion && inst.measure == Measure::EdgeDist) return Algo::FptK;
    if (inst.variant == Variant::Completion) return Algo::FptD;
    return Algo::Combined;
}

inline SolveResult solve(const Instance& inst, Algo algo, const OracleOptions& opt = {}) {
    if (algo == Algo::Auto) algo = auto_algo(inst);
    switch (algo) {
        case Algo::Oracle: {
            SolveResult r;
            r.solver = "oracle";
            r.kernel_before = r.kernel_after = inst.n();
            r.witness = oracle_solve(inst, opt);
            r.yes = r.witness.has_value();
            return r;
        }
        case Algo::FptK: {
            auto r = fpt_deletion_edge_k(inst);
            r.kernel_before = r.kernel_after = inst.n();
            return r;
        }
        case Algo::FptD: {
            auto r = inst.measure == Measure::EdgeDist ? fpt_completion_edge_d(inst) : fpt_completion_matching_d(inst);
            r.kernel_before = r.kernel_after = inst.n();
            return r;
        }
        default: return solve_combined(inst, opt);
    }
}

}  // namespace dce
