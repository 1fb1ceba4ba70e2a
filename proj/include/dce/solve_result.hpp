#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dce/instance.hpp"
#include "dce/kernelize.hpp"

namespace dce {

enum class WitnessScope { Original, Kernel };

inline const char* to_string(WitnessScope s) { return s == WitnessScope::Original ? "original" : "kernel"; }

struct SolveResult {
    bool yes = false;
    std::optional<Solution> witness;
    WitnessScope scope = WitnessScope::Original;
    /// Instance the witness refers to when scope is Kernel.
    std::optional<Instance> kernel;
    /// Original label of each kernel vertex; fresh vertices are numbered from n.
    std::vector<Vertex> kernel_labels;
    std::vector<TraceEntry> trace;
    std::string solver;
    Vertex kernel_before = 0;
    Vertex kernel_after = 0;
};

}  // namespace dce
