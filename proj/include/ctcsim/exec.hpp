#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "ctcsim/causality.hpp"
#include "ctcsim/dctc.hpp"
#include "ctcsim/dsl.hpp"
#include "ctcsim/pure_state.hpp"

namespace ctcsim {

// Result of executing a pctc-style program: every collapse multiplies its
// outcome probability into success_probability, and the terminal
// post-selection multiplies in its branch weight.
struct CircuitRunResult {
    std::optional<PureState> final_state;   // absent when the run went null
    double success_probability = 1.0;
    bool null_subspace = false;
};

struct ScanRunResult {
    std::vector<ScanRow> rows;
    BellKind postselect = BellKind::PhiPlus;
    int max_gates = 0;
};

struct DctcRunResult {
    DctcResult result;
    std::vector<WireId> system_wires;
    std::vector<WireId> ctc_wires;
};

using ExecResult = std::variant<CircuitRunResult, ScanRunResult, DctcRunResult>;

struct ExecOptions {
    int scan_max_gates = 2;
    DctcOptions dctc;
};

// Runs a parsed, semantically valid program. Null post-selections come back
// as data; a non-converging dctc run throws DctcConvergenceError.
ExecResult execute(const dsl::Program& program, const ExecOptions& opts = {});

}  // namespace ctcsim
