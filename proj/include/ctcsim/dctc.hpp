#pragma once

#include <vector>

#include "ctcsim/gates.hpp"
#include "ctcsim/mixed_state.hpp"
#include "ctcsim/types.hpp"

namespace ctcsim {

struct DctcOptions {
    double tolerance = 1e-10;
    int max_iterations = 10000;
};

struct DctcResult {
    MixedState ctc_fixed_point;   // rho* on the loop wires
    MixedState output;            // chronology-respecting output
    double residual;              // trace-norm defect of the consistency map
    int iterations;
};

class DctcConvergenceError : public SimError {
  public:
    DctcConvergenceError(double best_residual, int iterations)
        : SimError("fixed-point iteration did not converge: best residual " +
                   std::to_string(best_residual) + " after " +
                   std::to_string(iterations) + " iterations"),
          best_residual(best_residual),
          iterations(iterations) {}
    double best_residual;
    int iterations;
};

// Solves rho = Tr_sys[U (rho_in ⊗ rho) U†] by damped iteration from the
// maximally mixed state. `joint_unitary` acts on input.wires ++ ctc_wires
// (in that order); the chronology-respecting output is the system marginal
// of the evolved joint state at the fixed point.
DctcResult dctc_fixed_point(const GateMatrix& joint_unitary, const MixedState& input,
                            const std::vector<WireId>& ctc_wires,
                            const DctcOptions& opts = {});

}  // namespace ctcsim
