#pragma once

#include <optional>
#include <utility>

#include "ctcsim/gates.hpp"
#include "ctcsim/pure_state.hpp"
#include "ctcsim/types.hpp"

namespace ctcsim {

/// Wiring of a post-selected time loop: the entry wire is sent into the
/// loop, the ancilla Bell pair models it, and the second ancilla wire is
/// the loop exit that emerges in the past.
struct PctcSpec {
    WireId entry_wire;
    std::pair<WireId, WireId> ancilla_pair;   // (post-selected half, exit half)
    BellKind postselect_onto = BellKind::PhiPlus;
};

struct PctcOutcome {
    std::optional<PureState> output;   // renormalized residual; absent when null
    double success_probability = 0.0;
    bool null_subspace = true;
};

// A zero-probability projection is a result, not an error: the outcome comes
// back with null_subspace set and no output state.
PctcOutcome pctc_run(const PureState& initial, const Circuit& circuit,
                     const PctcSpec& spec);

bool is_null(const PctcOutcome& outcome);

}  // namespace ctcsim
