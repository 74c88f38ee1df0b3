#include "ctcsim/pctc.hpp"

namespace ctcsim {

PctcOutcome pctc_run(const PureState& initial, const Circuit& circuit,
                     const PctcSpec& spec) {
    const auto& [c1, c2] = spec.ancilla_pair;
    if (spec.entry_wire == c1 || spec.entry_wire == c2 || c1 == c2) {
        throw SimError("pctc_run: entry and ancilla wires must be distinct");
    }
    if (circuit.postselect.has_value()) {
        const auto& ps = *circuit.postselect;
        const bool same_pair = (ps.first == spec.entry_wire && ps.second == c1) ||
                               (ps.first == c1 && ps.second == spec.entry_wire);
        if (!same_pair || ps.onto != spec.postselect_onto) {
            throw SimError("pctc_run: circuit post-selection conflicts with the loop spec");
        }
    }

    PureState state = initial;
    if (!state.has_wire(spec.entry_wire)) {
        throw SimError("pctc_run: initial state lacks entry wire '" + spec.entry_wire +
                       "'");
    }
    // The loop pair always enters in phi+; tensor it in when the caller
    // supplied only the chronology-respecting part.
    if (!state.has_wire(c1) && !state.has_wire(c2)) {
        state = tensor(state, bell_state(BellKind::PhiPlus, {c1, c2}));
    } else if (!state.has_wire(c1) || !state.has_wire(c2)) {
        throw SimError("pctc_run: initial state contains only half of the loop pair");
    }

    state = apply_gates(std::move(state), circuit.gates);

    const PureState onto =
        bell_state(spec.postselect_onto, {spec.entry_wire, c1});
    const Projection proj = project(state, {spec.entry_wire, c1}, onto);

    PctcOutcome outcome;
    outcome.success_probability = proj.probability;
    if (proj.probability <= kNullTolerance) {
        outcome.null_subspace = true;
        return outcome;
    }
    outcome.null_subspace = false;
    outcome.output = renormalize(proj.residual);
    return outcome;
}

bool is_null(const PctcOutcome& outcome) {
    return outcome.success_probability <= kNullTolerance;
}

}  // namespace ctcsim
