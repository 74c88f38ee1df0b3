#include "ctcsim/protocol.hpp"

#include <cmath>

namespace ctcsim {

Basis basis_of(Symbol s) {
    return (s == Symbol::Zero || s == Symbol::One) ? Basis::Standard : Basis::Diagonal;
}

int bit_of(Symbol s) {
    return (s == Symbol::One || s == Symbol::Minus) ? 1 : 0;
}

Symbol symbol_for(Basis basis, int bit) {
    if (basis == Basis::Standard) return bit == 0 ? Symbol::Zero : Symbol::One;
    return bit == 0 ? Symbol::Plus : Symbol::Minus;
}

GateApp make_cnot_a_c2() { return {&gates::cnot(), {kWireA, kWireC2}}; }
GateApp make_z_a() { return {&gates::z(), {kWireA}}; }
GateApp make_swap_a_c2() { return {&gates::swap_gate(), {kWireA, kWireC2}}; }
GateApp make_x_a() { return {&gates::x(), {kWireA}}; }

std::string sequence_label(const GateSequence& seq) {
    if (seq.empty()) return "(none)";
    std::string label;
    for (const auto& app : seq) {
        if (!label.empty()) label += '+';
        label += app.gate->name();
    }
    return label;
}

GateSequence encode(Symbol symbol) {
    switch (symbol) {
    case Symbol::One:
        return {make_cnot_a_c2(), make_swap_a_c2()};
    case Symbol::Zero:
        return {make_cnot_a_c2(), make_swap_a_c2(), make_x_a()};
    case Symbol::Plus:
        return {make_cnot_a_c2()};
    case Symbol::Minus:
        return {make_cnot_a_c2(), make_z_a()};
    }
    throw SimError("encode: unknown symbol");
}

namespace {

// Split a normalized rank-1 two-qubit state |psi> on (B, C2) into its
// single-wire factors. Rank is checked via the 2x2 amplitude determinant.
std::pair<PureState, PureState> split_product(const PureState& joint) {
    if (joint.num_wires() != 2) throw SimError("split_product: need a 2-wire state");
    const auto& a = joint.amps();
    const Amplitude det = a[0] * a[3] - a[1] * a[2];
    if (std::abs(det) > 1e-10) {
        throw SimError("post-selected residual is entangled; cannot factorize");
    }
    // Pick the strongest column / row as the factor directions.
    const double col0 = std::norm(a[0]) + std::norm(a[2]);
    const double col1 = std::norm(a[1]) + std::norm(a[3]);
    const std::size_t c = col0 >= col1 ? 0 : 1;
    PureState first({joint.wires()[0]}, {a[0 + c], a[2 + c]});
    const double row0 = std::norm(a[0]) + std::norm(a[1]);
    const double row1 = std::norm(a[2]) + std::norm(a[3]);
    const std::size_t r = row0 >= row1 ? 0 : 2;
    PureState second({joint.wires()[1]}, {a[r + 0], a[r + 1]});
    return {renormalize(first), renormalize(second)};
}

ProtocolRun run_sequence(Symbol symbol, const GateSequence& seq, BellKind postselect) {
    const PureState initial = tensor(bell_state(BellKind::PsiPlus, {kWireB, kWireA}),
                                     bell_state(BellKind::PhiPlus, {kWireC1, kWireC2}));
    const Circuit circuit{seq, std::nullopt};
    const PctcSpec spec{kWireA, {kWireC1, kWireC2}, postselect};
    const PctcOutcome outcome = pctc_run(initial, circuit, spec);
    if (is_null(outcome)) {
        throw NullSubspaceError(outcome.success_probability);
    }
    auto [bob, residual] = split_product(*outcome.output);
    return ProtocolRun{symbol, std::move(bob), std::move(residual),
                       outcome.success_probability};
}

}  // namespace

ProtocolRun run_protocol(Symbol symbol, BellKind postselect) {
    return run_sequence(symbol, encode(symbol), postselect);
}

ProtocolRun run_ralph(bool use_phase_flip) {
    GateSequence seq{make_cnot_a_c2()};
    if (use_phase_flip) seq.push_back(make_z_a());
    return run_sequence(use_phase_flip ? Symbol::Minus : Symbol::Plus, seq,
                        BellKind::PhiPlus);
}

Decoded decode(const PureState& bob_state, Basis basis) {
    if (bob_state.num_wires() != 1) throw SimError("decode: need a single-qubit state");
    const auto [p0, p1] = measure_probs(bob_state, bob_state.wires()[0], basis);
    if (p1 > p0) return Decoded{1, p1};
    return Decoded{0, p0};
}

}  // namespace ctcsim
