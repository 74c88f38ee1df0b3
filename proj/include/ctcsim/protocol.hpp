#pragma once

#include <string>
#include <vector>

#include "ctcsim/gates.hpp"
#include "ctcsim/pctc.hpp"
#include "ctcsim/pure_state.hpp"

namespace ctcsim {

// Canonical register for the signaling circuits, in fixed order
// [B, A, C1, C2]: Bob's half, Alice's half, the post-selected half of the
// loop pair, and the loop exit.
inline const WireId kWireB = "B";
inline const WireId kWireA = "A";
inline const WireId kWireC1 = "C1";
inline const WireId kWireC2 = "C2";

enum class Symbol { Zero, One, Plus, Minus };

inline const char* symbol_name(Symbol s) {
    switch (s) {
    case Symbol::Zero: return "zero";
    case Symbol::One: return "one";
    case Symbol::Plus: return "plus";
    case Symbol::Minus: return "minus";
    }
    return "?";
}

Basis basis_of(Symbol s);       // zero/one -> standard, plus/minus -> diagonal
int bit_of(Symbol s);           // zero/plus -> 0, one/minus -> 1
Symbol symbol_for(Basis basis, int bit);

using GateSequence = std::vector<GateApp>;

// Alice-side gate alphabet on the canonical register.
GateApp make_cnot_a_c2();
GateApp make_z_a();
GateApp make_swap_a_c2();
GateApp make_x_a();

// "CNOT+SWAP+X" style label; "(none)" for the empty sequence.
std::string sequence_label(const GateSequence& seq);

GateSequence encode(Symbol symbol);

struct ProtocolRun {
    Symbol symbol;
    PureState bob_state;       // wire B, normalized
    PureState ctc_residual;    // wire C2, normalized
    double success_probability;
};

// Builds psi+ on (B,A) and phi+ on (C1,C2), applies encode(symbol), and
// post-selects (A,C1). The surviving (B,C2) residual factorizes for the
// four encodings; that is asserted at runtime.
ProtocolRun run_protocol(Symbol symbol, BellKind postselect = BellKind::PhiPlus);

struct Decoded {
    int bit;
    double confidence;
};

// Argmax outcome in the chosen basis; ties break toward 0.
Decoded decode(const PureState& bob_state, Basis basis);

// Two-state radio: [CNOT] sends |+>, [CNOT, Z] sends |->.
ProtocolRun run_ralph(bool use_phase_flip);

}  // namespace ctcsim
