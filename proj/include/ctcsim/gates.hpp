#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ctcsim/pure_state.hpp"
#include "ctcsim/types.hpp"

namespace ctcsim {

/// Unitary acting on `arity` wires, stored row-major over the 2^arity
/// big-endian local basis. Unitarity is checked on construction.
class GateMatrix {
  public:
    GateMatrix(std::string name, std::size_t arity, std::vector<Amplitude> row_major);

    const std::string& name() const { return name_; }
    std::size_t arity() const { return arity_; }
    std::size_t dim() const { return std::size_t{1} << arity_; }

    Amplitude at(std::size_t row, std::size_t col) const {
        return matrix_[row * dim() + col];
    }
    const std::vector<Amplitude>& row_major() const { return matrix_; }

  private:
    std::string name_;
    std::size_t arity_;
    std::vector<Amplitude> matrix_;
};

namespace gates {
const GateMatrix& identity();
const GateMatrix& x();
const GateMatrix& z();
const GateMatrix& h();
const GateMatrix& cnot();       // targets: [control, target]
const GateMatrix& swap_gate();
// Built-in by lowercase name ("i","x","z","h","cnot","swap"), or nullptr.
const GateMatrix* by_name(const std::string& name);
}  // namespace gates

double matrix_distance(const GateMatrix& a, const GateMatrix& b);  // max |a-b|
bool matrices_equal(const GateMatrix& a, const GateMatrix& b,
                    double tol = kUnitaryTolerance);
bool matrices_equal_up_to_phase(const GateMatrix& a, const GateMatrix& b,
                                double tol = kUnitaryTolerance);

// Embed the gate on the target wires (identity elsewhere); norm preserved.
PureState apply_gate(const PureState& state, const GateMatrix& gate,
                     const std::vector<WireId>& targets);

struct GateApp {
    const GateMatrix* gate;        // non-owning; built-ins live forever
    std::vector<WireId> targets;
};

struct BellProjection {
    WireId first;
    WireId second;
    BellKind onto = BellKind::PhiPlus;
};

struct Circuit {
    std::vector<GateApp> gates;
    std::optional<BellProjection> postselect;
};

PureState apply_gates(PureState state, const std::vector<GateApp>& gates);

// Dense unitary of a gate list over an explicit register (gate targets must
// all be register wires). Columns are built through the state-vector kernel.
GateMatrix circuit_unitary(const std::vector<GateApp>& gates,
                           const std::vector<WireId>& register_wires,
                           const std::string& name = "circuit");

}  // namespace ctcsim
