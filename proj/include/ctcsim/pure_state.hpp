#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "ctcsim/types.hpp"

namespace ctcsim {

/// Complex amplitude vector over an ordered wire register.
///
/// Indexing is big-endian: wire 0 is the most significant bit of the
/// amplitude index, so for register [B, A] the bitstring "10" (B=1, A=0)
/// sits at index 2.
class PureState {
  public:
    // `normalized` asserts unit norm; it is verified on construction.
    PureState(std::vector<WireId> wires, std::vector<Amplitude> amps,
              bool normalized = false);

    // 0-wire state holding a single scalar amplitude.
    static PureState scalar(Amplitude value);

    const std::vector<WireId>& wires() const { return wires_; }
    const std::vector<Amplitude>& amps() const { return amps_; }
    bool normalized() const { return normalized_; }

    std::size_t num_wires() const { return wires_.size(); }
    std::size_t dim() const { return amps_.size(); }

    bool has_wire(const WireId& w) const;
    std::size_t wire_index(const WireId& w) const;  // throws if absent

    double norm_squared() const;

    // Bit of wire position `pos` inside amplitude index `idx`.
    std::size_t bit_at(std::size_t idx, std::size_t pos) const {
        return (idx >> (wires_.size() - 1 - pos)) & 1u;
    }

  private:
    std::vector<WireId> wires_;
    std::vector<Amplitude> amps_;
    bool normalized_ = false;
};

struct Projection {
    PureState residual;   // unnormalized, target wires removed
    double probability;   // squared norm of the residual
};

// Computational basis state over wires named q0..q{n-1}; bits big-endian.
PureState basis_state(std::size_t n, std::string_view bits);
// Same, with explicit wire names (|names| must equal |bits|).
PureState basis_state(std::vector<WireId> wires, std::string_view bits);

PureState bell_state(BellKind kind, std::pair<WireId, WireId> wires);

// Kronecker product; registers are concatenated, wire sets must be disjoint.
PureState tensor(const PureState& a, const PureState& b);

// Reorder the register; amplitudes are permuted accordingly.
PureState permute_wires(const PureState& state, const std::vector<WireId>& new_order);

Projection project(const PureState& state, const std::vector<WireId>& targets,
                   const PureState& onto);

PureState renormalize(const PureState& state);  // throws NullSubspaceError

std::pair<double, double> measure_probs(const PureState& state, const WireId& wire,
                                        Basis basis);

// Post-measurement state; the measured wire stays in the register.
PureState collapse(const PureState& state, const WireId& wire, Basis basis,
                   int outcome);

// |<a|b>|^2 / (|a|^2 |b|^2); requires same wire order.
double fidelity(const PureState& a, const PureState& b);

bool approx_equal(const PureState& a, const PureState& b, double tol = kNullTolerance);
bool equal_up_to_global_phase(const PureState& a, const PureState& b,
                              double tol = kNullTolerance);

// Single-qubit basis vector |0>/|1> (standard) or |+>/|-> (diagonal).
PureState basis_vector(const WireId& wire, Basis basis, int outcome);

}  // namespace ctcsim
