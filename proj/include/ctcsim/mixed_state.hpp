#pragma once

#include <Eigen/Dense>
#include <vector>

#include "ctcsim/gates.hpp"
#include "ctcsim/pure_state.hpp"
#include "ctcsim/types.hpp"

namespace ctcsim {

/// Density matrix over an ordered wire register (same big-endian indexing
/// as PureState). Construction enforces Hermiticity, positivity and unit
/// trace within the library tolerances.
class MixedState {
  public:
    MixedState(std::vector<WireId> wires, Eigen::MatrixXcd rho);

    static MixedState from_pure(const PureState& psi);
    static MixedState maximally_mixed(std::vector<WireId> wires);

    const std::vector<WireId>& wires() const { return wires_; }
    const Eigen::MatrixXcd& rho() const { return rho_; }

    std::size_t num_wires() const { return wires_.size(); }
    std::size_t dim() const { return std::size_t{1} << wires_.size(); }

    bool has_wire(const WireId& w) const;
    std::size_t wire_index(const WireId& w) const;

  private:
    std::vector<WireId> wires_;
    Eigen::MatrixXcd rho_;
};

// Reduced density matrix over `keep` (result register in `keep` order).
MixedState partial_trace(const MixedState& rho, const std::vector<WireId>& keep);

// Kronecker product; wire sets must be disjoint.
MixedState tensor(const MixedState& a, const MixedState& b);

// Raw-matrix partial trace used by the solvers: keeps the listed wire
// positions (of an n-wire register), in the order given.
Eigen::MatrixXcd partial_trace_matrix(const Eigen::MatrixXcd& rho, std::size_t n_wires,
                                      const std::vector<std::size_t>& keep_positions);

Eigen::MatrixXcd to_eigen(const GateMatrix& gate);

// Sum of absolute eigenvalues; input must be Hermitian.
double trace_norm(const Eigen::MatrixXcd& hermitian);

double min_eigenvalue(const Eigen::MatrixXcd& hermitian);

}  // namespace ctcsim
