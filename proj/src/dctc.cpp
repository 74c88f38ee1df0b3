#include "ctcsim/dctc.hpp"

#include <algorithm>
#include <limits>

namespace ctcsim {

namespace {

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

}  // namespace

DctcResult dctc_fixed_point(const GateMatrix& joint_unitary, const MixedState& input,
                            const std::vector<WireId>& ctc_wires,
                            const DctcOptions& opts) {
    const std::size_t n_sys = input.num_wires();
    const std::size_t n_ctc = ctc_wires.size();
    const std::size_t n = n_sys + n_ctc;
    if (joint_unitary.arity() != n) {
        throw SimError("dctc_fixed_point: unitary acts on " +
                       std::to_string(joint_unitary.arity()) + " wires, register has " +
                       std::to_string(n));
    }
    for (const auto& w : ctc_wires) {
        if (input.has_wire(w)) {
            throw SimError("dctc_fixed_point: wire '" + w +
                           "' is both a system and a loop wire");
        }
    }

    std::vector<std::size_t> sys_positions(n_sys);
    std::vector<std::size_t> ctc_positions(n_ctc);
    for (std::size_t i = 0; i < n_sys; ++i) sys_positions[i] = i;
    for (std::size_t i = 0; i < n_ctc; ++i) ctc_positions[i] = n_sys + i;

    const Eigen::MatrixXcd u = to_eigen(joint_unitary);
    const Eigen::MatrixXcd& rho_in = input.rho();

    const auto consistency_map = [&](const Eigen::MatrixXcd& rho) {
        const Eigen::MatrixXcd joint = u * kron(rho_in, rho) * u.adjoint();
        return partial_trace_matrix(joint, n, ctc_positions);
    };

    const auto ctc_dim = static_cast<Eigen::Index>(std::size_t{1} << n_ctc);
    Eigen::MatrixXcd rho =
        Eigen::MatrixXcd::Identity(ctc_dim, ctc_dim) / static_cast<double>(ctc_dim);

    double best_residual = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= opts.max_iterations; ++k) {
        const Eigen::MatrixXcd mapped = consistency_map(rho);
        const double residual = trace_norm(mapped - rho);
        best_residual = std::min(best_residual, residual);
        if (residual <= opts.tolerance) {
            const Eigen::MatrixXcd joint = u * kron(rho_in, rho) * u.adjoint();
            MixedState fixed_point(ctc_wires, rho);
            MixedState output(input.wires(),
                              partial_trace_matrix(joint, n, sys_positions));
            return DctcResult{std::move(fixed_point), std::move(output), residual, k};
        }
        rho = 0.5 * (mapped + rho);
        rho = 0.5 * (rho + rho.adjoint().eval());   // scrub roundoff drift
    }
    throw DctcConvergenceError(best_residual, opts.max_iterations);
}

}  // namespace ctcsim
