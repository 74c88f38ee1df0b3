#include "ctcsim/mixed_state.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace ctcsim {

MixedState::MixedState(std::vector<WireId> wires, Eigen::MatrixXcd rho)
    : wires_(std::move(wires)), rho_(std::move(rho)) {
    {
        std::unordered_set<std::string_view> seen;
        for (const auto& w : wires_) {
            if (!seen.insert(w).second) {
                throw SimError("duplicate wire label '" + w + "' in register");
            }
        }
    }
    const auto d = static_cast<Eigen::Index>(dim());
    if (rho_.rows() != d || rho_.cols() != d) {
        throw SimError("density matrix is " + std::to_string(rho_.rows()) + "x" +
                       std::to_string(rho_.cols()) + ", expected " + std::to_string(d) +
                       "x" + std::to_string(d));
    }
    if (!rho_.allFinite()) throw SimError("non-finite entry in density matrix");
    if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > kHermitianTolerance) {
        throw SimError("density matrix is not Hermitian");
    }
    if (std::abs(rho_.trace().real() - 1.0) > kHermitianTolerance ||
        std::abs(rho_.trace().imag()) > kHermitianTolerance) {
        throw SimError("density matrix trace is not 1");
    }
    if (min_eigenvalue(rho_) < -kPsdTolerance) {
        throw SimError("density matrix is not positive semidefinite");
    }
}

MixedState MixedState::from_pure(const PureState& psi) {
    const auto d = static_cast<Eigen::Index>(psi.dim());
    Eigen::VectorXcd v(d);
    for (Eigen::Index i = 0; i < d; ++i) v(i) = psi.amps()[static_cast<std::size_t>(i)];
    const double n2 = v.squaredNorm();
    if (std::abs(n2 - 1.0) > 1e-9) {
        throw SimError("from_pure: state must be normalized");
    }
    return MixedState(psi.wires(), v * v.adjoint());
}

MixedState MixedState::maximally_mixed(std::vector<WireId> wires) {
    const auto d = static_cast<Eigen::Index>(std::size_t{1} << wires.size());
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d);
    return MixedState(std::move(wires), std::move(rho));
}

bool MixedState::has_wire(const WireId& w) const {
    return std::find(wires_.begin(), wires_.end(), w) != wires_.end();
}

std::size_t MixedState::wire_index(const WireId& w) const {
    const auto it = std::find(wires_.begin(), wires_.end(), w);
    if (it == wires_.end()) throw SimError("unknown wire '" + w + "'");
    return static_cast<std::size_t>(it - wires_.begin());
}

Eigen::MatrixXcd partial_trace_matrix(const Eigen::MatrixXcd& rho, std::size_t n_wires,
                                      const std::vector<std::size_t>& keep_positions) {
    const std::size_t k = keep_positions.size();
    std::vector<std::size_t> traced;
    for (std::size_t i = 0; i < n_wires; ++i) {
        if (std::find(keep_positions.begin(), keep_positions.end(), i) ==
            keep_positions.end()) {
            traced.push_back(i);
        }
    }
    const auto embed = [&](std::size_t kept_bits, std::size_t traced_bits) {
        std::size_t idx = 0;
        for (std::size_t j = 0; j < k; ++j) {
            const std::size_t bit = (kept_bits >> (k - 1 - j)) & 1u;
            idx |= bit << (n_wires - 1 - keep_positions[j]);
        }
        for (std::size_t j = 0; j < traced.size(); ++j) {
            const std::size_t bit = (traced_bits >> (traced.size() - 1 - j)) & 1u;
            idx |= bit << (n_wires - 1 - traced[j]);
        }
        return static_cast<Eigen::Index>(idx);
    };

    const std::size_t kd = std::size_t{1} << k;
    const std::size_t td = std::size_t{1} << traced.size();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(kd),
                                                  static_cast<Eigen::Index>(kd));
    for (std::size_t r = 0; r < kd; ++r) {
        for (std::size_t c = 0; c < kd; ++c) {
            Amplitude acc{0.0, 0.0};
            for (std::size_t e = 0; e < td; ++e) {
                acc += rho(embed(r, e), embed(c, e));
            }
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = acc;
        }
    }
    return out;
}

MixedState partial_trace(const MixedState& rho, const std::vector<WireId>& keep) {
    std::vector<std::size_t> positions;
    positions.reserve(keep.size());
    for (const auto& w : keep) positions.push_back(rho.wire_index(w));
    return MixedState(keep, partial_trace_matrix(rho.rho(), rho.num_wires(), positions));
}

MixedState tensor(const MixedState& a, const MixedState& b) {
    for (const auto& w : b.wires()) {
        if (a.has_wire(w)) throw SimError("tensor: wire '" + w + "' present on both sides");
    }
    std::vector<WireId> wires = a.wires();
    wires.insert(wires.end(), b.wires().begin(), b.wires().end());
    const auto da = static_cast<Eigen::Index>(a.dim());
    const auto db = static_cast<Eigen::Index>(b.dim());
    Eigen::MatrixXcd out(da * db, da * db);
    for (Eigen::Index i = 0; i < da; ++i) {
        for (Eigen::Index j = 0; j < da; ++j) {
            out.block(i * db, j * db, db, db) = a.rho()(i, j) * b.rho();
        }
    }
    return MixedState(std::move(wires), std::move(out));
}

Eigen::MatrixXcd to_eigen(const GateMatrix& gate) {
    const auto d = static_cast<Eigen::Index>(gate.dim());
    Eigen::MatrixXcd m(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
            m(r, c) = gate.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        }
    }
    return m;
}

double trace_norm(const Eigen::MatrixXcd& hermitian) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian,
                                                           Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs().sum();
}

double min_eigenvalue(const Eigen::MatrixXcd& hermitian) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian,
                                                           Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

}  // namespace ctcsim
