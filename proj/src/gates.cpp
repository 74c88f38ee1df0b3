#include "ctcsim/gates.hpp"

#include <algorithm>
#include <cmath>

namespace ctcsim {

namespace {

void check_unitary(const std::string& name, std::size_t dim,
                   const std::vector<Amplitude>& m) {
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            Amplitude acc{0.0, 0.0};
            for (std::size_t k = 0; k < dim; ++k) {
                acc += std::conj(m[k * dim + r]) * m[k * dim + c];
            }
            const double expect = r == c ? 1.0 : 0.0;
            if (std::abs(acc - expect) > kUnitaryTolerance) {
                throw SimError("gate '" + name + "' is not unitary");
            }
        }
    }
}

}  // namespace

GateMatrix::GateMatrix(std::string name, std::size_t arity,
                       std::vector<Amplitude> row_major)
    : name_(std::move(name)), arity_(arity), matrix_(std::move(row_major)) {
    const std::size_t d = dim();
    if (matrix_.size() != d * d) {
        throw SimError("gate '" + name_ + "': matrix has " +
                       std::to_string(matrix_.size()) + " entries, expected " +
                       std::to_string(d * d));
    }
    for (const auto& a : matrix_) {
        if (!is_finite(a)) throw SimError("gate '" + name_ + "': non-finite entry");
    }
    check_unitary(name_, d, matrix_);
}

namespace gates {

const GateMatrix& identity() {
    static const GateMatrix g("I", 1, {1, 0, 0, 1});
    return g;
}

const GateMatrix& x() {
    static const GateMatrix g("X", 1, {0, 1, 1, 0});
    return g;
}

const GateMatrix& z() {
    static const GateMatrix g("Z", 1, {1, 0, 0, -1});
    return g;
}

const GateMatrix& h() {
    static const GateMatrix g("H", 1,
                              {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2});
    return g;
}

const GateMatrix& cnot() {
    static const GateMatrix g("CNOT", 2,
                              {1, 0, 0, 0,
                               0, 1, 0, 0,
                               0, 0, 0, 1,
                               0, 0, 1, 0});
    return g;
}

const GateMatrix& swap_gate() {
    static const GateMatrix g("SWAP", 2,
                              {1, 0, 0, 0,
                               0, 0, 1, 0,
                               0, 1, 0, 0,
                               0, 0, 0, 1});
    return g;
}

const GateMatrix* by_name(const std::string& name) {
    if (name == "i") return &identity();
    if (name == "x") return &x();
    if (name == "z") return &z();
    if (name == "h") return &h();
    if (name == "cnot") return &cnot();
    if (name == "swap") return &swap_gate();
    return nullptr;
}

}  // namespace gates

double matrix_distance(const GateMatrix& a, const GateMatrix& b) {
    if (a.arity() != b.arity()) throw SimError("matrix_distance: arity mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.row_major().size(); ++i) {
        worst = std::max(worst, std::abs(a.row_major()[i] - b.row_major()[i]));
    }
    return worst;
}

bool matrices_equal(const GateMatrix& a, const GateMatrix& b, double tol) {
    return a.arity() == b.arity() && matrix_distance(a, b) <= tol;
}

bool matrices_equal_up_to_phase(const GateMatrix& a, const GateMatrix& b, double tol) {
    if (a.arity() != b.arity()) return false;
    // For unitaries, |tr(A†B)| = dim iff A = e^{i phi} B.
    Amplitude tr{0.0, 0.0};
    const std::size_t d = a.dim();
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            tr += std::conj(a.at(r, c)) * b.at(r, c);
        }
    }
    return std::abs(std::abs(tr) - static_cast<double>(d)) <= tol * static_cast<double>(d);
}

PureState apply_gate(const PureState& state, const GateMatrix& gate,
                     const std::vector<WireId>& targets) {
    if (targets.size() != gate.arity()) {
        throw SimError("apply_gate: gate '" + gate.name() + "' expects " +
                       std::to_string(gate.arity()) + " targets, got " +
                       std::to_string(targets.size()));
    }
    for (std::size_t i = 0; i < targets.size(); ++i) {
        for (std::size_t j = i + 1; j < targets.size(); ++j) {
            if (targets[i] == targets[j]) {
                throw SimError("apply_gate: duplicate target wire '" + targets[i] + "'");
            }
        }
    }
    const std::size_t n = state.num_wires();
    std::vector<std::size_t> pos;
    pos.reserve(targets.size());
    for (const auto& t : targets) pos.push_back(state.wire_index(t));

    const std::size_t k = gate.arity();
    const std::size_t local_dim = std::size_t{1} << k;
    std::vector<Amplitude> out(state.dim(), Amplitude{0.0, 0.0});
    for (std::size_t idx = 0; idx < state.dim(); ++idx) {
        std::size_t row = 0;
        for (std::size_t j = 0; j < k; ++j) {
            row = (row << 1) | ((idx >> (n - 1 - pos[j])) & 1u);
        }
        Amplitude acc{0.0, 0.0};
        for (std::size_t col = 0; col < local_dim; ++col) {
            const Amplitude u = gate.at(row, col);
            if (u == Amplitude{0.0, 0.0}) continue;
            std::size_t src = idx;
            for (std::size_t j = 0; j < k; ++j) {
                const std::size_t bit = (col >> (k - 1 - j)) & 1u;
                const std::size_t shift = n - 1 - pos[j];
                src = (src & ~(std::size_t{1} << shift)) | (bit << shift);
            }
            acc += u * state.amps()[src];
        }
        out[idx] = acc;
    }
    return PureState(state.wires(), std::move(out), state.normalized());
}

PureState apply_gates(PureState state, const std::vector<GateApp>& gates) {
    for (const auto& app : gates) {
        state = apply_gate(state, *app.gate, app.targets);
    }
    return state;
}

GateMatrix circuit_unitary(const std::vector<GateApp>& gates,
                           const std::vector<WireId>& register_wires,
                           const std::string& name) {
    const std::size_t n = register_wires.size();
    const std::size_t d = std::size_t{1} << n;
    std::vector<Amplitude> m(d * d, Amplitude{0.0, 0.0});
    for (std::size_t col = 0; col < d; ++col) {
        std::string bits(n, '0');
        for (std::size_t j = 0; j < n; ++j) {
            bits[j] = ((col >> (n - 1 - j)) & 1u) ? '1' : '0';
        }
        const PureState column = apply_gates(basis_state(register_wires, bits), gates);
        for (std::size_t row = 0; row < d; ++row) {
            m[row * d + col] = column.amps()[row];
        }
    }
    return GateMatrix(name, n, std::move(m));
}

}  // namespace ctcsim
