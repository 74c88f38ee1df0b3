#include "ctcsim/pure_state.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace ctcsim {

namespace {

void check_unique_wires(const std::vector<WireId>& wires) {
    std::unordered_set<std::string_view> seen;
    for (const auto& w : wires) {
        if (!seen.insert(w).second) {
            throw SimError("duplicate wire label '" + w + "' in register");
        }
    }
}

std::size_t index_of_bits(std::string_view bits) {
    std::size_t idx = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw SimError(std::string("invalid bit '") + c + "' in bitstring");
        }
        idx = (idx << 1) | static_cast<std::size_t>(c == '1');
    }
    return idx;
}

// Positions (in state.wires) of the named wires, in the order given.
std::vector<std::size_t> wire_positions(const PureState& state,
                                        const std::vector<WireId>& wires) {
    std::vector<std::size_t> pos;
    pos.reserve(wires.size());
    for (const auto& w : wires) pos.push_back(state.wire_index(w));
    return pos;
}

// Scatter `local` bits (big-endian over `positions`) into a base index.
std::size_t scatter_bits(std::size_t base, const std::vector<std::size_t>& positions,
                         std::size_t local, std::size_t n_wires) {
    std::size_t idx = base;
    for (std::size_t j = 0; j < positions.size(); ++j) {
        const std::size_t bit = (local >> (positions.size() - 1 - j)) & 1u;
        const std::size_t shift = n_wires - 1 - positions[j];
        idx = (idx & ~(std::size_t{1} << shift)) | (bit << shift);
    }
    return idx;
}

}  // namespace

PureState::PureState(std::vector<WireId> wires, std::vector<Amplitude> amps,
                     bool normalized)
    : wires_(std::move(wires)), amps_(std::move(amps)), normalized_(normalized) {
    check_unique_wires(wires_);
    if (amps_.size() != (std::size_t{1} << wires_.size())) {
        throw SimError("amplitude vector has length " + std::to_string(amps_.size()) +
                       ", expected 2^" + std::to_string(wires_.size()));
    }
    for (const auto& a : amps_) {
        if (!is_finite(a)) throw SimError("non-finite amplitude in state");
    }
    if (normalized_ && std::abs(norm_squared() - 1.0) > kNullTolerance) {
        throw SimError("state marked normalized but squared norm is " +
                       std::to_string(norm_squared()));
    }
}

PureState PureState::scalar(Amplitude value) {
    return PureState({}, {value});
}

bool PureState::has_wire(const WireId& w) const {
    return std::find(wires_.begin(), wires_.end(), w) != wires_.end();
}

std::size_t PureState::wire_index(const WireId& w) const {
    const auto it = std::find(wires_.begin(), wires_.end(), w);
    if (it == wires_.end()) throw SimError("unknown wire '" + w + "'");
    return static_cast<std::size_t>(it - wires_.begin());
}

double PureState::norm_squared() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return s;
}

PureState basis_state(std::size_t n, std::string_view bits) {
    std::vector<WireId> wires;
    wires.reserve(n);
    for (std::size_t i = 0; i < n; ++i) wires.push_back("q" + std::to_string(i));
    return basis_state(std::move(wires), bits);
}

PureState basis_state(std::vector<WireId> wires, std::string_view bits) {
    if (bits.size() != wires.size()) {
        throw SimError("bitstring length " + std::to_string(bits.size()) +
                       " does not match wire count " + std::to_string(wires.size()));
    }
    std::vector<Amplitude> amps(std::size_t{1} << wires.size(), Amplitude{0.0, 0.0});
    amps[index_of_bits(bits)] = Amplitude{1.0, 0.0};
    return PureState(std::move(wires), std::move(amps), true);
}

PureState bell_state(BellKind kind, std::pair<WireId, WireId> wires) {
    if (wires.first == wires.second) {
        throw SimError("bell state needs two distinct wires, got '" + wires.first +
                       "' twice");
    }
    std::vector<Amplitude> amps(4, Amplitude{0.0, 0.0});
    switch (kind) {
    case BellKind::PhiPlus:
        amps[0b00] = kInvSqrt2;
        amps[0b11] = kInvSqrt2;
        break;
    case BellKind::PhiMinus:
        amps[0b00] = kInvSqrt2;
        amps[0b11] = -kInvSqrt2;
        break;
    case BellKind::PsiPlus:
        amps[0b01] = kInvSqrt2;
        amps[0b10] = kInvSqrt2;
        break;
    case BellKind::PsiMinus:
        amps[0b01] = kInvSqrt2;
        amps[0b10] = -kInvSqrt2;
        break;
    }
    return PureState({wires.first, wires.second}, std::move(amps), true);
}

PureState tensor(const PureState& a, const PureState& b) {
    for (const auto& w : b.wires()) {
        if (a.has_wire(w)) throw SimError("tensor: wire '" + w + "' present on both sides");
    }
    std::vector<WireId> wires = a.wires();
    wires.insert(wires.end(), b.wires().begin(), b.wires().end());
    std::vector<Amplitude> amps(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) {
            amps[i * b.dim() + j] = a.amps()[i] * b.amps()[j];
        }
    }
    return PureState(std::move(wires), std::move(amps),
                     a.normalized() && b.normalized());
}

PureState permute_wires(const PureState& state, const std::vector<WireId>& new_order) {
    if (new_order.size() != state.num_wires()) {
        throw SimError("permute_wires: register size mismatch");
    }
    const auto pos = wire_positions(state, new_order);
    const std::size_t n = state.num_wires();
    std::vector<Amplitude> amps(state.dim());
    for (std::size_t idx = 0; idx < state.dim(); ++idx) {
        std::size_t src = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t bit = (idx >> (n - 1 - j)) & 1u;
            src |= bit << (n - 1 - pos[j]);
        }
        amps[idx] = state.amps()[src];
    }
    return PureState(new_order, std::move(amps), state.normalized());
}

Projection project(const PureState& state, const std::vector<WireId>& targets,
                   const PureState& onto) {
    if (onto.num_wires() != targets.size()) {
        throw SimError("project: target state covers " +
                       std::to_string(onto.num_wires()) + " wires, expected " +
                       std::to_string(targets.size()));
    }
    {
        auto a = targets;
        auto b = onto.wires();
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) throw SimError("project: target wires do not match the onto state");
    }
    if (std::abs(onto.norm_squared() - 1.0) > 1e-9) {
        throw SimError("project: onto state must be normalized");
    }

    const std::size_t n = state.num_wires();
    const std::size_t k = onto.num_wires();
    const auto target_pos = wire_positions(state, onto.wires());

    std::vector<WireId> remaining;
    std::vector<std::size_t> remaining_pos;
    for (std::size_t i = 0; i < n; ++i) {
        if (std::find(target_pos.begin(), target_pos.end(), i) == target_pos.end()) {
            remaining.push_back(state.wires()[i]);
            remaining_pos.push_back(i);
        }
    }

    std::vector<Amplitude> residual(std::size_t{1} << remaining.size(),
                                    Amplitude{0.0, 0.0});
    for (std::size_t r = 0; r < residual.size(); ++r) {
        const std::size_t base = scatter_bits(0, remaining_pos, r, n);
        Amplitude acc{0.0, 0.0};
        for (std::size_t t = 0; t < (std::size_t{1} << k); ++t) {
            const std::size_t idx = scatter_bits(base, target_pos, t, n);
            acc += std::conj(onto.amps()[t]) * state.amps()[idx];
        }
        residual[r] = acc;
    }

    PureState res(std::move(remaining), std::move(residual), false);
    return Projection{res, res.norm_squared()};
}

PureState renormalize(const PureState& state) {
    const double n2 = state.norm_squared();
    if (n2 <= kNullTolerance) throw NullSubspaceError(n2);
    const double inv = 1.0 / std::sqrt(n2);
    std::vector<Amplitude> amps = state.amps();
    for (auto& a : amps) a *= inv;
    return PureState(state.wires(), std::move(amps), true);
}

PureState basis_vector(const WireId& wire, Basis basis, int outcome) {
    if (outcome != 0 && outcome != 1) throw SimError("outcome must be 0 or 1");
    if (basis == Basis::Standard) {
        return basis_state({wire}, outcome == 0 ? "0" : "1");
    }
    const double sign = outcome == 0 ? 1.0 : -1.0;
    return PureState({wire}, {Amplitude{kInvSqrt2, 0.0}, Amplitude{sign * kInvSqrt2, 0.0}},
                     true);
}

std::pair<double, double> measure_probs(const PureState& state, const WireId& wire,
                                        Basis basis) {
    if (std::abs(state.norm_squared() - 1.0) > 1e-9) {
        throw SimError("measure_probs: state must be normalized");
    }
    const double p0 = project(state, {wire}, basis_vector(wire, basis, 0)).probability;
    const double p1 = project(state, {wire}, basis_vector(wire, basis, 1)).probability;
    return {p0, p1};
}

PureState collapse(const PureState& state, const WireId& wire, Basis basis,
                   int outcome) {
    const PureState onto = basis_vector(wire, basis, outcome);
    const Projection proj = project(state, {wire}, onto);
    if (proj.probability <= kNullTolerance) throw NullSubspaceError(proj.probability);
    // Reinsert the measured wire in its original position, set to the outcome.
    PureState with_wire = tensor(proj.residual, onto);
    return renormalize(permute_wires(with_wire, state.wires()));
}

double fidelity(const PureState& a, const PureState& b) {
    if (a.wires() != b.wires()) throw SimError("fidelity: registers differ");
    Amplitude overlap{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        overlap += std::conj(a.amps()[i]) * b.amps()[i];
    }
    const double denom = a.norm_squared() * b.norm_squared();
    if (denom <= kNullTolerance * kNullTolerance) {
        throw SimError("fidelity: zero-norm state");
    }
    return std::norm(overlap) / denom;
}

bool approx_equal(const PureState& a, const PureState& b, double tol) {
    if (a.wires() != b.wires()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (std::abs(a.amps()[i] - b.amps()[i]) > tol) return false;
    }
    return true;
}

bool equal_up_to_global_phase(const PureState& a, const PureState& b, double tol) {
    if (a.wires() != b.wires()) return false;
    return fidelity(a, b) >= 1.0 - tol;
}

}  // namespace ctcsim
