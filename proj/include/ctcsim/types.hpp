#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace ctcsim {

using Amplitude = std::complex<double>;
using WireId = std::string;

// Squared-norm threshold below which a post-selected branch counts as empty.
inline constexpr double kNullTolerance = 1e-12;
inline constexpr double kUnitaryTolerance = 1e-12;
inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kPsdTolerance = 1e-10;

inline constexpr double kInvSqrt2 = 0.70710678118654752440;

enum class Basis { Standard, Diagonal };

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

class SimError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A projection landed on an (effectively) zero-norm branch.
class NullSubspaceError : public SimError {
  public:
    explicit NullSubspaceError(double squared_norm)
        : SimError("null subspace: squared norm " + std::to_string(squared_norm) +
                   " is below tolerance"),
          squared_norm(squared_norm) {}
    double squared_norm;
};

inline bool is_finite(Amplitude a) {
    return std::isfinite(a.real()) && std::isfinite(a.imag());
}

inline const char* basis_name(Basis b) {
    return b == Basis::Standard ? "std" : "diag";
}

inline const char* bell_kind_name(BellKind k) {
    switch (k) {
    case BellKind::PhiPlus: return "phi+";
    case BellKind::PhiMinus: return "phi-";
    case BellKind::PsiPlus: return "psi+";
    case BellKind::PsiMinus: return "psi-";
    }
    return "?";
}

}  // namespace ctcsim
