#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ctcsim/protocol.hpp"
#include "ctcsim/pure_state.hpp"

namespace ctcsim {

enum class BobTiming { Before, After };

/// One causality case: Alice's gate choice plus Bob's measurement.
/// Gate targets are limited to wires {A, C2}.
struct Scenario {
    GateSequence alice_gates;
    Basis bob_basis = Basis::Standard;
    int bob_outcome = 0;
    BobTiming bob_timing = BobTiming::Before;
};

struct BobFirstResult {
    std::optional<PureState> subspace;   // unnormalized residual on (B, C2)
    double probability = 0.0;            // joint: collapse prob x post-selection prob
};

// Bob collapses his half of psi+ first, then Alice's gates run and the loop
// post-selection is applied.
BobFirstResult evaluate_bob_first(const Scenario& s,
                                  BellKind postselect = BellKind::PhiPlus);

// Alice's gates run on the uncollapsed state; returns the probability of
// Bob's stated outcome on the post-selected result (0 for a null run).
double evaluate_alice_first(const Scenario& s, BellKind postselect = BellKind::PhiPlus);

struct OrderingReport {
    double bob_first_probability = 0.0;
    double alice_first_probability = 0.0;
    std::optional<PureState> projection_subspace;   // bob-first residual; absent if null
};

OrderingReport evaluate_orderings(const Scenario& s,
                                  BellKind postselect = BellKind::PhiPlus);

enum class Verdict { Occurs, Forbidden, ReversedCausality };

inline const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Occurs: return "OCCURS";
    case Verdict::Forbidden: return "FORBIDDEN";
    case Verdict::ReversedCausality: return "REVERSED_CAUSALITY";
    }
    return "?";
}

struct Classification {
    Verdict verdict;
    struct Rationale {
        Symbol decoded_symbol;     // what Bob's (basis, outcome) pair reads as
        bool canonical_gates;      // gates match that symbol's encoding (up to phase)
        bool bob_first_null;
        bool alice_first_null;
        std::string summary;
    } rationale;
};

Classification classify(const Scenario& s, BellKind postselect = BellKind::PhiPlus);
Classification classify_report(const Scenario& s, const OrderingReport& report);

struct ScanRow {
    Scenario scenario;
    OrderingReport report;
    Classification classification;
};

// Every gate sequence up to max_gates over {CNOT, SWAP, X, Z} (deduplicated
// by the induced unitary), crossed with both bases and both outcomes.
// Order is deterministic: sequences shortlex by gate name, then basis
// (standard first), then outcome.
std::vector<ScanRow> scan_all(int max_gates, BellKind postselect = BellKind::PhiPlus);

}  // namespace ctcsim
