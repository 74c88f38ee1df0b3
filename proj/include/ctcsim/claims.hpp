#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ctcsim/causality.hpp"
#include "ctcsim/protocol.hpp"

namespace ctcsim {

// The signaling circuits ship with hand-derived expected states for the
// standard worked cases. Reports compare those against the exact simulation
// and flag every disagreement, so the tool doubles as an erratum ledger for
// the hand derivation.

struct Discrepancy {
    std::string id;
    std::string detail;
};

struct ProtocolClaim {
    Symbol symbol;
    // Expected post-selected residual on (B, C2), up to global phase.
    std::vector<Amplitude> expected_joint;
    std::string id;    // flag emitted when the simulation disagrees
};

struct ScenarioClaim {
    std::string gates_label;   // sequence_label() of the canonical representative
    Basis basis;
    int outcome;
    bool claims_null = false;
    // Expected bob-first subspace direction on (B, C2); empty when claims_null.
    std::vector<Amplitude> expected_subspace;
    std::optional<double> expected_alice_first;
    std::string id;
    std::string note;
};

const std::vector<ProtocolClaim>& protocol_claims();
const std::vector<ScenarioClaim>& scenario_claims();

// Empty optional: no claim registered for the case, or the claim matches.
std::optional<Discrepancy> check_protocol_claim(const ProtocolRun& run);
std::optional<Discrepancy> check_scenario_claim(const ScanRow& row);

}  // namespace ctcsim
