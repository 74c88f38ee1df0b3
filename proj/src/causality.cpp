#include "ctcsim/causality.hpp"

#include <algorithm>
#include <array>

#include "ctcsim/pctc.hpp"

namespace ctcsim {

namespace {

PureState initial_entangled() {
    return tensor(bell_state(BellKind::PsiPlus, {kWireB, kWireA}),
                  bell_state(BellKind::PhiPlus, {kWireC1, kWireC2}));
}

const std::array<GateApp, 4>& gate_alphabet() {
    static const std::array<GateApp, 4> alphabet{
        make_cnot_a_c2(), make_swap_a_c2(), make_x_a(), make_z_a()};
    return alphabet;
}

GateMatrix sequence_unitary(const GateSequence& seq) {
    return circuit_unitary(seq, {kWireA, kWireC2}, sequence_label(seq));
}

bool is_canonical_encoding(const GateSequence& gates, Symbol symbol) {
    // Compared through the induced unitary so that reorderings like Z before
    // the CNOT still count as the same encoding.
    return matrices_equal_up_to_phase(sequence_unitary(gates),
                                      sequence_unitary(encode(symbol)));
}

}  // namespace

BobFirstResult evaluate_bob_first(const Scenario& s, BellKind postselect) {
    const PureState shared = bell_state(BellKind::PsiPlus, {kWireB, kWireA});
    const auto [p0, p1] = measure_probs(shared, kWireB, s.bob_basis);
    const double collapse_prob = s.bob_outcome == 0 ? p0 : p1;

    PureState state = collapse(shared, kWireB, s.bob_basis, s.bob_outcome);
    state = tensor(state, bell_state(BellKind::PhiPlus, {kWireC1, kWireC2}));
    state = apply_gates(std::move(state), s.alice_gates);

    const Projection proj =
        project(state, {kWireA, kWireC1}, bell_state(postselect, {kWireA, kWireC1}));

    BobFirstResult result;
    result.probability = collapse_prob * proj.probability;
    if (proj.probability > kNullTolerance) {
        result.subspace = proj.residual;
    }
    return result;
}

double evaluate_alice_first(const Scenario& s, BellKind postselect) {
    const Circuit circuit{s.alice_gates, std::nullopt};
    const PctcSpec spec{kWireA, {kWireC1, kWireC2}, postselect};
    const PctcOutcome outcome = pctc_run(initial_entangled(), circuit, spec);
    if (is_null(outcome)) return 0.0;
    const auto [p0, p1] = measure_probs(*outcome.output, kWireB, s.bob_basis);
    return s.bob_outcome == 0 ? p0 : p1;
}

OrderingReport evaluate_orderings(const Scenario& s, BellKind postselect) {
    BobFirstResult bob_first = evaluate_bob_first(s, postselect);
    OrderingReport report;
    report.bob_first_probability = bob_first.probability;
    report.alice_first_probability = evaluate_alice_first(s, postselect);
    report.projection_subspace = std::move(bob_first.subspace);
    return report;
}

Classification classify_report(const Scenario& s, const OrderingReport& report) {
    Classification c;
    auto& r = c.rationale;
    r.decoded_symbol = symbol_for(s.bob_basis, s.bob_outcome);
    r.canonical_gates = is_canonical_encoding(s.alice_gates, r.decoded_symbol);
    r.bob_first_null = report.bob_first_probability <= kNullTolerance;
    r.alice_first_null = report.alice_first_probability <= kNullTolerance;

    if (r.bob_first_null || r.alice_first_null) {
        c.verdict = Verdict::Forbidden;
        r.summary = std::string("zero probability in ") +
                    (r.bob_first_null && r.alice_first_null ? "both orderings"
                     : r.bob_first_null                     ? "the bob-first ordering"
                                                            : "the alice-first ordering");
    } else if (!r.canonical_gates) {
        c.verdict = Verdict::ReversedCausality;
        r.summary = "consistent, but Bob's outcome '" +
                    std::string(symbol_name(r.decoded_symbol)) +
                    "' was not what Alice's gates encode";
    } else {
        c.verdict = Verdict::Occurs;
        r.summary = "canonical encoding with the matching outcome";
    }
    return c;
}

Classification classify(const Scenario& s, BellKind postselect) {
    return classify_report(s, evaluate_orderings(s, postselect));
}

std::vector<ScanRow> scan_all(int max_gates, BellKind postselect) {
    if (max_gates < 0 || max_gates > 4) {
        throw SimError("scan_all: max_gates must be between 0 and 4");
    }

    // Shortlex enumeration over the alphabet, deduplicated by the induced
    // unitary (exact matrix distance); the first representative wins.
    std::vector<GateSequence> unique_sequences;
    std::vector<GateMatrix> unique_unitaries;
    std::vector<GateSequence> frontier{GateSequence{}};
    for (int len = 0; len <= max_gates; ++len) {
        std::sort(frontier.begin(), frontier.end(),
                  [](const GateSequence& a, const GateSequence& b) {
                      for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
                          if (a[i].gate->name() != b[i].gate->name()) {
                              return a[i].gate->name() < b[i].gate->name();
                          }
                      }
                      return a.size() < b.size();
                  });
        for (const auto& seq : frontier) {
            GateMatrix u = sequence_unitary(seq);
            const bool seen =
                std::any_of(unique_unitaries.begin(), unique_unitaries.end(),
                            [&](const GateMatrix& known) {
                                return matrices_equal(known, u, kUnitaryTolerance);
                            });
            if (!seen) {
                unique_sequences.push_back(seq);
                unique_unitaries.push_back(std::move(u));
            }
        }
        if (len == max_gates) break;
        std::vector<GateSequence> next;
        next.reserve(frontier.size() * gate_alphabet().size());
        for (const auto& seq : frontier) {
            for (const auto& gate : gate_alphabet()) {
                GateSequence extended = seq;
                extended.push_back(gate);
                next.push_back(std::move(extended));
            }
        }
        frontier = std::move(next);
    }

    std::vector<ScanRow> rows;
    rows.reserve(unique_sequences.size() * 4);
    for (const auto& seq : unique_sequences) {
        for (const Basis basis : {Basis::Standard, Basis::Diagonal}) {
            for (const int outcome : {0, 1}) {
                Scenario scenario{seq, basis, outcome, BobTiming::Before};
                OrderingReport report = evaluate_orderings(scenario, postselect);
                Classification classification = classify_report(scenario, report);
                rows.push_back(ScanRow{std::move(scenario), std::move(report),
                                       std::move(classification)});
            }
        }
    }
    return rows;
}

}  // namespace ctcsim
