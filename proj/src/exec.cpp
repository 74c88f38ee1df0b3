#include "ctcsim/exec.hpp"

#include <algorithm>

#include "ctcsim/mixed_state.hpp"

namespace ctcsim {

namespace {

using dsl::RunMode;

struct ProgramShape {
    std::vector<WireId> declared;
    const dsl::RunStmt* run = nullptr;
    const dsl::PostselectStmt* postselect = nullptr;
};

ProgramShape shape_of(const dsl::Program& program) {
    ProgramShape shape;
    for (const auto& stmt : program.statements) {
        if (const auto* wires = std::get_if<dsl::WiresDecl>(&stmt.data)) {
            shape.declared.insert(shape.declared.end(), wires->names.begin(),
                                  wires->names.end());
        } else if (const auto* run = std::get_if<dsl::RunStmt>(&stmt.data)) {
            shape.run = run;
        } else if (const auto* ps = std::get_if<dsl::PostselectStmt>(&stmt.data)) {
            shape.postselect = ps;
        }
    }
    return shape;
}

void ensure_wire(PureState& state, const WireId& wire) {
    if (!state.has_wire(wire)) {
        state = tensor(state, basis_state({wire}, "0"));
    }
}

CircuitRunResult null_result(double probability) {
    return CircuitRunResult{std::nullopt, probability, true};
}

CircuitRunResult run_circuit_program(const dsl::Program& program,
                                     const ProgramShape& shape) {
    PureState state = PureState::scalar(1.0);
    double probability = 1.0;
    std::vector<WireId> consumed;

    for (const auto& stmt : program.statements) {
        if (const auto* bell = std::get_if<dsl::InitBell>(&stmt.data)) {
            state = tensor(state, bell_state(bell->kind, {bell->a, bell->b}));
        } else if (const auto* basis = std::get_if<dsl::InitBasis>(&stmt.data)) {
            state = tensor(state, basis_state({basis->wire}, basis->bit ? "1" : "0"));
        } else if (const auto* gate = std::get_if<dsl::GateStmt>(&stmt.data)) {
            for (const auto& t : gate->targets) ensure_wire(state, t);
            state = apply_gate(state, *gates::by_name(gate->gate), gate->targets);
        } else if (const auto* coll = std::get_if<dsl::CollapseStmt>(&stmt.data)) {
            ensure_wire(state, coll->wire);
            const auto [p0, p1] = measure_probs(state, coll->wire, coll->basis);
            const double p = coll->outcome == 0 ? p0 : p1;
            if (p <= kNullTolerance) return null_result(probability * p);
            probability *= p;
            state = collapse(state, coll->wire, coll->basis, coll->outcome);
        } else if (const auto* ps = std::get_if<dsl::PostselectStmt>(&stmt.data)) {
            ensure_wire(state, ps->a);
            ensure_wire(state, ps->b);
            const Projection proj =
                project(state, {ps->a, ps->b}, bell_state(ps->kind, {ps->a, ps->b}));
            probability *= proj.probability;
            if (proj.probability <= kNullTolerance) return null_result(probability);
            state = renormalize(proj.residual);
            consumed.push_back(ps->a);
            consumed.push_back(ps->b);
        }
    }

    // Untouched declared wires sit in |0>; report the survivors in declared order.
    std::vector<WireId> order;
    for (const auto& w : shape.declared) {
        if (std::find(consumed.begin(), consumed.end(), w) != consumed.end()) continue;
        ensure_wire(state, w);
        order.push_back(w);
    }
    return CircuitRunResult{permute_wires(state, order), probability, false};
}

DctcRunResult run_dctc_program(const dsl::Program& program, const ProgramShape& shape,
                               const ExecOptions& opts) {
    const std::vector<WireId>& ctc_wires = shape.run->ctc_wires;
    std::vector<WireId> system_wires;
    for (const auto& w : shape.declared) {
        if (std::find(ctc_wires.begin(), ctc_wires.end(), w) == ctc_wires.end()) {
            system_wires.push_back(w);
        }
    }

    std::vector<WireId> joint = system_wires;
    joint.insert(joint.end(), ctc_wires.begin(), ctc_wires.end());

    std::vector<GateApp> apps;
    for (const auto& stmt : program.statements) {
        if (const auto* gate = std::get_if<dsl::GateStmt>(&stmt.data)) {
            apps.push_back(GateApp{gates::by_name(gate->gate), gate->targets});
        }
    }
    const GateMatrix joint_unitary = circuit_unitary(apps, joint);

    PureState input = PureState::scalar(1.0);
    for (const auto& stmt : program.statements) {
        if (const auto* bell = std::get_if<dsl::InitBell>(&stmt.data)) {
            input = tensor(input, bell_state(bell->kind, {bell->a, bell->b}));
        } else if (const auto* basis = std::get_if<dsl::InitBasis>(&stmt.data)) {
            input = tensor(input, basis_state({basis->wire}, basis->bit ? "1" : "0"));
        }
    }
    for (const auto& w : system_wires) ensure_wire(input, w);
    input = permute_wires(renormalize(input), system_wires);

    DctcResult result =
        dctc_fixed_point(joint_unitary, MixedState::from_pure(input), ctc_wires,
                         opts.dctc);
    return DctcRunResult{std::move(result), system_wires, ctc_wires};
}

}  // namespace

ExecResult execute(const dsl::Program& program, const ExecOptions& opts) {
    const ProgramShape shape = shape_of(program);
    const RunMode mode = shape.run ? shape.run->mode : RunMode::Pctc;

    switch (mode) {
    case RunMode::Scan: {
        const BellKind postselect =
            shape.postselect ? shape.postselect->kind : BellKind::PhiPlus;
        return ScanRunResult{scan_all(opts.scan_max_gates, postselect), postselect,
                             opts.scan_max_gates};
    }
    case RunMode::Dctc:
        return run_dctc_program(program, shape, opts);
    case RunMode::Pctc:
        return run_circuit_program(program, shape);
    }
    throw SimError("execute: unknown run mode");
}

}  // namespace ctcsim
