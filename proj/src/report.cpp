#include "ctcsim/report.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ctcsim {

using json = nlohmann::ordered_json;

namespace {

double clamp_small(double v) {
    return std::abs(v) < 1e-12 ? 0.0 : v;
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string csv_line(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) line += ',';
        line += csv_field(fields[i]);
    }
    line += '\n';
    return line;
}

std::string key_value_table(const std::vector<std::pair<std::string, std::string>>& rows) {
    std::size_t width = 0;
    for (const auto& [k, v] : rows) width = std::max(width, k.size());
    std::string out;
    for (const auto& [k, v] : rows) {
        out += k;
        out.append(width - k.size() + 2, ' ');
        out += v;
        out += '\n';
    }
    return out;
}

std::string column_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) widths[i] = header[i].size();
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            widths[i] = std::max(widths[i], row[i].size());
        }
    }
    const auto emit = [&](const std::vector<std::string>& row) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size()) line.append(widths[i] - row[i].size() + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        return line + '\n';
    };
    std::string out = emit(header);
    for (const auto& row : rows) out += emit(row);
    return out;
}

json state_json(const PureState& state) {
    json amps = json::array();
    for (const auto& a : state.amps()) {
        amps.push_back({{"re", clamp_small(a.real())}, {"im", clamp_small(a.imag())}});
    }
    return json{{"wires", state.wires()}, {"amplitudes", amps},
                {"ket", ket_string(state)}};
}

json matrix_json(const Eigen::MatrixXcd& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back({{"re", clamp_small(m(r, c).real())},
                           {"im", clamp_small(m(r, c).imag())}});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string matrix_string(const Eigen::MatrixXcd& m) {
    std::string out = "[";
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        out += r ? ",[" : "[";
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c) out += ',';
            out += format_amplitude(m(r, c));
        }
        out += ']';
    }
    out += ']';
    return out;
}

json discrepancy_json(const std::optional<Discrepancy>& d) {
    if (!d) return nullptr;
    return json{{"id", d->id}, {"detail", d->detail}};
}

std::string join_wires(const std::vector<WireId>& wires) {
    std::string out;
    for (const auto& w : wires) {
        if (!out.empty()) out += ' ';
        out += w;
    }
    return out;
}

}  // namespace

std::string format_real(double v) {
    v = clamp_small(v);
    if (v == 0.0) return "0";   // also normalizes -0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string format_amplitude(Amplitude a) {
    const double re = clamp_small(a.real());
    const double im = clamp_small(a.imag());
    std::string out = format_real(re);
    out += im < 0.0 ? "-" : "+";
    out += format_real(std::abs(im));
    out += 'i';
    return out;
}

std::string ket_string(const PureState& state) {
    const std::size_t n = state.num_wires();
    std::string out;
    for (std::size_t idx = 0; idx < state.dim(); ++idx) {
        const Amplitude a = state.amps()[idx];
        if (std::abs(a) < 1e-12) continue;
        if (!out.empty()) out += " + ";
        out += '(';
        out += format_amplitude(a);
        out += ")|";
        for (std::size_t j = 0; j < n; ++j) {
            out += ((idx >> (n - 1 - j)) & 1u) ? '1' : '0';
        }
        out += '>';
    }
    if (out.empty()) return "0";
    return out;
}

SampleSummary sample_measurements(const PureState& bob_state, Basis basis, int count,
                                  std::uint64_t seed) {
    const auto [p0, p1] = measure_probs(bob_state, bob_state.wires()[0], basis);
    (void)p0;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    SampleSummary summary{count, seed, 0, 0};
    for (int i = 0; i < count; ++i) {
        if (uniform(rng) < p1) ++summary.ones;
        else ++summary.zeros;
    }
    return summary;
}

std::string render_protocol(const ProtocolRun& run, const Decoded& decoded,
                            const std::optional<Discrepancy>& discrepancy,
                            const std::optional<SampleSummary>& samples,
                            OutputFormat format) {
    const Basis basis = basis_of(run.symbol);
    switch (format) {
    case OutputFormat::Json: {
        json doc{{"command", "protocol"},
                 {"symbol", symbol_name(run.symbol)},
                 {"basis", basis_name(basis)},
                 {"decoded_bit", decoded.bit},
                 {"confidence", clamp_small(decoded.confidence)},
                 {"success_probability", clamp_small(run.success_probability)},
                 {"bob_state", state_json(run.bob_state)},
                 {"ctc_residual", state_json(run.ctc_residual)},
                 {"discrepancy", discrepancy_json(discrepancy)}};
        if (samples) {
            doc["samples"] = json{{"count", samples->count},
                                  {"seed", samples->seed},
                                  {"zeros", samples->zeros},
                                  {"ones", samples->ones}};
        } else {
            doc["samples"] = nullptr;
        }
        return doc.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
        std::string out = csv_line({"symbol", "basis", "decoded_bit", "confidence",
                                    "success_probability", "bob_state", "ctc_residual",
                                    "discrepancy", "sample_count", "sample_zeros",
                                    "sample_ones"});
        out += csv_line({symbol_name(run.symbol), basis_name(basis),
                         std::to_string(decoded.bit), format_real(decoded.confidence),
                         format_real(run.success_probability), ket_string(run.bob_state),
                         ket_string(run.ctc_residual), discrepancy ? discrepancy->id : "",
                         samples ? std::to_string(samples->count) : "0",
                         samples ? std::to_string(samples->zeros) : "0",
                         samples ? std::to_string(samples->ones) : "0"});
        return out;
    }
    case OutputFormat::Table: {
        std::vector<std::pair<std::string, std::string>> rows{
            {"symbol", symbol_name(run.symbol)},
            {"basis", basis_name(basis)},
            {"decoded bit", std::to_string(decoded.bit)},
            {"confidence", format_real(decoded.confidence)},
            {"success probability", format_real(run.success_probability)},
            {"bob state", ket_string(run.bob_state)},
            {"ctc residual", ket_string(run.ctc_residual)},
            {"discrepancy",
             discrepancy ? discrepancy->id + ": " + discrepancy->detail : "-"},
        };
        if (samples) {
            rows.emplace_back("samples", std::to_string(samples->zeros) + "x0 " +
                                             std::to_string(samples->ones) + "x1 (seed " +
                                             std::to_string(samples->seed) + ")");
        }
        return key_value_table(rows);
    }
    }
    throw SimError("unknown output format");
}

std::string render_scan(const std::vector<ScanRow>& rows, BellKind postselect,
                        OutputFormat format) {
    switch (format) {
    case OutputFormat::Json: {
        json doc{{"command", "scan"}, {"postselect", bell_kind_name(postselect)}};
        json out_rows = json::array();
        for (const auto& row : rows) {
            const auto discrepancy =
                postselect == BellKind::PhiPlus ? check_scenario_claim(row)
                                                : std::optional<Discrepancy>{};
            json r{{"gates", sequence_label(row.scenario.alice_gates)},
                   {"basis", basis_name(row.scenario.bob_basis)},
                   {"outcome", row.scenario.bob_outcome},
                   {"bob_first_probability",
                    clamp_small(row.report.bob_first_probability)},
                   {"alice_first_probability",
                    clamp_small(row.report.alice_first_probability)},
                   {"verdict", verdict_name(row.classification.verdict)},
                   {"subspace", row.report.projection_subspace
                                    ? state_json(*row.report.projection_subspace)
                                    : json(nullptr)},
                   {"discrepancy", discrepancy_json(discrepancy)}};
            out_rows.push_back(std::move(r));
        }
        doc["rows"] = std::move(out_rows);
        return doc.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
        std::string out = csv_line({"gates", "basis", "outcome", "bob_first_probability",
                                    "alice_first_probability", "verdict", "subspace",
                                    "discrepancy"});
        for (const auto& row : rows) {
            const auto discrepancy =
                postselect == BellKind::PhiPlus ? check_scenario_claim(row)
                                                : std::optional<Discrepancy>{};
            out += csv_line(
                {sequence_label(row.scenario.alice_gates),
                 basis_name(row.scenario.bob_basis),
                 std::to_string(row.scenario.bob_outcome),
                 format_real(row.report.bob_first_probability),
                 format_real(row.report.alice_first_probability),
                 verdict_name(row.classification.verdict),
                 row.report.projection_subspace ? ket_string(*row.report.projection_subspace)
                                                : "(null)",
                 discrepancy ? discrepancy->id : ""});
        }
        return out;
    }
    case OutputFormat::Table: {
        const std::vector<std::string> header{"gates",   "basis",    "outcome",
                                              "p(bob first)", "p(alice first)", "verdict",
                                              "subspace", "discrepancy"};
        std::vector<std::vector<std::string>> body;
        body.reserve(rows.size());
        for (const auto& row : rows) {
            const auto discrepancy =
                postselect == BellKind::PhiPlus ? check_scenario_claim(row)
                                                : std::optional<Discrepancy>{};
            body.push_back(
                {sequence_label(row.scenario.alice_gates),
                 basis_name(row.scenario.bob_basis),
                 std::to_string(row.scenario.bob_outcome),
                 format_real(row.report.bob_first_probability),
                 format_real(row.report.alice_first_probability),
                 verdict_name(row.classification.verdict),
                 row.report.projection_subspace ? ket_string(*row.report.projection_subspace)
                                                : "(null)",
                 discrepancy ? discrepancy->id : "-"});
        }
        return column_table(header, body);
    }
    }
    throw SimError("unknown output format");
}

std::string render_circuit_run(const CircuitRunResult& result, OutputFormat format) {
    switch (format) {
    case OutputFormat::Json: {
        json doc{{"command", "run"},
                 {"null_subspace", result.null_subspace},
                 {"success_probability", clamp_small(result.success_probability)},
                 {"final_state",
                  result.final_state ? state_json(*result.final_state) : json(nullptr)}};
        return doc.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
        std::string out =
            csv_line({"null_subspace", "success_probability", "final_state"});
        out += csv_line({result.null_subspace ? "true" : "false",
                         format_real(result.success_probability),
                         result.final_state ? ket_string(*result.final_state)
                                            : "(null)"});
        return out;
    }
    case OutputFormat::Table: {
        return key_value_table(
            {{"null subspace", result.null_subspace ? "true" : "false"},
             {"success probability", format_real(result.success_probability)},
             {"final state",
              result.final_state ? ket_string(*result.final_state) : "(null)"}});
    }
    }
    throw SimError("unknown output format");
}

std::string render_dctc(const DctcRunResult& run, OutputFormat format) {
    const DctcResult& result = run.result;
    switch (format) {
    case OutputFormat::Json: {
        json doc{{"command", "dctc"},
                 {"converged", true},
                 {"iterations", result.iterations},
                 {"residual", clamp_small(result.residual)},
                 {"ctc_wires", run.ctc_wires},
                 {"system_wires", run.system_wires},
                 {"fixed_point", matrix_json(result.ctc_fixed_point.rho())},
                 {"output", matrix_json(result.output.rho())}};
        return doc.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
        std::string out = csv_line({"converged", "iterations", "residual", "ctc_wires",
                                    "system_wires", "fixed_point", "output"});
        out += csv_line({"true", std::to_string(result.iterations),
                         format_real(result.residual), join_wires(run.ctc_wires),
                         join_wires(run.system_wires),
                         matrix_string(result.ctc_fixed_point.rho()),
                         matrix_string(result.output.rho())});
        return out;
    }
    case OutputFormat::Table: {
        return key_value_table(
            {{"converged", "true"},
             {"iterations", std::to_string(result.iterations)},
             {"residual", format_real(result.residual)},
             {"ctc wires", join_wires(run.ctc_wires)},
             {"system wires", join_wires(run.system_wires)},
             {"fixed point", matrix_string(result.ctc_fixed_point.rho())},
             {"output", matrix_string(result.output.rho())}});
    }
    }
    throw SimError("unknown output format");
}

}  // namespace ctcsim
