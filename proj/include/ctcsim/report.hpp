#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ctcsim/causality.hpp"
#include "ctcsim/claims.hpp"
#include "ctcsim/exec.hpp"
#include "ctcsim/protocol.hpp"

namespace ctcsim {

enum class OutputFormat { Table, Json, Csv };

// 12 significant digits; magnitudes below 1e-12 print as 0.
std::string format_real(double v);
std::string format_amplitude(Amplitude a);   // "a+bi" / "a-bi"
std::string ket_string(const PureState& state);

struct SampleSummary {
    int count = 0;
    std::uint64_t seed = 0;
    int zeros = 0;
    int ones = 0;
};

// Seeded simulation of repeated measurements in the given basis.
SampleSummary sample_measurements(const PureState& bob_state, Basis basis, int count,
                                  std::uint64_t seed);

std::string render_protocol(const ProtocolRun& run, const Decoded& decoded,
                            const std::optional<Discrepancy>& discrepancy,
                            const std::optional<SampleSummary>& samples,
                            OutputFormat format);

std::string render_scan(const std::vector<ScanRow>& rows, BellKind postselect,
                        OutputFormat format);

std::string render_circuit_run(const CircuitRunResult& result, OutputFormat format);

std::string render_dctc(const DctcRunResult& run, bool converged, OutputFormat format);

}  // namespace ctcsim
