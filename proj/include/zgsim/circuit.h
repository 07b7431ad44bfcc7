// Copyright 2026 The zgsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZGSIM_CIRCUIT_H
#define ZGSIM_CIRCUIT_H

#include <Eigen/Dense>
#include <cstdint>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "zgsim/errors.h"
#include "zgsim/estimator.h"
#include "zgsim/gkp_theta.h"
#include "zgsim/int_matrix.h"
#include "zgsim/measure.h"
#include "zgsim/symplectic.h"
#include "zgsim/wigner_state.h"

namespace zgsim {

inline constexpr const char *kCircuitFormat = "zakgross-circuit/1";

struct InputSpec {
    enum class Kind { kIdealLogical, kIdealKet, kIdealDensity, kRealistic };
    Kind kind = Kind::kIdealLogical;
    int logical = 0;
    /// Amplitudes as given; normalized when the state is built.
    Eigen::VectorXcd ket;
    Eigen::MatrixXcd density;
    RealisticGkpSpec realistic;

    bool operator==(const InputSpec &other) const;
};

struct CircuitOp {
    enum class Kind { kGate, kSymplectic, kDisplace };
    Kind kind = Kind::kGate;
    GateTag gate{GateKind::kFourier, 0, -1};
    IntMatrix matrix;
    std::vector<double> c;

    bool operator==(const CircuitOp &other) const;
};

struct EstimatorSpec {
    double epsilon = 0.05;
    double delta = 0.05;
    uint64_t seed = 0;
    bool operator==(const EstimatorSpec &) const = default;
};

struct CircuitSpec {
    int d = 3;
    int n = 1;
    std::vector<InputSpec> inputs;
    std::vector<CircuitOp> ops;
    MeasurementSpec measurement;
    std::optional<EstimatorSpec> estimator;

    bool operator==(const CircuitSpec &) const = default;
};

struct SchemaIssue {
    std::string path;  // e.g. "$.ops[2].symplectic"
    ErrorKind kind = ErrorKind::kSchema;
    std::string message;
};

struct ParseResult {
    std::optional<CircuitSpec> spec;
    std::vector<SchemaIssue> issues;
};

/// Collects every problem it can find instead of stopping at the first.
ParseResult parse_circuit(const std::string &text);
ParseResult parse_circuit(const nlohmann::json &doc);
/// Throws Error carrying the first issue's kind and all issue messages.
CircuitSpec parse_circuit_or_throw(const std::string &text);

nlohmann::json emit_circuit(const CircuitSpec &spec);

/// Initial state with the circuit's ops applied.
WignerState build_state(const CircuitSpec &spec, double tol = 1e-14);

enum class RunMode { kExact, kSample, kEstimate };
RunMode parse_run_mode(const std::string &name);

struct RunOptions {
    int threads = 1;
    double tol = 1e-14;
    /// Overrides the circuit's estimator seed when set.
    std::optional<uint64_t> seed;
    /// Draws for RunMode::kSample.
    size_t samples = 1000;
    uint64_t sample_cap = kDefaultSampleCap;
};

/// Result document. Exact needs all-ideal inputs; sample needs negativity 1.
nlohmann::json run_circuit(const CircuitSpec &spec, RunMode mode, const RunOptions &options = {});

/// Outcome table as CSV: one column per measured mode, then the value columns.
std::string result_csv(const nlohmann::json &result);

struct SweepRow {
    double delta = 0;
    double negativity = 0;
    double log_negativity = 0;
    std::string error;
};

/// kind is "logical_<j>" or "phase_state". Failures are kept per row.
std::vector<SweepRow> negativity_sweep(const std::string &kind, const std::vector<double> &deltas, int d,
                                       double tol = 1e-14);
std::string sweep_csv(const std::vector<SweepRow> &rows);
RealisticGkpSpec realistic_spec_for_kind(const std::string &kind, int d, double delta);

struct VerifyCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Small oracle-agreement suite: random circuits against the dense simulator,
/// theta against the direct sum, and decomposition round trips.
std::vector<VerifyCheck> run_verification(uint64_t seed, int circuits = 30);

/// Writes to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::string &path, const std::string &content);

}  // namespace zgsim

#endif
