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

#include "zgsim/circuit.h"

#include <unistd.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

#include "zgsim/clifford_oracle.h"
#include "zgsim/gaussian_oracle.h"
#include "zgsim/qudit.h"

namespace zgsim {

using nlohmann::json;

namespace {

std::string index_path(const std::string &base, size_t i) {
    return base + "[" + std::to_string(i) + "]";
}

class Parser {
   public:
    std::vector<SchemaIssue> issues;

    void fail(const std::string &path, const std::string &message, ErrorKind kind = ErrorKind::kSchema) {
        issues.push_back({path, kind, message});
    }

    void only_keys(const json &obj, const std::string &path, std::initializer_list<const char *> allowed) {
        for (auto it = obj.begin(); it != obj.end(); ++it) {
            bool ok = false;
            for (const char *a : allowed) {
                ok = ok || it.key() == a;
            }
            if (!ok) {
                fail(path + "." + it.key(), "unknown field");
            }
        }
    }

    std::optional<int64_t> integer(const json &obj, const char *key, const std::string &path, bool required = true) {
        std::string p = path + "." + key;
        if (!obj.contains(key)) {
            if (required) {
                fail(p, "missing");
            }
            return std::nullopt;
        }
        const json &v = obj[key];
        if (v.is_number_integer()) {
            return v.get<int64_t>();
        }
        fail(p, "expected an integer");
        return std::nullopt;
    }

    std::optional<double> number(const json &v, const std::string &path) {
        if (v.is_number() && std::isfinite(v.get<double>())) {
            return v.get<double>();
        }
        fail(path, "expected a finite number");
        return std::nullopt;
    }

    std::optional<std::vector<double>> numbers(const json &v, const std::string &path, size_t length) {
        if (!v.is_array() || v.size() != length) {
            fail(path, "expected an array of " + std::to_string(length) + " numbers");
            return std::nullopt;
        }
        std::vector<double> out;
        for (size_t i = 0; i < v.size(); i++) {
            auto x = number(v[i], index_path(path, i));
            if (!x) {
                return std::nullopt;
            }
            out.push_back(*x);
        }
        return out;
    }

    std::optional<Eigen::VectorXcd> complex_vector(const json &v, const std::string &path, int d) {
        if (!v.is_object()) {
            fail(path, "expected {\"re\": [...], \"im\": [...]}");
            return std::nullopt;
        }
        only_keys(v, path, {"re", "im"});
        if (!v.contains("re")) {
            fail(path + ".re", "missing");
            return std::nullopt;
        }
        auto re = numbers(v["re"], path + ".re", d);
        std::optional<std::vector<double>> im = std::vector<double>(d, 0.0);
        if (v.contains("im")) {
            im = numbers(v["im"], path + ".im", d);
        }
        if (!re || !im) {
            return std::nullopt;
        }
        Eigen::VectorXcd k(d);
        for (int i = 0; i < d; i++) {
            k[i] = Cx((*re)[i], (*im)[i]);
        }
        return k;
    }

    std::optional<Eigen::MatrixXcd> complex_matrix(const json &v, const std::string &path, int d) {
        if (!v.is_object()) {
            fail(path, "expected {\"re\": [[...]], \"im\": [[...]]}");
            return std::nullopt;
        }
        only_keys(v, path, {"re", "im"});
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
        for (const char *part : {"re", "im"}) {
            if (!v.contains(part)) {
                if (std::string(part) == "re") {
                    fail(path + ".re", "missing");
                    return std::nullopt;
                }
                continue;
            }
            const json &rows = v[part];
            std::string p = path + "." + part;
            if (!rows.is_array() || (int)rows.size() != d) {
                fail(p, "expected " + std::to_string(d) + " rows");
                return std::nullopt;
            }
            for (int r = 0; r < d; r++) {
                auto row = numbers(rows[r], index_path(p, r), d);
                if (!row) {
                    return std::nullopt;
                }
                for (int c = 0; c < d; c++) {
                    m(r, c) += std::string(part) == "re" ? Cx((*row)[c], 0) : Cx(0, (*row)[c]);
                }
            }
        }
        return m;
    }

    std::optional<InputSpec> input(const json &v, const std::string &path, int d) {
        if (!v.is_object() || v.size() != 1) {
            fail(path, "expected an object with exactly one of ideal_logical, ideal_ket, ideal_density, realistic");
            return std::nullopt;
        }
        InputSpec in;
        const std::string key = v.begin().key();
        const json &body = v.begin().value();
        std::string p = path + "." + key;
        if (key == "ideal_logical") {
            in.kind = InputSpec::Kind::kIdealLogical;
            if (!body.is_number_integer() || body.get<int64_t>() < 0 || body.get<int64_t>() >= d) {
                fail(p, "expected a logical index in [0, " + std::to_string(d) + ")");
                return std::nullopt;
            }
            in.logical = body.get<int>();
        } else if (key == "ideal_ket") {
            in.kind = InputSpec::Kind::kIdealKet;
            auto k = complex_vector(body, p, d);
            if (!k) {
                return std::nullopt;
            }
            if (!(k->norm() > 0)) {
                fail(p, "ket must not vanish", ErrorKind::kInvalidArgument);
                return std::nullopt;
            }
            in.ket = *k;
        } else if (key == "ideal_density") {
            in.kind = InputSpec::Kind::kIdealDensity;
            auto m = complex_matrix(body, p, d);
            if (!m) {
                return std::nullopt;
            }
            if ((*m - m->adjoint()).cwiseAbs().maxCoeff() > 1e-10 || std::abs(m->trace() - Cx(1)) > 1e-10) {
                fail(p, "density must be Hermitian with unit trace", ErrorKind::kInvalidArgument);
                return std::nullopt;
            }
            in.density = *m;
        } else if (key == "realistic") {
            in.kind = InputSpec::Kind::kRealistic;
            if (!body.is_object()) {
                fail(p, "expected an object");
                return std::nullopt;
            }
            only_keys(body, p, {"delta", "logical", "phase_state", "amplitudes"});
            if (!body.contains("delta")) {
                fail(p + ".delta", "missing");
                return std::nullopt;
            }
            auto delta = number(body["delta"], p + ".delta");
            int which = (int)body.contains("logical") + (int)body.contains("phase_state") +
                        (int)body.contains("amplitudes");
            if (which != 1) {
                fail(p, "expected exactly one of logical, phase_state, amplitudes");
                return std::nullopt;
            }
            if (!delta) {
                return std::nullopt;
            }
            try {
                if (body.contains("logical")) {
                    auto j = integer(body, "logical", p);
                    if (!j) {
                        return std::nullopt;
                    }
                    in.realistic = RealisticGkpSpec::logical_state(d, *delta, (int)*j);
                } else if (body.contains("phase_state")) {
                    if (body["phase_state"] != true) {
                        fail(p + ".phase_state", "expected true");
                        return std::nullopt;
                    }
                    if (d != 3) {
                        fail(p + ".phase_state", "the phase state is defined for d = 3", ErrorKind::kInvalidArgument);
                        return std::nullopt;
                    }
                    in.realistic = RealisticGkpSpec::phase_state(*delta);
                } else {
                    auto a = numbers(body["amplitudes"], p + ".amplitudes", d);
                    if (!a) {
                        return std::nullopt;
                    }
                    in.realistic = RealisticGkpSpec::superposition(d, *delta, *a);
                }
            } catch (const Error &e) {
                fail(p, e.what(), e.kind());
                return std::nullopt;
            }
        } else {
            fail(p, "unknown input kind");
            return std::nullopt;
        }
        return in;
    }

    std::optional<CircuitOp> op(const json &v, const std::string &path, int n) {
        if (!v.is_object()) {
            fail(path, "expected an object");
            return std::nullopt;
        }
        CircuitOp o;
        if (v.contains("gate")) {
            only_keys(v, path, {"gate", "modes"});
            o.kind = CircuitOp::Kind::kGate;
            if (!v["gate"].is_string()) {
                fail(path + ".gate", "expected a gate name");
                return std::nullopt;
            }
            std::string name = v["gate"].get<std::string>();
            auto kind = parse_gate_kind(name);
            if (!kind) {
                fail(path + ".gate", "unknown gate tag '" + name + "'");
                return std::nullopt;
            }
            GateTag tag{*kind, 0, -1};
            size_t arity = tag.two_mode() ? 2 : 1;
            if (!v.contains("modes") || !v["modes"].is_array() || v["modes"].size() != arity) {
                fail(path + ".modes", "gate " + name + " takes " + std::to_string(arity) + " mode index(es)");
                return std::nullopt;
            }
            std::vector<int> modes;
            for (size_t i = 0; i < arity; i++) {
                const json &m = v["modes"][i];
                if (!m.is_number_integer() || m.get<int64_t>() < 0 || m.get<int64_t>() >= n) {
                    fail(index_path(path + ".modes", i), "mode index out of range [0, " + std::to_string(n) + ")");
                    return std::nullopt;
                }
                modes.push_back(m.get<int>());
            }
            tag.i = modes[0];
            if (arity == 2) {
                if (modes[0] == modes[1]) {
                    fail(path + ".modes", "two-mode gate needs distinct modes");
                    return std::nullopt;
                }
                tag.j = modes[1];
            }
            o.gate = tag;
        } else if (v.contains("symplectic")) {
            only_keys(v, path, {"symplectic"});
            o.kind = CircuitOp::Kind::kSymplectic;
            const json &rows = v["symplectic"];
            std::string p = path + ".symplectic";
            if (!rows.is_array() || rows.empty()) {
                fail(p, "expected a square array of integers");
                return std::nullopt;
            }
            std::vector<std::vector<double>> m;
            for (size_t r = 0; r < rows.size(); r++) {
                auto row = numbers(rows[r], index_path(p, r), rows.size());
                if (!row) {
                    return std::nullopt;
                }
                m.push_back(*row);
            }
            if ((int)m.size() != 2 * n) {
                fail(p, "matrix is " + std::to_string(m.size()) + "x" + std::to_string(m.size()) + ", circuit needs " +
                            std::to_string(2 * n) + "x" + std::to_string(2 * n),
                     ErrorKind::kModeMismatch);
                return std::nullopt;
            }
            try {
                o.matrix = IntSymplectic::validate_real(m).matrix();
            } catch (const Error &e) {
                fail(p, e.what(), e.kind());
                return std::nullopt;
            }
        } else if (v.contains("displace")) {
            only_keys(v, path, {"displace"});
            o.kind = CircuitOp::Kind::kDisplace;
            auto c = numbers(v["displace"], path + ".displace", 2 * n);
            if (!c) {
                return std::nullopt;
            }
            o.c = *c;
        } else {
            fail(path, "expected one of gate, symplectic, displace");
            return std::nullopt;
        }
        return o;
    }
};

void append_outcomes(json &doc, const MeasurementSpec &spec, const std::function<void(json &, size_t)> &fill) {
    json rows = json::array();
    for (size_t o = 0; o < spec.outcome_count(); o++) {
        json row;
        row["bins"] = spec.unflatten(o);
        fill(row, o);
        rows.push_back(row);
    }
    doc["outcomes"] = rows;
}

std::string sci(double v) {
    std::ostringstream s;
    s << std::scientific << std::setprecision(3) << v;
    return s.str();
}

json measurement_json(const MeasurementSpec &m) {
    return {{"modes", m.modes}, {"K", m.bins}};
}

}  // namespace

bool InputSpec::operator==(const InputSpec &o) const {
    if (kind != o.kind) {
        return false;
    }
    switch (kind) {
        case Kind::kIdealLogical:
            return logical == o.logical;
        case Kind::kIdealKet:
            return ket.size() == o.ket.size() && ket == o.ket;
        case Kind::kIdealDensity:
            return density.rows() == o.density.rows() && density == o.density;
        case Kind::kRealistic:
            return realistic == o.realistic;
    }
    return false;
}

bool CircuitOp::operator==(const CircuitOp &o) const {
    if (kind != o.kind) {
        return false;
    }
    switch (kind) {
        case Kind::kGate:
            return gate == o.gate;
        case Kind::kSymplectic:
            return matrix == o.matrix;
        case Kind::kDisplace:
            return c == o.c;
    }
    return false;
}

ParseResult parse_circuit(const json &doc) {
    Parser ps;
    ParseResult out;
    if (!doc.is_object()) {
        ps.fail("$", "expected a JSON object");
        out.issues = ps.issues;
        return out;
    }
    ps.only_keys(doc, "$", {"format", "d", "n", "inputs", "ops", "measurement", "estimator"});
    if (doc.contains("format") && doc["format"] != kCircuitFormat) {
        ps.fail("$.format", std::string("unsupported format; expected ") + kCircuitFormat);
    }
    CircuitSpec spec;
    auto d = ps.integer(doc, "d", "$");
    auto n = ps.integer(doc, "n", "$");
    bool d_ok = false, n_ok = false;
    if (d) {
        if (*d < 3 || *d % 2 == 0) {
            ps.fail("$.d", "d must be odd and at least 3");
        } else if (*d > 101) {
            ps.fail("$.d", "d above 101 is not supported");
        } else {
            d_ok = true;
            spec.d = (int)*d;
        }
    }
    if (n) {
        if (*n < 1 || *n > 64) {
            ps.fail("$.n", "n must lie in [1, 64]");
        } else {
            n_ok = true;
            spec.n = (int)*n;
        }
    }
    if (!d_ok || !n_ok) {
        out.issues = ps.issues;
        return out;
    }
    if (!doc.contains("inputs") || !doc["inputs"].is_array()) {
        ps.fail("$.inputs", "expected an array with one entry per mode");
    } else if ((int)doc["inputs"].size() != spec.n) {
        ps.fail("$.inputs", "expected " + std::to_string(spec.n) + " entries, got " +
                                std::to_string(doc["inputs"].size()),
                ErrorKind::kModeMismatch);
    } else {
        for (size_t i = 0; i < doc["inputs"].size(); i++) {
            auto in = ps.input(doc["inputs"][i], index_path("$.inputs", i), spec.d);
            if (in) {
                spec.inputs.push_back(*in);
            }
        }
    }
    if (doc.contains("ops")) {
        if (!doc["ops"].is_array()) {
            ps.fail("$.ops", "expected an array");
        } else {
            for (size_t i = 0; i < doc["ops"].size(); i++) {
                auto o = ps.op(doc["ops"][i], index_path("$.ops", i), spec.n);
                if (o) {
                    spec.ops.push_back(*o);
                }
            }
        }
    }
    if (!doc.contains("measurement") || !doc["measurement"].is_object()) {
        ps.fail("$.measurement", "expected {\"modes\": [...], \"K\": k}");
    } else {
        const json &m = doc["measurement"];
        ps.only_keys(m, "$.measurement", {"modes", "K"});
        auto k = ps.integer(m, "K", "$.measurement");
        std::vector<int> modes;
        bool ok = true;
        if (!m.contains("modes") || !m["modes"].is_array()) {
            ps.fail("$.measurement.modes", "expected an array of mode indices");
            ok = false;
        } else {
            std::set<int64_t> seen;
            for (size_t i = 0; i < m["modes"].size(); i++) {
                const json &v = m["modes"][i];
                if (!v.is_number_integer() || v.get<int64_t>() < 0 || v.get<int64_t>() >= spec.n) {
                    ps.fail(index_path("$.measurement.modes", i), "mode index out of range");
                    ok = false;
                } else if (!seen.insert(v.get<int64_t>()).second) {
                    ps.fail(index_path("$.measurement.modes", i), "mode measured twice");
                    ok = false;
                } else {
                    modes.push_back(v.get<int>());
                }
            }
        }
        if (k && *k < 1) {
            ps.fail("$.measurement.K", "K must be positive");
            ok = false;
        }
        if (ok && k) {
            try {
                spec.measurement = MeasurementSpec::make(CodeParams::make(spec.d, spec.n), modes, (int)*k);
            } catch (const Error &e) {
                ps.fail("$.measurement", e.what(), e.kind());
            }
        }
    }
    if (doc.contains("estimator")) {
        const json &e = doc["estimator"];
        if (!e.is_object()) {
            ps.fail("$.estimator", "expected an object");
        } else {
            ps.only_keys(e, "$.estimator", {"epsilon", "delta", "seed"});
            EstimatorSpec es;
            bool ok = true;
            for (const char *key : {"epsilon", "delta"}) {
                std::string p = std::string("$.estimator.") + key;
                if (!e.contains(key)) {
                    continue;
                }
                auto v = ps.number(e[key], p);
                if (!v || !(*v > 0 && *v < 1)) {
                    if (v) {
                        ps.fail(p, "must lie in (0, 1)");
                    }
                    ok = false;
                    continue;
                }
                (std::string(key) == "epsilon" ? es.epsilon : es.delta) = *v;
            }
            if (e.contains("seed")) {
                if (!e["seed"].is_number_unsigned() && !(e["seed"].is_number_integer() && e["seed"].get<int64_t>() >= 0)) {
                    ps.fail("$.estimator.seed", "expected a non-negative integer");
                    ok = false;
                } else {
                    es.seed = e["seed"].get<uint64_t>();
                }
            }
            if (ok) {
                spec.estimator = es;
            }
        }
    }
    out.issues = ps.issues;
    if (out.issues.empty()) {
        out.spec = spec;
    }
    return out;
}

ParseResult parse_circuit(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        ParseResult r;
        r.issues.push_back({"$", ErrorKind::kSchema, std::string("malformed JSON: ") + e.what()});
        return r;
    }
    return parse_circuit(doc);
}

CircuitSpec parse_circuit_or_throw(const std::string &text) {
    ParseResult r = parse_circuit(text);
    if (r.spec) {
        return *r.spec;
    }
    std::string msg;
    for (const SchemaIssue &i : r.issues) {
        msg += (msg.empty() ? "" : "; ") + i.path + ": " + i.message;
    }
    throw Error(r.issues.front().kind, msg);
}

json emit_circuit(const CircuitSpec &spec) {
    json doc;
    doc["format"] = kCircuitFormat;
    doc["d"] = spec.d;
    doc["n"] = spec.n;
    json inputs = json::array();
    for (const InputSpec &in : spec.inputs) {
        json e;
        switch (in.kind) {
            case InputSpec::Kind::kIdealLogical:
                e["ideal_logical"] = in.logical;
                break;
            case InputSpec::Kind::kIdealKet: {
                std::vector<double> re, im;
                for (Eigen::Index i = 0; i < in.ket.size(); i++) {
                    re.push_back(in.ket[i].real());
                    im.push_back(in.ket[i].imag());
                }
                e["ideal_ket"] = {{"re", re}, {"im", im}};
                break;
            }
            case InputSpec::Kind::kIdealDensity: {
                std::vector<std::vector<double>> re, im;
                for (Eigen::Index r = 0; r < in.density.rows(); r++) {
                    re.emplace_back();
                    im.emplace_back();
                    for (Eigen::Index c = 0; c < in.density.cols(); c++) {
                        re.back().push_back(in.density(r, c).real());
                        im.back().push_back(in.density(r, c).imag());
                    }
                }
                e["ideal_density"] = {{"re", re}, {"im", im}};
                break;
            }
            case InputSpec::Kind::kRealistic: {
                json r = {{"delta", in.realistic.delta}};
                switch (in.realistic.kind) {
                    case RealisticGkpSpec::Kind::kLogical:
                        r["logical"] = in.realistic.logical;
                        break;
                    case RealisticGkpSpec::Kind::kPhaseState:
                        r["phase_state"] = true;
                        break;
                    case RealisticGkpSpec::Kind::kSuperposition:
                        r["amplitudes"] = in.realistic.coeffs;
                        break;
                }
                e["realistic"] = r;
                break;
            }
        }
        inputs.push_back(e);
    }
    doc["inputs"] = inputs;
    json ops = json::array();
    for (const CircuitOp &o : spec.ops) {
        switch (o.kind) {
            case CircuitOp::Kind::kGate: {
                std::vector<int> modes = {o.gate.i};
                if (o.gate.two_mode()) {
                    modes.push_back(o.gate.j);
                }
                ops.push_back({{"gate", gate_kind_name(o.gate.kind)}, {"modes", modes}});
                break;
            }
            case CircuitOp::Kind::kSymplectic:
                ops.push_back({{"symplectic", o.matrix.to_rows()}});
                break;
            case CircuitOp::Kind::kDisplace:
                ops.push_back({{"displace", o.c}});
                break;
        }
    }
    doc["ops"] = ops;
    doc["measurement"] = measurement_json(spec.measurement);
    if (spec.estimator) {
        doc["estimator"] = {
            {"epsilon", spec.estimator->epsilon}, {"delta", spec.estimator->delta}, {"seed", spec.estimator->seed}};
    }
    return doc;
}

WignerState build_state(const CircuitSpec &spec, double tol) {
    CodeParams params = CodeParams::make(spec.d, spec.n);
    CodeParams mode = CodeParams::make(spec.d, 1);
    std::vector<ModeFactor> factors;
    std::vector<std::pair<RealisticGkpSpec, ModeFactor>> cache;
    for (const InputSpec &in : spec.inputs) {
        switch (in.kind) {
            case InputSpec::Kind::kIdealLogical:
                factors.push_back(ModeFactor::ideal_logical(mode, in.logical));
                break;
            case InputSpec::Kind::kIdealKet:
                factors.push_back(ModeFactor::ideal(mode, density_from_ket(mode, in.ket / in.ket.norm())));
                break;
            case InputSpec::Kind::kIdealDensity:
                factors.push_back(ModeFactor::ideal(mode, DenseOperator{mode, in.density}));
                break;
            case InputSpec::Kind::kRealistic: {
                auto hit = std::find_if(cache.begin(), cache.end(), [&](const auto &c) { return c.first == in.realistic; });
                if (hit == cache.end()) {
                    cache.emplace_back(in.realistic, ModeFactor::realistic(in.realistic, tol));
                    hit = cache.end() - 1;
                }
                factors.push_back(hit->second);
                break;
            }
        }
    }
    WignerState state(params, std::move(factors));
    for (const CircuitOp &o : spec.ops) {
        switch (o.kind) {
            case CircuitOp::Kind::kGate:
                state = state.apply_gate(o.gate);
                break;
            case CircuitOp::Kind::kSymplectic:
                state = state.apply_symplectic(IntSymplectic::validate(o.matrix));
                break;
            case CircuitOp::Kind::kDisplace:
                state = state.apply_displacement(o.c);
                break;
        }
    }
    return state;
}

RunMode parse_run_mode(const std::string &name) {
    if (name == "exact") {
        return RunMode::kExact;
    }
    if (name == "sample") {
        return RunMode::kSample;
    }
    if (name == "estimate") {
        return RunMode::kEstimate;
    }
    throw Error(ErrorKind::kInvalidArgument, "unknown mode '" + name + "' (expected exact, sample or estimate)");
}

json run_circuit(const CircuitSpec &spec, RunMode mode, const RunOptions &options) {
    if (mode == RunMode::kExact) {
        for (const InputSpec &in : spec.inputs) {
            if (in.kind == InputSpec::Kind::kRealistic) {
                throw Error(ErrorKind::kInvalidArgument,
                            "exact mode needs ideal (infinitely squeezed) inputs; use estimate for realistic ones");
            }
        }
    }
    WignerState state = build_state(spec, options.tol);
    const MeasurementSpec &m = spec.measurement;
    json doc;
    doc["format"] = "zakgross-result/1";
    doc["d"] = spec.d;
    doc["n"] = spec.n;
    doc["measurement"] = measurement_json(m);
    doc["negativity"] = state.negativity();
    switch (mode) {
        case RunMode::kExact: {
            doc["mode"] = "exact";
            std::vector<double> p = exact_probabilities_ideal(state, m);
            append_outcomes(doc, m, [&](json &row, size_t o) { row["probability"] = p[o]; });
            break;
        }
        case RunMode::kSample: {
            doc["mode"] = "sample";
            if (state.negativity() > 1 + 1e-12) {
                throw Error(ErrorKind::kInvalidArgument,
                            "sample mode draws outcomes from W itself and needs a nonnegative Wigner function "
                            "(negativity 1); this input has negativity " +
                                std::to_string(state.negativity()) + ", use estimate instead");
            }
            uint64_t seed = options.seed.value_or(spec.estimator ? spec.estimator->seed : 0);
            std::vector<PhaseSample> xs = state.sample_abs(seed, options.samples, options.threads);
            std::vector<int64_t> counts(m.outcome_count(), 0);
            json draws = json::array();
            for (const PhaseSample &x : xs) {
                size_t o = outcome_index(state.params(), m, x.eta);
                counts[o]++;
                draws.push_back(m.unflatten(o));
            }
            doc["seed"] = seed;
            doc["samples"] = options.samples;
            doc["draws"] = draws;
            append_outcomes(doc, m, [&](json &row, size_t o) {
                row["count"] = counts[o];
                row["frequency"] = (double)counts[o] / (double)std::max<size_t>(1, options.samples);
            });
            break;
        }
        case RunMode::kEstimate: {
            doc["mode"] = "estimate";
            EstimatorSpec es = spec.estimator.value_or(EstimatorSpec{});
            uint64_t seed = options.seed.value_or(es.seed);
            EstimatePlan plan = plan_estimate(es.epsilon, es.delta, state.negativity(), options.sample_cap);
            EstimateReport r = estimate(state, m, plan, seed, options.threads);
            doc["seed"] = seed;
            doc["epsilon"] = plan.epsilon;
            doc["delta"] = plan.delta;
            doc["samples"] = plan.samples;
            doc["wall_seconds"] = r.wall_seconds;
            doc["note"] = "the epsilon/delta guarantee holds for each outcome separately, not jointly";
            std::vector<double> clamped = r.clamped();
            append_outcomes(doc, m, [&](json &row, size_t o) {
                row["estimate"] = r.estimates[o];
                row["standard_error"] = r.standard_errors[o];
                row["clamped"] = clamped[o];
                row["positive"] = r.positive[o];
                row["negative"] = r.negative[o];
            });
            break;
        }
    }
    return doc;
}

std::string result_csv(const json &result) {
    std::ostringstream out;
    out << std::setprecision(17);
    size_t m = result.at("measurement").at("modes").size();
    std::string mode = result.at("mode").get<std::string>();
    std::vector<std::string> cols;
    if (mode == "exact") {
        cols = {"probability"};
    } else if (mode == "sample") {
        cols = {"count", "frequency"};
    } else {
        cols = {"estimate", "standard_error", "clamped", "positive", "negative"};
    }
    for (size_t k = 0; k < m; k++) {
        out << "z" << k << ",";
    }
    for (size_t c = 0; c < cols.size(); c++) {
        out << cols[c] << (c + 1 < cols.size() ? "," : "\n");
    }
    for (const json &row : result.at("outcomes")) {
        for (const json &z : row.at("bins")) {
            out << z.get<int>() << ",";
        }
        for (size_t c = 0; c < cols.size(); c++) {
            const json &v = row.at(cols[c]);
            if (v.is_number_integer()) {
                out << v.get<int64_t>();
            } else {
                out << v.get<double>();
            }
            out << (c + 1 < cols.size() ? "," : "\n");
        }
    }
    return out.str();
}

RealisticGkpSpec realistic_spec_for_kind(const std::string &kind, int d, double delta) {
    if (kind == "phase_state") {
        return RealisticGkpSpec::phase_state(delta);
    }
    const std::string prefix = "logical_";
    if (kind.rfind(prefix, 0) == 0 && kind.size() > prefix.size()) {
        std::string digits = kind.substr(prefix.size());
        if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() < 6) {
            return RealisticGkpSpec::logical_state(d, delta, std::stoi(digits));
        }
    }
    throw Error(ErrorKind::kInvalidArgument, "unknown state kind '" + kind + "' (expected logical_<j> or phase_state)");
}

std::vector<SweepRow> negativity_sweep(const std::string &kind, const std::vector<double> &deltas, int d,
                                       double tol) {
    std::vector<SweepRow> rows;
    for (double delta : deltas) {
        SweepRow r;
        r.delta = delta;
        try {
            if (!(delta > 0 && delta <= 1)) {
                throw Error(ErrorKind::kInvalidArgument, "delta must lie in (0, 1]");
            }
            ModeFactor f = ModeFactor::realistic(realistic_spec_for_kind(kind, d, delta), tol);
            r.negativity = f.negativity();
            r.log_negativity = std::log(f.negativity());
        } catch (const Error &e) {
            r.negativity = std::nan("");
            r.log_negativity = std::nan("");
            r.error = e.what();
        }
        rows.push_back(r);
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow> &rows) {
    std::ostringstream out;
    out << std::setprecision(17) << "delta,negativity,log_negativity,error\n";
    for (const SweepRow &r : rows) {
        std::string err = r.error;
        std::replace(err.begin(), err.end(), ',', ';');
        std::replace(err.begin(), err.end(), '\n', ' ');
        out << r.delta << "," << r.negativity << "," << r.log_negativity << "," << err << "\n";
    }
    return out.str();
}

std::vector<VerifyCheck> run_verification(uint64_t seed, int circuits) {
    std::mt19937_64 rng(seed);
    std::vector<VerifyCheck> checks;
    auto random_gate = [&](int n) {
        static const GateKind one[] = {GateKind::kFourier, GateKind::kFourierInv, GateKind::kPhase,
                                       GateKind::kPhaseInv};
        static const GateKind two[] = {GateKind::kSum, GateKind::kSumInv, GateKind::kCz, GateKind::kCzInv};
        int k = std::uniform_int_distribution<int>(0, n > 1 ? 7 : 3)(rng);
        std::uniform_int_distribution<int> mode(0, n - 1);
        if (k < 4) {
            return GateTag{one[k], mode(rng), -1};
        }
        int i = mode(rng), j = mode(rng);
        while (j == i) {
            j = mode(rng);
        }
        return GateTag{two[k - 4], i, j};
    };

    {
        VerifyCheck c{"clifford_agreement", true, ""};
        double worst = 0;
        std::normal_distribution<double> g;
        for (int rep = 0; rep < circuits; rep++) {
            int d = rep % 2 ? 5 : 3, n = 1 + rep % 3;
            CodeParams p = CodeParams::make(d, n), mode = CodeParams::make(d, 1);
            std::vector<Eigen::VectorXcd> kets;
            std::vector<ModeFactor> factors;
            for (int k = 0; k < n; k++) {
                Eigen::VectorXcd v(d);
                for (int i = 0; i < d; i++) {
                    v[i] = Cx(g(rng), g(rng));
                }
                kets.push_back(v / v.norm());
                factors.push_back(ModeFactor::ideal(mode, density_from_ket(mode, kets.back())));
            }
            WignerState s(p, factors);
            std::vector<OracleOp> ops;
            int len = std::uniform_int_distribution<int>(0, 10)(rng);
            for (int t = 0; t < len; t++) {
                if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
                    std::vector<double> cvec(2 * n);
                    for (double &x : cvec) {
                        x = std::uniform_int_distribution<int>(-2, 2)(rng);
                    }
                    ops.push_back(OracleOp::displace(cvec));
                    s = s.apply_displacement(cvec);
                } else {
                    GateTag tag = random_gate(n);
                    ops.push_back(OracleOp::of_gate(tag));
                    s = s.apply_gate(tag);
                }
            }
            std::vector<int> measured(n);
            for (int k = 0; k < n; k++) {
                measured[k] = k;
            }
            std::vector<double> want = oracle_bin_probabilities(run_clifford_oracle(p, kets, ops, measured), d);
            std::vector<double> got = exact_probabilities_ideal(s, MeasurementSpec::make(p, measured, d));
            for (size_t i = 0; i < want.size(); i++) {
                worst = std::max(worst, std::abs(want[i] - got[i]));
            }
        }
        c.passed = worst <= 1e-9;
        c.detail = "max |exact - oracle| = " + sci(worst);
        checks.push_back(c);
    }
    {
        VerifyCheck c{"theta_vs_direct", true, ""};
        double worst = 0;
        for (const RealisticGkpSpec &spec : {RealisticGkpSpec::logical_state(3, 0.3, 0), RealisticGkpSpec::phase_state(0.3)}) {
            GkpThetaWigner w = GkpThetaWigner::build(spec);
            double len = w.params().torus_length();
            for (int a = 0; a < 3; a++) {
                for (int b = 0; b < 3; b++) {
                    double x = len * (a + 0.25) / 3, z = len * (b + 0.6) / 3;
                    double t = w.evaluate(x, z).value, o = gkp_wigner_oracle(spec, x, z).value;
                    worst = std::max(worst, std::abs(t - o) / std::max(std::abs(o), 1e-6));
                }
            }
        }
        c.passed = worst <= 1e-6;
        c.detail = "max relative deviation = " + sci(worst);
        checks.push_back(c);
    }
    {
        VerifyCheck c{"decomposition_round_trip", true, ""};
        int bad = 0;
        for (int rep = 0; rep < circuits; rep++) {
            int n = 1 + rep % 3;
            std::vector<GateTag> word;
            int len = std::uniform_int_distribution<int>(0, 15)(rng);
            for (int t = 0; t < len; t++) {
                word.push_back(random_gate(n));
            }
            IntSymplectic s = recompose(word, n);
            bad += !(recompose(decompose(s), n) == s);
        }
        c.passed = bad == 0;
        c.detail = std::to_string(bad) + " mismatches";
        checks.push_back(c);
    }
    return checks;
}

void write_file_atomic(const std::string &path, const std::string &content) {
    std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp" + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw Error(ErrorKind::kInvalidArgument, "cannot write " + tmp.string());
        }
        f << content;
        f.flush();
        if (!f) {
            throw Error(ErrorKind::kInvalidArgument, "write failed for " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw Error(ErrorKind::kInvalidArgument, "cannot rename onto " + path + ": " + ec.message());
    }
}

}  // namespace zgsim
