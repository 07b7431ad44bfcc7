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

// Command-line front end: run circuits, dump Wigner grids, sweep negativity,
// decompose symplectic matrices and run the self-check suite.

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "zgsim/circuit.h"
#include "zgsim/errors.h"
#include "zgsim/gkp_theta.h"
#include "zgsim/symplectic.h"

using namespace zgsim;
using nlohmann::json;

namespace {

std::string read_input(const std::string &path) {
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw Error(ErrorKind::kInvalidArgument, "cannot open " + path);
    }
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

void emit(const std::string &out, const std::string &content) {
    if (out.empty() || out == "-") {
        std::cout << content;
    } else {
        write_file_atomic(out, content);
    }
}

struct Common {
    uint64_t seed = 0;
    bool seed_set = false;
    int threads = 1;
    double tol = 1e-14;
    std::string out;
};

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"zgsim: Wigner-function simulator for GKP qudit Clifford circuits"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_option("--seed", common.seed, "RNG seed for sampling and estimation")
        ->each([&](const std::string &) { common.seed_set = true; });
    app.add_option("--threads", common.threads, "worker threads")->check(CLI::Range(1, 1024));
    app.add_option("--tol", common.tol, "theta truncation tolerance")->check(CLI::PositiveNumber);

    CLI::App *run = app.add_subcommand("run", "run a circuit document");
    std::string circuit_path, mode_name = "exact", format = "json";
    size_t samples = 1000;
    double sample_cap = kDefaultSampleCap;
    run->add_option("circuit", circuit_path, "circuit JSON file, - for stdin")->required();
    run->add_option("--mode", mode_name, "exact, sample or estimate")->capture_default_str();
    run->add_option("--samples", samples, "draws in sample mode")->capture_default_str();
    run->add_option("--sample-cap", sample_cap, "refuse estimate plans above this many samples");
    run->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    run->add_option("-o,--output", common.out, "output file (written atomically)");

    CLI::App *wigner = app.add_subcommand("wigner", "tabulate a realistic single-mode Wigner function as u,v,W");
    std::string kind = "logical_0";
    int d = 3, grid = 64;
    double delta = 0.3;
    wigner->add_option("--kind", kind, "logical_<j> or phase_state")->capture_default_str();
    wigner->add_option("--delta", delta, "inverse squeezing")->capture_default_str();
    wigner->add_option("-d", d, "qudit dimension")->capture_default_str();
    wigner->add_option("--grid", grid, "points per axis")->check(CLI::Range(1, 4096))->capture_default_str();
    wigner->add_option("-o,--output", common.out, "output file (written atomically)");

    CLI::App *negativity = app.add_subcommand("negativity", "sweep log-negativity over delta as CSV");
    std::vector<double> deltas = {1.0, 0.5, 0.4, 0.3, 0.25};
    negativity->add_option("--kind", kind, "logical_<j> or phase_state")->capture_default_str();
    negativity->add_option("--deltas", deltas, "comma separated deltas")->delimiter(',');
    negativity->add_option("-d", d, "qudit dimension")->capture_default_str();
    negativity->add_option("-o,--output", common.out, "output file (written atomically)");

    CLI::App *decompose_cmd = app.add_subcommand("decompose", "write an integer symplectic matrix as a gate word");
    std::string matrix_text;
    decompose_cmd->add_option("matrix", matrix_text, "JSON array of rows, or @file")->required();

    CLI::App *verify = app.add_subcommand("verify", "oracle agreement and consistency checks");
    int circuits = 30;
    verify->add_option("--circuits", circuits, "random circuits per check")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*run) {
            ParseResult parsed = parse_circuit(read_input(circuit_path));
            if (!parsed.spec) {
                for (const SchemaIssue &i : parsed.issues) {
                    std::cerr << "schema error at " << i.path << ": " << i.message << "\n";
                }
                return 2;
            }
            RunOptions opts;
            opts.threads = common.threads;
            opts.tol = common.tol;
            opts.samples = samples;
            opts.sample_cap = sample_cap;
            if (common.seed_set) {
                opts.seed = common.seed;
            }
            json result = run_circuit(*parsed.spec, parse_run_mode(mode_name), opts);
            emit(common.out, format == "csv" ? result_csv(result) : result.dump(2) + "\n");
        } else if (*wigner) {
            GkpThetaWigner w = GkpThetaWigner::build(realistic_spec_for_kind(kind, d, delta), common.tol);
            double len = w.params().torus_length();
            std::vector<double> axis(grid);
            for (int i = 0; i < grid; i++) {
                axis[i] = len * i / grid;
            }
            Eigen::MatrixXcd values = w.evaluate_grid(axis, axis);
            std::ostringstream s;
            s << std::setprecision(17) << "u,v,W\n";
            for (int i = 0; i < grid; i++) {
                for (int j = 0; j < grid; j++) {
                    s << axis[i] << "," << axis[j] << "," << values(i, j).real() << "\n";
                }
            }
            emit(common.out, s.str());
        } else if (*negativity) {
            std::vector<SweepRow> rows = negativity_sweep(kind, deltas, d, common.tol);
            emit(common.out, sweep_csv(rows));
            for (const SweepRow &r : rows) {
                if (!r.error.empty()) {
                    return 3;
                }
            }
        } else if (*decompose_cmd) {
            std::string text = matrix_text.rfind('@', 0) == 0 ? read_input(matrix_text.substr(1)) : matrix_text;
            json doc;
            try {
                doc = json::parse(text);
            } catch (const json::parse_error &e) {
                throw Error(ErrorKind::kSchema, std::string("malformed matrix: ") + e.what());
            }
            if (!doc.is_array()) {
                throw Error(ErrorKind::kSchema, "expected a JSON array of rows");
            }
            std::vector<std::vector<double>> rows;
            for (const json &r : doc) {
                if (!r.is_array()) {
                    throw Error(ErrorKind::kSchema, "expected a JSON array of rows");
                }
                rows.emplace_back();
                for (const json &v : r) {
                    if (!v.is_number()) {
                        throw Error(ErrorKind::kSchema, "matrix entries must be numbers");
                    }
                    rows.back().push_back(v.get<double>());
                }
            }
            IntSymplectic s = IntSymplectic::validate_real(rows);
            std::vector<GateTag> word = decompose(s);
            for (size_t i = 0; i < word.size(); i++) {
                std::cout << (i ? " " : "") << gate_to_string(word[i]);
            }
            std::cout << "\n";
        } else if (*verify) {
            bool ok = true;
            for (const VerifyCheck &c : run_verification(common.seed, circuits)) {
                std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << "  " << c.detail << "\n";
                ok = ok && c.passed;
            }
            return ok ? 0 : 3;
        }
    } catch (const Error &e) {
        std::cerr << "zgsim: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception &e) {
        std::cerr << "zgsim: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
