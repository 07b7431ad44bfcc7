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

#include "zgsim/wigner_state.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>
#include <thread>

#include "zgsim/errors.h"

namespace zgsim {

namespace {

// A single draw giving up after this many rejections signals a broken envelope.
constexpr size_t kMaxAttempts = 100000;

std::vector<double> cumulative_abs(const std::vector<double> &v) {
    std::vector<double> c(v.size());
    double s = 0;
    for (size_t i = 0; i < v.size(); i++) {
        s += std::abs(v[i]);
        c[i] = s;
    }
    return c;
}

size_t pick(const std::vector<double> &cumulative, double u) {
    size_t i = std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin();
    return std::min(i, cumulative.size() - 1);
}

}  // namespace

Eigen::MatrixXd series_grid(const ThetaFourierSeries &series, const CodeParams &params,
                            const std::vector<double> &eta_xs, const std::vector<double> &eta_zs) {
    double len = params.torus_length();
    std::vector<double> s0, s1;
    s0.reserve(eta_zs.size());
    s1.reserve(eta_xs.size());
    for (double z : eta_zs) {
        s0.push_back(z / len);
    }
    for (double x : eta_xs) {
        s1.push_back(-x / len);
    }
    return series.evaluate_grid(s0, s1).real().transpose();
}

double series_value(const ThetaFourierSeries &series, const CodeParams &params, double eta_x, double eta_z) {
    double len = params.torus_length();
    return series.evaluate(eta_z / len, -eta_x / len).real();
}

NegativityResult series_negativity(const ThetaFourierSeries &series, const CodeParams &params, double abs_tol) {
    double len = params.torus_length();
    GridIntegrand neg = [&](const std::vector<double> &xs, const std::vector<double> &zs) {
        return Eigen::MatrixXd((-series_grid(series, params, xs, zs)).cwiseMax(0.0));
    };
    QuadratureResult q = integrate_rectangle(neg, 0, len, 0, len, {abs_tol, 64});
    NegativityResult r;
    r.negativity = series.coefficient(0, 0).real() * len * len + 2 * q.value;
    r.error_estimate = 2 * q.error_estimate;
    r.converged = q.converged;
    return r;
}

QuadratureResult series_integral(const ThetaFourierSeries &series, const CodeParams &params, double abs_tol) {
    double len = params.torus_length();
    GridIntegrand w = [&](const std::vector<double> &xs, const std::vector<double> &zs) {
        return series_grid(series, params, xs, zs);
    };
    return integrate_rectangle(w, 0, len, 0, len, {abs_tol, 32});
}

EnvelopeSampler EnvelopeSampler::build(const ThetaFourierSeries &series, const CodeParams &params,
                                       double negativity, double tol) {
    double len = params.torus_length();
    double lx = params.ell * series.weighted_abs_sum_t1();
    double lz = params.ell * series.weighted_abs_sum_t0();
    double efficiency = 0;
    for (int res = kBaseResolution; res <= kMaxResolution; res *= 2) {
        EnvelopeSampler s;
        s.res_ = res;
        s.h_ = len / res;
        std::vector<double> centers(res);
        for (int i = 0; i < res; i++) {
            centers[i] = (i + 0.5) * s.h_;
        }
        Eigen::MatrixXd w = series_grid(series, params, centers, centers);
        double slack = s.h_ / 2 * (lx + lz) + tol;
        s.envelope_.resize((size_t)res * res);
        for (int i = 0; i < res; i++) {
            for (int j = 0; j < res; j++) {
                s.envelope_[(size_t)i * res + j] = std::abs(w(i, j)) + slack;
            }
        }
        s.cumulative_ = cumulative_abs(s.envelope_);
        efficiency = negativity / (s.cumulative_.back() * s.h_ * s.h_);
        s.efficiency_ = efficiency;
        if (efficiency >= kMinEfficiency) {
            return s;
        }
    }
    throw Error(ErrorKind::kSamplerEfficiency, "envelope acceptance rate " + std::to_string(efficiency) +
                                                   " below 1% at the finest grid");
}

EnvelopeSampler::Draw EnvelopeSampler::draw(std::mt19937_64 &rng, const ThetaFourierSeries &series,
                                            const CodeParams &params) const {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (size_t attempt = 0; attempt < kMaxAttempts; attempt++) {
        size_t cell = pick(cumulative_, unit(rng) * cumulative_.back());
        double x = ((double)(cell / res_) + unit(rng)) * h_;
        double z = ((double)(cell % res_) + unit(rng)) * h_;
        double v = series_value(series, params, x, z);
        if (unit(rng) * envelope_[cell] < std::abs(v)) {
            return {x, z, v};
        }
    }
    throw Error(ErrorKind::kSamplerEfficiency,
                "no point accepted in " + std::to_string(kMaxAttempts) + " attempts; envelope too loose");
}

struct ModeFactor::Realistic {
    GkpThetaWigner wigner;
    NegativityResult negativity;
    EnvelopeSampler sampler;
};

ModeFactor ModeFactor::ideal(const CodeParams &mode_params, const DenseOperator &rho) {
    if (mode_params.n != 1) {
        throw Error(ErrorKind::kInvalidArgument, "mode factor needs single-mode parameters");
    }
    GrossTable table = gross_wigner_table(mode_params, rho);
    ModeFactor f;
    f.kind_ = Kind::kIdeal;
    f.params_ = mode_params;
    f.table_ = table.normalized();
    f.cumulative_ = cumulative_abs(f.table_);
    f.negativity_ = f.cumulative_.back();
    return f;
}

ModeFactor ModeFactor::ideal_logical(const CodeParams &mode_params, int j) {
    if (j < 0 || j >= mode_params.d) {
        throw Error(ErrorKind::kInvalidArgument, "logical index out of range");
    }
    Eigen::VectorXcd ket = Eigen::VectorXcd::Zero(mode_params.d);
    ket[j] = 1;
    return ideal(mode_params, density_from_ket(mode_params, ket));
}

ModeFactor ModeFactor::realistic(const RealisticGkpSpec &spec, double tol, double negativity_tol) {
    spec.validate();
    ModeFactor f;
    f.kind_ = Kind::kRealistic;
    f.params_ = CodeParams::make(spec.d, 1);
    GkpThetaWigner w = GkpThetaWigner::build(spec, tol);
    NegativityResult neg = series_negativity(w.series(), f.params_, negativity_tol);
    EnvelopeSampler sampler = EnvelopeSampler::build(w.series(), f.params_, neg.negativity, tol);
    f.negativity_ = neg.negativity;
    f.realistic_ = std::make_shared<const Realistic>(Realistic{std::move(w), neg, std::move(sampler)});
    return f;
}

const std::vector<double> &ModeFactor::table() const {
    if (kind_ != Kind::kIdeal) {
        throw Error(ErrorKind::kInvalidArgument, "realistic factor has no lattice table");
    }
    return table_;
}

const GkpThetaWigner &ModeFactor::wigner() const {
    if (kind_ != Kind::kRealistic) {
        throw Error(ErrorKind::kInvalidArgument, "ideal factor has no theta form");
    }
    return realistic_->wigner;
}

const NegativityResult &ModeFactor::negativity_detail() const {
    if (kind_ != Kind::kRealistic) {
        throw Error(ErrorKind::kInvalidArgument, "ideal factor negativity is exact");
    }
    return realistic_->negativity;
}

const EnvelopeSampler &ModeFactor::sampler() const {
    if (kind_ != Kind::kRealistic) {
        throw Error(ErrorKind::kInvalidArgument, "ideal factor has no envelope sampler");
    }
    return realistic_->sampler;
}

double ModeFactor::value(double eta_x, double eta_z) const {
    if (kind_ == Kind::kRealistic) {
        return series_value(realistic_->wigner.series(), params_, eta_x, eta_z);
    }
    double u = eta_x / params_.ell, v = eta_z / params_.ell;
    double ru = std::round(u), rv = std::round(v);
    if (std::abs(u - ru) > kLatticeSnap || std::abs(v - rv) > kLatticeSnap) {
        return 0;
    }
    int64_t x = floor_mod((int64_t)ru, params_.d), z = floor_mod((int64_t)rv, params_.d);
    return table_[x + params_.d * z];
}

ModeFactor::Draw ModeFactor::sample(std::mt19937_64 &rng) const {
    if (kind_ == Kind::kRealistic) {
        EnvelopeSampler::Draw d = realistic_->sampler.draw(rng, realistic_->wigner.series(), params_);
        return {d.eta_x, d.eta_z, d.value < 0 ? -1 : 1};
    }
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    size_t i = pick(cumulative_, unit(rng) * cumulative_.back());
    int x = (int)(i % params_.d), z = (int)(i / params_.d);
    return {x * params_.ell, z * params_.ell, table_[i] < 0 ? -1 : 1};
}

WignerState::WignerState(const CodeParams &params, std::vector<ModeFactor> factors)
    : params_(params), map_(AffineMap::identity(params)) {
    if ((int)factors.size() != params.n) {
        throw Error(ErrorKind::kModeMismatch,
                    "expected " + std::to_string(params.n) + " mode factors, got " + std::to_string(factors.size()));
    }
    for (const ModeFactor &f : factors) {
        if (f.params().d != params.d) {
            throw Error(ErrorKind::kInvalidArgument, "mode factor dimension differs from the circuit");
        }
    }
    factors_ = std::make_shared<const std::vector<ModeFactor>>(std::move(factors));
}

bool WignerState::all_ideal() const {
    return std::all_of(factors_->begin(), factors_->end(),
                       [](const ModeFactor &f) { return f.kind() == ModeFactor::Kind::kIdeal; });
}

WignerState WignerState::apply_gate(const GateTag &tag) const {
    return WignerState(params_, factors_, map_.then_gate(tag));
}

WignerState WignerState::apply_symplectic(const IntSymplectic &s) const {
    return WignerState(params_, factors_, map_.then_symplectic(s));
}

WignerState WignerState::apply_displacement(const std::vector<double> &c) const {
    return WignerState(params_, factors_, map_.then_displacement(c));
}

double WignerState::evaluate(const PhasePoint &eta) const {
    if (eta.n() != params_.n) {
        throw Error(ErrorKind::kModeMismatch, "phase point has the wrong number of modes");
    }
    PhasePoint pre = map_.pullback(eta);
    double v = 1;
    for (int k = 0; k < params_.n && v != 0; k++) {
        v *= (*factors_)[k].value(pre.x(k), pre.z(k));
    }
    return v;
}

double WignerState::negativity() const {
    double m = 1;
    for (const ModeFactor &f : *factors_) {
        m *= f.negativity();
    }
    return m;
}

std::vector<PhaseSample> WignerState::sample_chunk(uint64_t seed, size_t chunk, size_t count) const {
    std::mt19937_64 rng = chunk_rng(seed, chunk);
    std::vector<PhaseSample> out;
    out.reserve(count);
    int n = params_.n;
    for (size_t i = 0; i < count; i++) {
        PhasePoint eta(std::vector<double>(2 * n));
        int sign = 1;
        for (int k = 0; k < n; k++) {
            ModeFactor::Draw d = (*factors_)[k].sample(rng);
            eta.eta[k] = d.eta_x;
            eta.eta[n + k] = d.eta_z;
            sign *= d.sign;
        }
        out.push_back({map_.pushforward(eta), sign});
    }
    return out;
}

std::vector<PhaseSample> WignerState::sample_abs(uint64_t seed, size_t count, int threads) const {
    size_t chunks = (count + kSampleChunk - 1) / kSampleChunk;
    std::vector<std::vector<PhaseSample>> parts(chunks);
    parallel_chunks(chunks, threads, [&](size_t k) {
        parts[k] = sample_chunk(seed, k, std::min(kSampleChunk, count - k * kSampleChunk));
    });
    std::vector<PhaseSample> out;
    out.reserve(count);
    for (auto &p : parts) {
        out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    }
    return out;
}

ThetaFourierSeries evolved_series(const WignerState &state) {
    const CodeParams &p = state.params();
    if (p.n != 1 || state.factors()[0].kind() != ModeFactor::Kind::kRealistic) {
        throw Error(ErrorKind::kInvalidArgument, "evolved series needs one realistic mode");
    }
    const AffineMap &map = state.map();
    const ThetaFourierSeries &src = state.factors()[0].wigner().series();
    const IntSymplectic &s = map.s();
    double ell = p.ell;
    // shift = t + ell S c
    double shift[2];
    for (int i = 0; i < 2; i++) {
        shift[i] = map.t_half()[i] * ell / 2 + ell * (s.matrix()(i, 0) * map.c()[0] + s.matrix()(i, 1) * map.c()[1]);
    }
    ThetaFourierSeries out;
    for (int a0 = -src.t0_radius(); a0 <= src.t0_radius(); a0++) {
        for (int a1 = -src.t1_radius(); a1 <= src.t1_radius(); a1++) {
            Cx v = src.coefficient(a0, a1);
            if (v == Cx(0)) {
                continue;
            }
            std::vector<int64_t> img = map.s_inv().matrix() * std::vector<int64_t>{a0, a1};
            double phase = -ell * (a0 * shift[1] - a1 * shift[0]);
            out.add_term((int)img[0], (int)img[1], v * std::polar(1.0, phase));
        }
    }
    return out;
}

WignerState ideal_input(const CodeParams &params, const std::vector<DenseOperator> &rhos) {
    CodeParams mode = CodeParams::make(params.d, 1);
    std::vector<ModeFactor> f;
    for (const DenseOperator &rho : rhos) {
        f.push_back(ModeFactor::ideal(mode, rho));
    }
    return WignerState(params, std::move(f));
}

WignerState ideal_input_logical(const CodeParams &params, const std::vector<int> &logicals) {
    CodeParams mode = CodeParams::make(params.d, 1);
    std::vector<ModeFactor> f;
    for (int j : logicals) {
        f.push_back(ModeFactor::ideal_logical(mode, j));
    }
    return WignerState(params, std::move(f));
}

WignerState realistic_input(const CodeParams &params, const std::vector<RealisticGkpSpec> &specs, double tol) {
    std::vector<ModeFactor> f;
    for (const RealisticGkpSpec &s : specs) {
        if (s.d != params.d) {
            throw Error(ErrorKind::kInvalidArgument, "spec dimension differs from the circuit");
        }
        f.push_back(ModeFactor::realistic(s, tol));
    }
    return WignerState(params, std::move(f));
}

std::mt19937_64 chunk_rng(uint64_t seed, size_t chunk) {
    uint64_t c = chunk;
    std::seed_seq seq{(uint32_t)seed, (uint32_t)(seed >> 32), (uint32_t)c, (uint32_t)(c >> 32)};
    return std::mt19937_64(seq);
}

void parallel_chunks(size_t chunks, int threads, const std::function<void(size_t)> &body) {
    size_t workers = std::min<size_t>(std::max(threads, 1), chunks);
    if (workers <= 1) {
        for (size_t k = 0; k < chunks; k++) {
            body(k);
        }
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; w++) {
        pool.emplace_back([&, w] {
            try {
                for (size_t k = w; k < chunks; k += workers) {
                    body(k);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (std::thread &t : pool) {
        t.join();
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

}  // namespace zgsim
