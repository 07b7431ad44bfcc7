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

#include "zgsim/quadrature.h"

#include <algorithm>
#include <array>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <queue>
#include <tuple>

#include "zgsim/errors.h"

namespace zgsim {

namespace {

constexpr int kOrder = 8;

struct Rule {
    std::array<double, kOrder> nodes;  // on [-1, 1]
    std::array<double, kOrder> weights;
};

const Rule &rule() {
    static const Rule r = [] {
        using G = boost::math::quadrature::gauss<double, kOrder>;
        Rule out;
        const auto &a = G::abscissa();
        const auto &w = G::weights();
        int half = kOrder / 2;
        for (int i = 0; i < half; i++) {
            out.nodes[half - 1 - i] = -a[i];
            out.weights[half - 1 - i] = w[i];
            out.nodes[half + i] = a[i];
            out.weights[half + i] = w[i];
        }
        return out;
    }();
    return r;
}

struct Cell {
    double x0, x1, z0, z1;
    std::array<double, 4> kids;  // (0,0), (0,1), (1,0), (1,1) child estimates
    double error;                // |sum(kids) - single-cell estimate|

    double estimate() const {
        return kids[0] + kids[1] + kids[2] + kids[3];
    }
};

struct ByError {
    bool operator()(const Cell &a, const Cell &b) const {
        return a.error < b.error;
    }
};

Cell make_cell(double x0, double x1, double z0, double z1, double single, const Eigen::MatrixXd &g, int r, int c) {
    Cell cell{x0, x1, z0, z1, {g(r, c), g(r, c + 1), g(r + 1, c), g(r + 1, c + 1)}, 0};
    cell.error = std::abs(cell.estimate() - single);
    return cell;
}

class Integrator {
   public:
    Integrator(const GridIntegrand &f) : f_(f) {
    }

    // Gauss-Legendre estimates for every cell of an nx x nz split of the rectangle,
    // computed from one batched integrand call.
    Eigen::MatrixXd split_estimates(double x0, double x1, double z0, double z1, int nx, int nz) {
        const Rule &r = rule();
        double hx = (x1 - x0) / nx, hz = (z1 - z0) / nz;
        std::vector<double> xs, zs;
        for (int c = 0; c < nx; c++) {
            for (int k = 0; k < kOrder; k++) {
                xs.push_back(x0 + hx * (c + 0.5 * (r.nodes[k] + 1)));
            }
        }
        for (int c = 0; c < nz; c++) {
            for (int k = 0; k < kOrder; k++) {
                zs.push_back(z0 + hz * (c + 0.5 * (r.nodes[k] + 1)));
            }
        }
        Eigen::MatrixXd v = f_(xs, zs);
        if (v.rows() != (Eigen::Index)xs.size() || v.cols() != (Eigen::Index)zs.size()) {
            throw Error(ErrorKind::kInvalidArgument, "integrand returned a grid of the wrong shape");
        }
        evaluations_ += xs.size() * zs.size();
        Eigen::MatrixXd out = Eigen::MatrixXd::Zero(nx, nz);
        for (int cx = 0; cx < nx; cx++) {
            for (int cz = 0; cz < nz; cz++) {
                double s = 0;
                for (int a = 0; a < kOrder; a++) {
                    for (int b = 0; b < kOrder; b++) {
                        s += r.weights[a] * r.weights[b] * v(cx * kOrder + a, cz * kOrder + b);
                    }
                }
                out(cx, cz) = s * hx * hz / 4;
            }
        }
        return out;
    }

    size_t evaluations() const {
        return evaluations_;
    }

   private:
    const GridIntegrand &f_;
    size_t evaluations_ = 0;
};

}  // namespace

QuadratureResult integrate_rectangle(const GridIntegrand &f, double x0, double x1, double z0, double z1,
                                     const QuadratureOptions &options) {
    if (!(x1 > x0) || !(z1 > z0)) {
        throw Error(ErrorKind::kInvalidArgument, "empty integration rectangle");
    }
    if (!(options.abs_tol > 0) || options.base_cells < 1) {
        throw Error(ErrorKind::kInvalidArgument, "bad quadrature options");
    }
    Integrator in(f);
    int nb = options.base_cells;
    Eigen::MatrixXd singles = in.split_estimates(x0, x1, z0, z1, nb, nb);
    Eigen::MatrixXd kids = in.split_estimates(x0, x1, z0, z1, 2 * nb, 2 * nb);
    std::priority_queue<Cell, std::vector<Cell>, ByError> leaves;
    double hx = (x1 - x0) / nb, hz = (z1 - z0) / nb;
    double total_error = 0;
    for (int a = 0; a < nb; a++) {
        for (int b = 0; b < nb; b++) {
            Cell c = make_cell(x0 + a * hx, x0 + (a + 1) * hx, z0 + b * hz, z0 + (b + 1) * hz, singles(a, b), kids,
                               2 * a, 2 * b);
            total_error += c.error;
            leaves.push(c);
        }
    }
    QuadratureResult res;
    while (total_error > options.abs_tol) {
        if (leaves.size() + 3 > options.max_cells) {
            res.converged = false;
            break;
        }
        Cell c = leaves.top();
        leaves.pop();
        total_error -= c.error;
        Eigen::MatrixXd g = in.split_estimates(c.x0, c.x1, c.z0, c.z1, 4, 4);
        double xh = (c.x1 - c.x0) / 2, zh = (c.z1 - c.z0) / 2;
        for (int a = 0; a < 2; a++) {
            for (int b = 0; b < 2; b++) {
                Cell child = make_cell(c.x0 + a * xh, c.x0 + (a + 1) * xh, c.z0 + b * zh, c.z0 + (b + 1) * zh,
                                       c.kids[2 * a + b], g, 2 * a, 2 * b);
                total_error += child.error;
                leaves.push(child);
            }
        }
    }
    // Sum the leaves in a fixed order; the running error total is only a stopping rule.
    std::vector<Cell> all;
    all.reserve(leaves.size());
    while (!leaves.empty()) {
        all.push_back(leaves.top());
        leaves.pop();
    }
    std::sort(all.begin(), all.end(), [](const Cell &a, const Cell &b) {
        return std::tie(a.x0, a.z0) < std::tie(b.x0, b.z0);
    });
    for (const Cell &c : all) {
        res.value += c.estimate();
        res.error_estimate += c.error;
    }
    res.cells = all.size();
    res.evaluations = in.evaluations();
    return res;
}

}  // namespace zgsim
