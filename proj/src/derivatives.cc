// Copyright 2026 The fqemag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fqemag/derivatives.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "fqemag/spectral.h"

namespace fqemag {

Sampler::Sampler(const MeasurementModel &model) : model_(model), rng_(model.seed) {
    if (model.mode == MeasurementMode::sampled && model.shots == 0) {
        throw std::invalid_argument("sampled measurement needs a positive shot count");
    }
}

std::vector<double> Sampler::estimate(const std::vector<double> &probabilities) {
    if (model_.mode == MeasurementMode::exact) {
        return probabilities;
    }
    std::discrete_distribution<std::size_t> dist(probabilities.begin(), probabilities.end());
    std::vector<double> freq(probabilities.size(), 0.0);
    for (std::uint64_t s = 0; s < model_.shots; ++s) {
        freq[dist(rng_)] += 1.0;
    }
    double total = 0;
    for (double p : probabilities) {
        total += p;
    }
    for (double &f : freq) {
        f *= total / static_cast<double>(model_.shots);
    }
    return freq;
}

long long derivative_combinations(int l, int m) {
    if (l < 0 || m < 1) {
        throw std::invalid_argument("derivative_combinations requires l >= 0 and m >= 1");
    }
    // C(l + m - 1, l) computed incrementally; each partial product is an exact binomial.
    long long c = 1;
    for (int i = 1; i <= l; ++i) {
        c = c * (m - 1 + i) / i;
    }
    return c;
}

long long unknown_count(int r, int m) {
    if (r < 0) {
        throw std::invalid_argument("unknown_count requires r >= 0");
    }
    long long n = 0;
    for (int l = r % 2; l <= r; l += 2) {
        n += derivative_combinations(l, m);
    }
    return n;
}

std::vector<std::vector<int>> unknown_multi_indices(int r, int m) {
    std::vector<std::vector<int>> out;
    for (int l = r % 2; l <= r; l += 2) {
        std::vector<int> cur(static_cast<std::size_t>(m), 0);
        std::function<void(int, int)> rec = [&](int var, int left) {
            if (var == m - 1) {
                cur[static_cast<std::size_t>(var)] = left;
                out.push_back(cur);
                return;
            }
            for (int v = left; v >= 0; --v) {
                cur[static_cast<std::size_t>(var)] = v;
                rec(var + 1, left - v);
            }
        };
        rec(0, l);
    }
    return out;
}

void validate(const DerivativeProblem &problem) {
    if (problem.m_vars < 1 || problem.order_r < 0) {
        throw std::invalid_argument("derivative problem needs m >= 1 and r >= 0");
    }
    if (static_cast<long long>(problem.displacements.size()) != unknown_count(problem.order_r, problem.m_vars)) {
        throw std::invalid_argument("number of displacements must equal the number of unknowns");
    }
    for (const auto &d : problem.displacements) {
        if (static_cast<int>(d.size()) != problem.m_vars) {
            throw std::invalid_argument("displacement length must equal the number of variables");
        }
    }
}

Eigen::MatrixXd displacement_matrix(const DerivativeProblem &problem, double dx) {
    validate(problem);
    auto idx = unknown_multi_indices(problem.order_r, problem.m_vars);
    Eigen::Index n = static_cast<Eigen::Index>(idx.size());
    Eigen::MatrixXd a(n, n);
    for (Eigen::Index row = 0; row < n; ++row) {
        const auto &d = problem.displacements[static_cast<std::size_t>(row)];
        for (Eigen::Index col = 0; col < n; ++col) {
            double v = 1;
            for (int i = 0; i < problem.m_vars; ++i) {
                v *= std::pow(d[static_cast<std::size_t>(i)] * dx, idx[static_cast<std::size_t>(col)][static_cast<std::size_t>(i)]);
            }
            a(row, col) = v;
        }
    }
    return a;
}

BranchState derivative_circuit_state(const BranchState &f, const std::vector<int> &d, double phi) {
    if (f.n_branches() != 1) {
        throw std::invalid_argument("derivative circuit expects a single-branch register");
    }
    int dims = f.grid().dims;
    if (static_cast<int>(d.size()) != dims * f.n_particles()) {
        throw std::invalid_argument("displacement length must equal dims * n_particles");
    }
    BranchState shifted = f;
    for (std::size_t v = 0; v < d.size(); ++v) {
        if (d[v] != 0) {
            shift_unitary(shifted, {static_cast<int>(v) % dims, static_cast<int>(v) / dims}, d[v]);
        }
    }
    BranchState out(f.grid(), 2, f.n_particles());
    Complex e = std::polar(1.0, phi);
    auto a = f.amplitudes();
    auto s = shifted.amplitudes();
    auto b0 = out.branch(0);
    auto b1 = out.branch(1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        b0[i] = 0.5 * (a[i] + e * s[i]);
        b1[i] = 0.5 * (a[i] - e * s[i]);
    }
    return out;
}

std::size_t displaced_index(const BranchState &f, std::size_t flat, const std::vector<int> &d) {
    const Grid &g = f.grid();
    long long n = static_cast<long long>(g.n_points);
    std::size_t m = g.size();
    std::size_t out = 0;
    std::size_t scale = 1;
    std::size_t rest = flat;
    for (int p = 0; p < f.n_particles(); ++p) {
        std::size_t local = rest % m;
        rest /= m;
        auto k = g.unflatten(local);
        for (int a = 0; a < g.dims; ++a) {
            long long v = static_cast<long long>(k[a]) + d[static_cast<std::size_t>(p * g.dims + a)];
            k[a] = static_cast<std::size_t>(((v % n) + n) % n);
        }
        out += scale * g.flatten(k);
        scale *= m;
    }
    return out;
}

DerivativeResult reconstruct_derivatives(const DerivativeProblem &problem, const BranchState &f, Sampler &sampler) {
    validate(problem);
    if (problem.m_vars != f.grid().dims * f.n_particles()) {
        throw std::invalid_argument("problem variable count does not match the register");
    }
    const std::size_t points = f.branch_size();
    Eigen::MatrixXd a = displacement_matrix(problem, f.grid().dx);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    if (!lu.isInvertible()) {
        throw std::invalid_argument("displacement matrix is singular");
    }
    std::vector<double> p_plain(points);
    auto amp = f.amplitudes();
    for (std::size_t i = 0; i < points; ++i) {
        p_plain[i] = std::norm(amp[i]);
    }
    p_plain = sampler.estimate(p_plain);

    // Probability of (x, ancilla 0) for C^(phi)[d].
    auto circuit_p0 = [&](const std::vector<int> &d, double phi) {
        BranchState s = derivative_circuit_state(f, d, phi);
        std::vector<double> p(2 * points);
        auto b0 = s.branch(0);
        auto b1 = s.branch(1);
        for (std::size_t i = 0; i < points; ++i) {
            p[i] = std::norm(b0[i]);
            p[points + i] = std::norm(b1[i]);
        }
        p = sampler.estimate(p);
        p.resize(points);
        return p;
    };

    const Complex one_plus_i{1, 1};
    const bool even = problem.order_r % 2 == 0;
    Eigen::Index nu = static_cast<Eigen::Index>(problem.displacements.size());
    DerivativeResult res;
    res.multi_indices = unknown_multi_indices(problem.order_r, problem.m_vars);
    res.G.resize(static_cast<Eigen::Index>(points), nu);
    for (Eigen::Index col = 0; col < nu; ++col) {
        const auto &d = problem.displacements[static_cast<std::size_t>(col)];
        std::vector<int> md(d.size());
        std::transform(d.begin(), d.end(), md.begin(), [](int v) { return -v; });
        auto re_p = circuit_p0(d, 0.0);
        auto im_p = circuit_p0(d, 0.5 * std::numbers::pi);
        auto re_m = circuit_p0(md, 0.0);
        auto im_m = circuit_p0(md, 0.5 * std::numbers::pi);
        for (std::size_t x = 0; x < points; ++x) {
            double p_fwd = p_plain[displaced_index(f, x, d)];
            double p_bwd = p_plain[displaced_index(f, x, md)];
            Complex minus{re_m[x], im_m[x]};
            Complex plus{re_p[x], im_p[x]};
            Complex gval = even ? minus + plus - one_plus_i / 4.0 * (2.0 * p_plain[x] + p_fwd + p_bwd)
                                : minus - plus - one_plus_i / 4.0 * (p_fwd - p_bwd);
            res.G(static_cast<Eigen::Index>(x), col) = gval;
        }
    }
    Eigen::MatrixXcd ainv = lu.inverse().cast<Complex>();
    res.g = res.G * ainv.transpose();
    return res;
}

}  // namespace fqemag
