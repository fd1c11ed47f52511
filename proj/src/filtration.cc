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

#include "fqemag/filtration.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "fqemag/initial_state.h"

namespace fqemag {
namespace {

std::vector<double> weights_of(const BranchState &s, const EigenSet *eig) {
    if (eig == nullptr) {
        return {};
    }
    return eigenweights(s, *eig).individual;
}

void finish(FiltrationReport &r, int branch, const BranchState &psi, const EigenSet *eig) {
    r.p_success = r.joint.branch_norm_squared(branch);
    r.weights_before = weights_of(psi, eig);
    if (r.p_success > kFiltrationFloor) {
        BranchState s = r.joint.extract_branch(branch);
        s.normalize();
        r.weights_after = weights_of(s, eig);
        r.success_state = std::move(s);
    }
}

void check_input(const BranchState &psi, const FiltrationParams &params) {
    if (psi.n_branches() != 1) {
        throw std::invalid_argument("filtration expects a single-branch input");
    }
    if (!(params.dt_f > 0) || !std::isfinite(params.dt_f) || !std::isfinite(params.lambda)) {
        throw std::invalid_argument("filtration requires dt_f > 0 and finite lambda");
    }
}

}  // namespace

int success_branch(FiltrationOrder order) { return order == FiltrationOrder::first ? 0 : 2; }

double optimal_dt(double e1_est, double e0_est) {
    double gap = e1_est - e0_est;
    if (!(gap > 0)) {
        throw std::invalid_argument("optimal_dt requires E1 > E0");
    }
    return std::numbers::pi / gap;
}

FiltrationReport filt1(const BranchState &psi, const Propagator &u, const FiltrationParams &params,
                       const EigenSet *eig) {
    check_input(psi, params);
    double dt = params.dt_f;
    BranchState fwd = psi;
    u.evolve(fwd, dt);
    Complex a = std::polar(0.5, -params.lambda * dt / 2);
    Complex b = std::polar(0.5, params.lambda * dt / 2);
    FiltrationReport r;
    r.joint = BranchState(psi.grid(), 2, psi.n_particles());
    auto p = psi.amplitudes();
    auto f = fwd.amplitudes();
    auto s0 = r.joint.branch(0);
    auto s1 = r.joint.branch(1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        s0[i] = a * p[i] - b * f[i];
        s1[i] = a * p[i] + b * f[i];
    }
    finish(r, 0, psi, eig);
    return r;
}

FiltrationReport filt2(const BranchState &psi, const Propagator &u, const FiltrationParams &params,
                       const EigenSet *eig) {
    check_input(psi, params);
    double dt = params.dt_f;
    BranchState fwd = psi;
    BranchState bwd = psi;
    u.evolve(fwd, dt, kAllBranches, false);
    u.evolve(bwd, dt, kAllBranches, true);
    // exp(-i phi) = e^{i lambda dt} U, exp(i phi) = e^{-i lambda dt} U^dagger.
    Complex ef = std::polar(1.0, params.lambda * dt);
    Complex eb = std::conj(ef);
    FiltrationReport r;
    r.joint = BranchState(psi.grid(), 4, psi.n_particles());
    auto p = psi.amplitudes();
    auto f = fwd.amplitudes();
    auto bk = bwd.amplitudes();
    auto b00 = r.joint.branch(0);
    auto b01 = r.joint.branch(1);
    auto b10 = r.joint.branch(2);
    auto b11 = r.joint.branch(3);
    for (std::size_t i = 0; i < p.size(); ++i) {
        Complex em = ef * f[i];
        Complex ep = eb * bk[i];
        Complex cos_phi = 0.5 * (ep + em);
        Complex sin_phi = Complex{0, -0.5} * (ep - em);
        b00[i] = 0.5 * (p[i] + cos_phi);
        b10[i] = 0.5 * (p[i] - cos_phi);
        b01[i] = Complex{0, 0.5} * sin_phi;
        b11[i] = Complex{0, -0.5} * sin_phi;
    }
    finish(r, 2, psi, eig);
    return r;
}

FiltrationReport filtrate(const BranchState &psi, const Propagator &u, const FiltrationParams &params,
                          const EigenSet *eig) {
    return params.order == FiltrationOrder::first ? filt1(psi, u, params, eig) : filt2(psi, u, params, eig);
}

double residual_weight_ratio(std::complex<double> c0, std::complex<double> c1, double de0_rel, double de1_rel) {
    if (std::abs(c1) == 0) {
        throw std::invalid_argument("residual_weight_ratio requires c1 != 0");
    }
    double denom = 2.0 * (1.0 + de1_rel - de0_rel);
    double s = std::sin(std::numbers::pi * de0_rel / denom);
    double c = std::cos(std::numbers::pi * de1_rel / denom);
    if (c == 0) {
        return std::numeric_limits<double>::infinity();
    }
    return std::norm(c0 / c1) * s * s / (c * c);
}

TauBounds tau_upper_bounds(std::complex<double> c0, std::complex<double> c1, double de0_rel, double de1_rel,
                           double eps, double gap) {
    if (!(eps > 0 && eps < 1)) {
        throw std::invalid_argument("eps must lie in (0, 1)");
    }
    if (!(gap > 0)) {
        throw std::invalid_argument("gap must be positive");
    }
    if (std::abs(c0) == 0 || std::abs(c1) == 0 || de0_rel == 0) {
        throw std::domain_error("tau bounds need nonzero c0, c1 and dE0");
    }
    double denom = 2.0 * (1.0 + de1_rel - de0_rel);
    double s = std::sin(std::numbers::pi * de0_rel / denom);
    double c = std::cos(std::numbers::pi * de1_rel / denom);
    if (s == 0 || c == 0) {
        throw std::domain_error("tau bound logarithm argument is not positive");
    }
    double lc = 2.0 * std::log(std::abs(c1 / c0));
    double inv_d0 = std::log(1.0 / std::abs(de0_rel));
    double pi2 = std::numbers::pi * std::numbers::pi;
    TauBounds t;
    t.exact_ub1 = (std::log(eps) + lc + 2.0 * std::log(std::abs(c / s))) / gap;
    t.approx_ub1 = (std::log(4.0 * eps / pi2) + lc + 2.0 * inv_d0) / gap;
    t.approx_ub2 = (std::log(16.0 * eps / (pi2 * pi2)) + lc + 4.0 * inv_d0) / gap;
    return t;
}

}  // namespace fqemag
