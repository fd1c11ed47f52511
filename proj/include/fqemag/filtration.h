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

#ifndef FQEMAG_FILTRATION_H
#define FQEMAG_FILTRATION_H

#include <complex>
#include <optional>
#include <vector>

#include "fqemag/branch_state.h"
#include "fqemag/eigensolver.h"
#include "fqemag/propagator.h"

namespace fqemag {

enum class FiltrationOrder { first, second };

struct FiltrationParams {
    /// Target elimination energy (meV).
    double lambda = 0;
    /// Real-time step (meV^-1).
    double dt_f = 0;
    FiltrationOrder order = FiltrationOrder::first;
};

struct FiltrationReport {
    /// Ancilla-register state before measurement (2 branches for first
    /// order, 4 for second order).
    BranchState joint;
    /// Normalized success state; empty when the success branch vanishes.
    std::optional<BranchState> success_state;
    double p_success = 0;
    std::vector<double> weights_before;
    std::vector<double> weights_after;
};

/// Branch holding the success state: 0 for first order, 2 (q1 = 1, q0 = 0) for second order.
int success_branch(FiltrationOrder order);

/// Success norms below this are treated as a vanished success branch.
inline constexpr double kFiltrationFloor = 1e-28;

/// pi / (E1 - E0); throws on a non-positive gap.
double optimal_dt(double e1_est, double e0_est);

/// First order: branch 0 = (e^{-i lambda dt/2} - e^{i (lambda/2 - H) dt}) psi / 2, branch 1 with +.
FiltrationReport filt1(const BranchState &psi, const Propagator &u, const FiltrationParams &params,
                       const EigenSet *eig = nullptr);

/// Second order with phi = (H - lambda) dt: branch 0 = cos^2(phi/2) psi,
/// branch 2 = sin^2(phi/2) psi, branch 1 = (i/2) sin(phi) psi, branch 3 = -(i/2) sin(phi) psi.
FiltrationReport filt2(const BranchState &psi, const Propagator &u, const FiltrationParams &params,
                       const EigenSet *eig = nullptr);

/// Dispatches on params.order.
FiltrationReport filtrate(const BranchState &psi, const Propagator &u, const FiltrationParams &params,
                          const EigenSet *eig = nullptr);

/// |c0/c1|^2 sin^2(pi e0 / 2(1 + e1 - e0)) / cos^2(pi e1 / 2(1 + e1 - e0)) for
/// relative errors e0, e1. Returns +infinity when the cosine vanishes.
double residual_weight_ratio(std::complex<double> c0, std::complex<double> c1, double de0_rel, double de1_rel);

struct TauBounds {
    double exact_ub1 = 0;
    double approx_ub1 = 0;
    double approx_ub2 = 0;
};

/// Imaginary-time budgets after filtration for tolerance eps and gap E1 - E0.
TauBounds tau_upper_bounds(std::complex<double> c0, std::complex<double> c1, double de0_rel, double de1_rel,
                           double eps, double gap);

}  // namespace fqemag

#endif
