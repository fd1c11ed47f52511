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

#ifndef FQEMAG_PITE_H
#define FQEMAG_PITE_H

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fqemag/branch_state.h"
#include "fqemag/eigensolver.h"
#include "fqemag/evolution.h"
#include "fqemag/propagator.h"

namespace fqemag {

/// Ancilla parameters: cos(theta0) = m0 and dt = s1 * dtau with s1 = m0 / sqrt(1 - m0^2).
struct PiteParams {
    double m0 = 0.9;
    double theta0 = 0;
    double s1 = 0;
    Splitting splitting = Splitting::TVT;

    static PiteParams from_m0(double m0, Splitting splitting = Splitting::TVT);
};

enum class ScheduleKind { constant, ramp };

/// Imaginary-time step schedule. The ramp gives
/// dtau_k = (1 - exp(-k / kappa)) (dtau_max - dtau_min) + dtau_min.
struct Schedule {
    ScheduleKind kind = ScheduleKind::constant;
    double dtau = 0;
    double dtau_min = 0;
    double dtau_max = 0;
    double kappa = 1;

    static Schedule constant(double dtau);
    static Schedule ramp(double dtau_min, double dtau_max, double kappa);
};

void validate(const Schedule &s);
double tau_at_step(const Schedule &schedule, int k);

/// Smallest success probability accepted before a trajectory is abandoned.
inline constexpr double kSuccessFloor = 1e-12;

class PiteFailure : public std::runtime_error {
   public:
    PiteFailure(const std::string &what, int step) : std::runtime_error(what), step_(step) {}
    int step() const { return step_; }

   private:
    int step_;
};

/// Ancilla-register state before measurement: branch 0 holds
/// (e^{-i theta0} U + e^{i theta0} U^dagger) psi / 2 and branch 1 holds
/// -(i/2)(e^{-i theta0} U - e^{i theta0} U^dagger) psi, with U = U(s1 dtau).
BranchState pite_joint_state(const BranchState &psi, const Propagator &u, const PiteParams &params, double dtau);

struct PiteStepResult {
    BranchState success_state;
    double p_success = 0;
    double p_failure = 0;
};

/// Post-selects branch 0; throws PiteFailure when p_success < kSuccessFloor.
PiteStepResult pite_step(const BranchState &psi, const Propagator &u, const PiteParams &params, double dtau);

struct TrajectoryRecord {
    int step = 0;
    double dtau = 0;
    double p_success = 1;
    double p_cumulative = 1;
    std::vector<double> weights;
    double energy = 0;
    double parity = 0;
};

struct Trajectory {
    /// Record of the input state (step 0, dtau 0).
    TrajectoryRecord initial;
    /// One record per step describing the state after that step.
    std::vector<TrajectoryRecord> rows;
    BranchState final_state;
};

/// Iterates pite_step along the success branch. `eig` (optional) supplies
/// eigenweights; parity is recorded for 2-D grids, NaN otherwise.
Trajectory run_pite(const BranchState &initial, const HamiltonianSpec &spec, const Propagator &u,
                    const PiteParams &params, const Schedule &schedule, int n_steps, const EigenSet *eig = nullptr);

/// CSV columns: step, dtau, p_success, p_cumulative, w0.., energy_meV, parity.
/// `n_weights` fixes the weight columns; missing weights are written as nan.
void write_trajectory_csv(std::ostream &out, const Trajectory &t, int n_weights);

}  // namespace fqemag

#endif
