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

#include "fqemag/pite.h"

#include <cmath>
#include <limits>

#include "fqemag/csv.h"
#include "fqemag/initial_state.h"

namespace fqemag {

PiteParams PiteParams::from_m0(double m0, Splitting splitting) {
    if (!(m0 > 0 && m0 < 1)) {
        throw std::invalid_argument("m0 must lie in (0, 1)");
    }
    PiteParams p;
    p.m0 = m0;
    p.theta0 = std::acos(m0);
    p.s1 = m0 / std::sqrt(1.0 - m0 * m0);
    p.splitting = splitting;
    return p;
}

Schedule Schedule::constant(double dtau) {
    Schedule s;
    s.kind = ScheduleKind::constant;
    s.dtau = dtau;
    validate(s);
    return s;
}

Schedule Schedule::ramp(double dtau_min, double dtau_max, double kappa) {
    Schedule s;
    s.kind = ScheduleKind::ramp;
    s.dtau_min = dtau_min;
    s.dtau_max = dtau_max;
    s.kappa = kappa;
    validate(s);
    return s;
}

void validate(const Schedule &s) {
    if (s.kind == ScheduleKind::constant) {
        if (!(s.dtau >= 0) || !std::isfinite(s.dtau)) {
            throw std::invalid_argument("constant dtau must be non-negative");
        }
    } else if (!(s.dtau_min > 0) || !(s.dtau_max >= s.dtau_min) || !(s.kappa > 0) || !std::isfinite(s.dtau_max) ||
               !std::isfinite(s.kappa)) {
        throw std::invalid_argument("ramp requires 0 < dtau_min <= dtau_max and kappa > 0");
    }
}

double tau_at_step(const Schedule &schedule, int k) {
    if (k < 0) {
        throw std::invalid_argument("step index must be non-negative");
    }
    if (schedule.kind == ScheduleKind::constant) {
        return schedule.dtau;
    }
    return -std::expm1(-k / schedule.kappa) * (schedule.dtau_max - schedule.dtau_min) + schedule.dtau_min;
}

BranchState pite_joint_state(const BranchState &psi, const Propagator &u, const PiteParams &params, double dtau) {
    if (psi.n_branches() != 1) {
        throw std::invalid_argument("pite_step expects a single-branch input");
    }
    double dt = params.s1 * dtau;
    BranchState fwd = psi;
    BranchState bwd = psi;
    u.evolve(fwd, dt, kAllBranches, false);
    u.evolve(bwd, dt, kAllBranches, true);
    BranchState joint(psi.grid(), 2, psi.n_particles());
    Complex em = std::polar(0.5, -params.theta0);
    Complex ep = std::polar(0.5, params.theta0);
    const Complex minus_i{0, -1};
    auto f = fwd.amplitudes();
    auto b = bwd.amplitudes();
    auto a0 = joint.branch(0);
    auto a1 = joint.branch(1);
    for (std::size_t i = 0; i < f.size(); ++i) {
        Complex x = em * f[i];
        Complex y = ep * b[i];
        a0[i] = x + y;
        a1[i] = minus_i * (x - y);
    }
    return joint;
}

PiteStepResult pite_step(const BranchState &psi, const Propagator &u, const PiteParams &params, double dtau) {
    BranchState joint = pite_joint_state(psi, u, params, dtau);
    PiteStepResult r;
    r.p_success = joint.branch_norm_squared(0);
    r.p_failure = joint.branch_norm_squared(1);
    if (!(r.p_success >= kSuccessFloor)) {
        throw PiteFailure("PITE success probability below floor", 0);
    }
    r.success_state = joint.extract_branch(0);
    r.success_state.normalize();
    return r;
}

namespace {

TrajectoryRecord describe(const BranchState &s, const HamiltonianSpec &spec, const std::vector<double> &v,
                          const EigenSet *eig) {
    TrajectoryRecord r;
    if (eig != nullptr) {
        r.weights = eigenweights(s, *eig).individual;
    }
    r.energy = energy_expectation(s, spec, &v);
    r.parity = s.grid().dims == 2 ? parity_expectation(s) : std::numeric_limits<double>::quiet_NaN();
    return r;
}

}  // namespace

Trajectory run_pite(const BranchState &initial, const HamiltonianSpec &spec, const Propagator &u,
                    const PiteParams &params, const Schedule &schedule, int n_steps, const EigenSet *eig) {
    if (n_steps < 0) {
        throw std::invalid_argument("n_steps must be non-negative");
    }
    validate(schedule);
    std::vector<double> v = evaluate_potential(spec);
    Trajectory t;
    t.initial = describe(initial, spec, v, eig);
    BranchState psi = initial;
    double cumulative = 1;
    for (int k = 0; k < n_steps; ++k) {
        double dtau = tau_at_step(schedule, k);
        PiteStepResult step;
        try {
            step = pite_step(psi, u, params, dtau);
        } catch (const PiteFailure &) {
            throw PiteFailure("PITE success probability below floor at step " + std::to_string(k + 1), k + 1);
        }
        psi = std::move(step.success_state);
        cumulative *= step.p_success;
        TrajectoryRecord r = describe(psi, spec, v, eig);
        r.step = k + 1;
        r.dtau = dtau;
        r.p_success = step.p_success;
        r.p_cumulative = cumulative;
        t.rows.push_back(std::move(r));
    }
    t.final_state = std::move(psi);
    return t;
}

void write_trajectory_csv(std::ostream &out, const Trajectory &t, int n_weights) {
    std::vector<std::string> header{"step", "dtau", "p_success", "p_cumulative"};
    for (int i = 0; i < n_weights; ++i) {
        header.push_back("w" + std::to_string(i));
    }
    header.push_back("energy_meV");
    header.push_back("parity");
    write_csv_row(out, header);
    for (const auto &r : t.rows) {
        std::vector<std::string> row{std::to_string(r.step), format_number(r.dtau), format_number(r.p_success),
                                     format_number(r.p_cumulative)};
        for (int i = 0; i < n_weights; ++i) {
            row.push_back(i < static_cast<int>(r.weights.size()) ? format_number(r.weights[static_cast<std::size_t>(i)])
                                                                  : "nan");
        }
        row.push_back(format_number(r.energy));
        row.push_back(format_number(r.parity));
        write_csv_row(out, row);
    }
}

}  // namespace fqemag
