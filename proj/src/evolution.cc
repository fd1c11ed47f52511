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

#include "fqemag/evolution.h"

#include <cmath>
#include <stdexcept>

#include "fqemag/spectral.h"

namespace fqemag {
namespace {

bool selected(BranchMask mask, int b) { return ((mask >> b) & 1u) != 0; }

void require_position(const BranchState &s, const char *what) {
    if (!s.in_position_basis()) {
        throw std::logic_error(std::string(what) + " requires the position representation");
    }
}

Complex phase(double angle) { return {std::cos(angle), std::sin(angle)}; }

// Branch-wise multiply by a diagonal given per flat index of particle 0.
template <typename Fn>
void multiply_diagonal(BranchState &s, BranchMask mask, Fn &&factor_at) {
    const std::size_t m = s.grid().size();
    for (int b = 0; b < s.n_branches(); ++b) {
        if (!selected(mask, b)) {
            continue;
        }
        auto amp = s.branch(b);
        for (std::size_t i = 0; i < amp.size(); ++i) {
            amp[i] *= factor_at(i % m);
        }
    }
}

}  // namespace

const char *to_string(Splitting s) { return s == Splitting::TV ? "TV" : "TVT"; }

void apply_kinetic_phase(BranchState &state, const HamiltonianSpec &spec, int axis, double dt, BranchMask mask) {
    if (state.representation(axis) != Representation::momentum) {
        throw std::logic_error("kinetic phase requires the momentum representation on its axis");
    }
    const Grid &g = state.grid();
    double kc = spec.kinetic_coeff();
    std::vector<Complex> table(g.n_points);
    for (std::size_t s = 0; s < g.n_points; ++s) {
        double p = g.momentum(s);
        table[s] = phase(-kc * p * p * dt);
    }
    multiply_diagonal(state, mask, [&](std::size_t i) { return table[g.axis_index(i, axis)]; });
}

void apply_magnetic_phase(BranchState &state, const GaugeSpec &gauge, bool dagger, BranchMask mask) {
    const Grid &g = state.grid();
    if (g.dims < 2) {
        throw std::invalid_argument("magnetic phase requires dims >= 2");
    }
    require_position(state, "magnetic phase");
    if (gauge.mu == 0) {
        return;
    }
    double sign = dagger ? -1.0 : 1.0;
    std::size_t n = g.n_points;
    std::vector<Complex> table(n * n);
    for (std::size_t ky = 0; ky < n; ++ky) {
        for (std::size_t kx = 0; kx < n; ++kx) {
            double x = g.coordinate(kx) - gauge.gauge_center;
            table[ky * n + kx] = phase(sign * gauge.mu * x * g.coordinate(ky));
        }
    }
    multiply_diagonal(state, mask, [&](std::size_t i) { return table[i % (n * n)]; });
}

void apply_potential_phase(BranchState &state, const std::vector<double> &potential, double dt, BranchMask mask) {
    require_position(state, "potential phase");
    if (potential.size() != state.grid().size()) {
        throw std::invalid_argument("potential size does not match the grid");
    }
    std::vector<Complex> table(potential.size());
    for (std::size_t i = 0; i < potential.size(); ++i) {
        table[i] = phase(-potential[i] * dt);
    }
    multiply_diagonal(state, mask, [&](std::size_t i) { return table[i]; });
}

void apply_kinetic_evolution(BranchState &state, const HamiltonianSpec &spec, double dt, BranchMask mask,
                             bool adjoint) {
    require_position(state, "kinetic evolution");
    const int dims = state.grid().dims;
    const bool field = dims >= 2 && spec.gauge.mu != 0;
    auto free_axis = [&](int axis, double t) {
        cqft_axis(state, {axis, 0}, false);
        apply_kinetic_phase(state, spec, axis, t, mask);
        cqft_axis(state, {axis, 0}, true);
    };
    if (!adjoint) {
        if (dims == 3) {
            free_axis(2, dt);
        }
        free_axis(0, dt);
        if (dims >= 2) {
            if (field) {
                apply_magnetic_phase(state, spec.gauge, true, mask);
            }
            free_axis(1, dt);
            if (field) {
                apply_magnetic_phase(state, spec.gauge, false, mask);
            }
        }
    } else {
        if (dims >= 2) {
            if (field) {
                apply_magnetic_phase(state, spec.gauge, true, mask);
            }
            free_axis(1, -dt);
            if (field) {
                apply_magnetic_phase(state, spec.gauge, false, mask);
            }
        }
        free_axis(0, -dt);
        if (dims == 3) {
            free_axis(2, -dt);
        }
    }
}

TrotterPropagator::TrotterPropagator(HamiltonianSpec spec, Splitting splitting)
    : spec_(std::move(spec)), splitting_(splitting), potential_(evaluate_potential(spec_)) {}

void TrotterPropagator::step(BranchState &state, double dt, BranchMask mask, bool adjoint) const {
    if (!(state.grid() == spec_.grid)) {
        throw std::invalid_argument("state and propagator grids differ");
    }
    double sign = adjoint ? -1.0 : 1.0;
    if (splitting_ == Splitting::TV) {
        if (!adjoint) {
            apply_potential_phase(state, potential_, dt, mask);
            apply_kinetic_evolution(state, spec_, dt, mask, false);
        } else {
            apply_kinetic_evolution(state, spec_, dt, mask, true);
            apply_potential_phase(state, potential_, -dt, mask);
        }
    } else {
        apply_kinetic_evolution(state, spec_, 0.5 * dt, mask, adjoint);
        apply_potential_phase(state, potential_, sign * dt, mask);
        apply_kinetic_evolution(state, spec_, 0.5 * dt, mask, adjoint);
    }
}

void rte_step(BranchState &state, const HamiltonianSpec &spec, double dt, Splitting splitting, BranchMask mask,
              bool adjoint) {
    TrotterPropagator(spec, splitting).step(state, dt, mask, adjoint);
}

}  // namespace fqemag
