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

#include "fqemag/hamiltonian.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fqemag/spectral.h"
#include "fqemag/units.h"

namespace fqemag {

GaugeSpec make_gauge(double field_tesla, double gauge_center) {
    GaugeSpec g;
    g.field_tesla = field_tesla;
    g.gauge_center = gauge_center;
    g.mu = kUnits.electron_charge_sign * kUnits.tesla_to_inv_len2 * field_tesla;
    return g;
}

PotentialSpec harmonic_potential(double omega0) {
    PotentialSpec p;
    p.kind = PotentialKind::harmonic;
    p.omega0 = omega0;
    return p;
}

PotentialSpec double_well_potential(double v0, double vp, double a, double delta, double delta_x, double delta_y) {
    PotentialSpec p;
    p.kind = PotentialKind::double_well;
    p.v0 = v0;
    p.vp = vp;
    p.a = a;
    p.delta = delta;
    p.delta_x = delta_x;
    p.delta_y = delta_y;
    return p;
}

double HamiltonianSpec::kinetic_coeff() const { return kinetic_prefactor(mass_ratio); }

void validate(const HamiltonianSpec &spec) {
    if (!(spec.mass_ratio > 0) || !std::isfinite(spec.mass_ratio)) {
        throw std::invalid_argument("mass_ratio must be positive");
    }
    if (!std::isfinite(spec.gauge.field_tesla) || !std::isfinite(spec.gauge.gauge_center)) {
        throw std::invalid_argument("gauge parameters must be finite");
    }
    if ((spec.gauge.mu == 0) != (spec.gauge.field_tesla == 0)) {
        throw std::invalid_argument("gauge coupling inconsistent with field strength");
    }
    const PotentialSpec &p = spec.potential;
    switch (p.kind) {
        case PotentialKind::zero:
            break;
        case PotentialKind::harmonic:
            if (!std::isfinite(p.omega0) || p.omega0 < 0) {
                throw std::invalid_argument("harmonic omega0 must be non-negative");
            }
            break;
        case PotentialKind::double_well:
            if (spec.grid.dims != 2) {
                throw std::invalid_argument("double-well potential requires dims = 2");
            }
            if (!(p.delta > 0) || !(p.delta_x > 0) || !(p.delta_y > 0)) {
                throw std::invalid_argument("double-well widths must be positive");
            }
            break;
        case PotentialKind::table:
            if (p.table.size() != spec.grid.size()) {
                throw std::invalid_argument("potential table size does not match the grid");
            }
            break;
    }
}

std::vector<double> evaluate_potential(const HamiltonianSpec &spec) {
    validate(spec);
    const Grid &g = spec.grid;
    const PotentialSpec &p = spec.potential;
    std::vector<double> v(g.size(), 0.0);
    if (p.kind == PotentialKind::table) {
        v = p.table;
    } else if (p.kind == PotentialKind::harmonic) {
        double c = p.omega0 * p.omega0 / (4.0 * spec.kinetic_coeff());
        for (std::size_t i = 0; i < v.size(); ++i) {
            auto k = g.unflatten(i);
            double r2 = 0;
            for (int a = 0; a < g.dims; ++a) {
                double x = g.centered(k[a]);
                r2 += x * x;
            }
            v[i] = c * r2;
        }
    } else if (p.kind == PotentialKind::double_well) {
        double d2 = p.delta * p.delta;
        for (std::size_t i = 0; i < v.size(); ++i) {
            auto k = g.unflatten(i);
            double x = g.centered(k[0]);
            double y = g.centered(k[1]);
            v[i] = p.v0 * std::exp(-((x + p.a) * (x + p.a) + y * y) / d2) +
                   p.v0 * std::exp(-((x - p.a) * (x - p.a) + y * y) / d2) +
                   p.vp * std::exp(-x * x / (p.delta_x * p.delta_x) - y * y / (p.delta_y * p.delta_y));
        }
    }
    for (double x : v) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument("potential is not finite on the grid");
        }
    }
    return v;
}

namespace {

// Multiplies amplitudes by the centered momentum along `axis` (momentum representation).
void multiply_momentum(BranchState &s, int axis) {
    const Grid &g = s.grid();
    auto amp = s.amplitudes();
    for (std::size_t i = 0; i < amp.size(); ++i) {
        amp[i] *= g.momentum(g.axis_index(i % g.size(), axis));
    }
}

// Multiplies by A_y = mu (x - x_g) (position representation).
void multiply_vector_potential(BranchState &s, const HamiltonianSpec &spec) {
    const Grid &g = s.grid();
    auto amp = s.amplitudes();
    for (std::size_t i = 0; i < amp.size(); ++i) {
        amp[i] *= vector_potential(spec, g.axis_index(i % g.size(), 0));
    }
}

// (P_axis - A_axis) applied to a position-representation state.
BranchState kinetic_momentum(const BranchState &in, const HamiltonianSpec &spec, int axis, bool with_field) {
    BranchState out = in;
    cqft_axis(out, {axis, 0}, false);
    multiply_momentum(out, axis);
    cqft_axis(out, {axis, 0}, true);
    if (with_field) {
        BranchState ap = in;
        multiply_vector_potential(ap, spec);
        auto o = out.amplitudes();
        auto a = ap.amplitudes();
        for (std::size_t i = 0; i < o.size(); ++i) {
            o[i] -= a[i];
        }
    }
    return out;
}

}  // namespace

BranchState apply_hamiltonian(const BranchState &state, const HamiltonianSpec &spec,
                              const std::vector<double> *potential) {
    if (state.n_branches() != 1 || state.n_particles() != 1) {
        throw std::invalid_argument("apply_hamiltonian expects a single-branch single-particle state");
    }
    if (!state.in_position_basis()) {
        throw std::logic_error("apply_hamiltonian expects a position-representation state");
    }
    if (!(spec.grid == state.grid())) {
        throw std::invalid_argument("state and Hamiltonian grids differ");
    }
    std::vector<double> local;
    if (potential == nullptr) {
        local = evaluate_potential(spec);
        potential = &local;
    }
    const Grid &g = state.grid();
    double kc = spec.kinetic_coeff();
    BranchState out(g);
    auto o = out.amplitudes();
    auto in = state.amplitudes();
    for (std::size_t i = 0; i < o.size(); ++i) {
        o[i] = (*potential)[i] * in[i];
    }
    for (int axis = 0; axis < g.dims; ++axis) {
        bool field = axis == 1 && spec.gauge.mu != 0;
        if (!field) {
            BranchState t = state;
            cqft_axis(t, {axis, 0}, false);
            auto a = t.amplitudes();
            for (std::size_t i = 0; i < a.size(); ++i) {
                double p = g.momentum(g.axis_index(i, axis));
                a[i] *= p * p;
            }
            cqft_axis(t, {axis, 0}, true);
            auto ta = t.amplitudes();
            for (std::size_t i = 0; i < o.size(); ++i) {
                o[i] += kc * ta[i];
            }
        } else {
            BranchState once = kinetic_momentum(state, spec, axis, true);
            BranchState twice = kinetic_momentum(once, spec, axis, true);
            auto ta = twice.amplitudes();
            for (std::size_t i = 0; i < o.size(); ++i) {
                o[i] += kc * ta[i];
            }
        }
    }
    return out;
}

double energy_expectation(const BranchState &state, const HamiltonianSpec &spec,
                          const std::vector<double> *potential) {
    BranchState h = apply_hamiltonian(state, spec, potential);
    return inner_product(state.amplitudes(), h.amplitudes()).real();
}

Eigen::MatrixXcd dense_hamiltonian(const HamiltonianSpec &spec) {
    const Grid &g = spec.grid;
    std::size_t m = g.size();
    if (m > kDenseHamiltonianLimit) {
        throw std::invalid_argument("dense_hamiltonian: grid exceeds the dense size limit");
    }
    std::vector<double> v = evaluate_potential(spec);
    long long nn = static_cast<long long>(g.n_points);
    long long half = nn / 2;
    // Plane-wave factor exp(i p_s . r_k); the exponent is an integer multiple of 2 pi / N.
    Eigen::MatrixXcd wave(m, m);
    for (std::size_t k = 0; k < m; ++k) {
        auto kk = g.unflatten(k);
        for (std::size_t s = 0; s < m; ++s) {
            auto ss = g.unflatten(s);
            long long e = 0;
            for (int a = 0; a < g.dims; ++a) {
                e += (static_cast<long long>(ss[a]) - half) * static_cast<long long>(kk[a]);
            }
            e = ((e % nn) + nn) % nn;
            double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(nn);
            wave(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(s)) = {std::cos(angle), std::sin(angle)};
        }
    }
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(m, m);
    Eigen::MatrixXcd pi(m, m);
    for (int nu = 0; nu < g.dims; ++nu) {
        for (std::size_t k = 0; k < m; ++k) {
            double a_nu = nu == 1 ? vector_potential(spec, g.axis_index(k, 0)) : 0.0;
            for (std::size_t s = 0; s < m; ++s) {
                double p_nu = g.momentum(g.axis_index(s, nu));
                pi(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(s)) =
                    (p_nu - a_nu) * wave(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(s));
            }
        }
        h.noalias() += pi * pi.adjoint();
    }
    h *= spec.kinetic_coeff() / static_cast<double>(m);
    for (std::size_t k = 0; k < m; ++k) {
        h(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) += v[k];
    }
    return h;
}

std::vector<double> fock_darwin_levels(double omega0, double field_tesla, double mass_ratio, int count) {
    if (count < 1) {
        throw std::invalid_argument("count must be positive");
    }
    double wc = cyclotron_energy(field_tesla, mass_ratio);
    double big = std::sqrt(omega0 * omega0 + 0.25 * wc * wc);
    std::vector<double> levels;
    int max_n1 = 4 * count + 8;
    for (int n1 = 0; n1 <= max_n1; ++n1) {
        double floor_n1 = (n1 + 1) * big - 0.5 * n1 * wc;
        if (static_cast<int>(levels.size()) >= count) {
            std::sort(levels.begin(), levels.end());
            if (floor_n1 > levels[static_cast<std::size_t>(count - 1)]) {
                break;
            }
        }
        for (int l = -n1; l <= n1; l += 2) {
            levels.push_back((n1 + 1) * big - 0.5 * l * wc);
        }
    }
    std::sort(levels.begin(), levels.end());
    levels.resize(static_cast<std::size_t>(count));
    return levels;
}

}  // namespace fqemag
