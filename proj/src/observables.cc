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

#include "fqemag/observables.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fqemag/spectral.h"
#include "fqemag/units.h"

namespace fqemag {
namespace {

void check_particles(const BranchState &state, int n_e) {
    if (state.n_branches() != 1) {
        throw std::invalid_argument("observables expect a single-branch state");
    }
    if (n_e != state.n_particles()) {
        throw std::invalid_argument("n_e must equal the number of particle registers");
    }
}

std::vector<double> marginal(std::span<const Complex> amp, std::size_t m) {
    std::vector<double> p(m, 0.0);
    for (std::size_t i = 0; i < amp.size(); ++i) {
        p[i % m] += std::norm(amp[i]);
    }
    return p;
}

double unit_factor(CurrentUnits units) { return units == CurrentUnits::charge ? kUnits.electron_charge_sign : 1.0; }

std::size_t axis_neighbor(const Grid &g, std::size_t flat, int axis, long long d) {
    auto k = g.unflatten(flat);
    long long n = static_cast<long long>(g.n_points);
    long long v = static_cast<long long>(k[axis]) + d;
    k[axis] = static_cast<std::size_t>(((v % n) + n) % n);
    return g.flatten(k);
}

// Spectral derivative along one axis of a complex single-particle field.
// The unpaired Nyquist mode (s = 0) is dropped so real fields stay real.
BranchState spectral_derivative(const BranchState &s, int axis) {
    BranchState out = s;
    cqft_axis(out, {axis, 0}, false);
    const Grid &g = s.grid();
    auto a = out.amplitudes();
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::size_t m = g.axis_index(i, axis);
        a[i] *= m == 0 ? Complex{0, 0} : Complex{0, g.momentum(m)};
    }
    cqft_axis(out, {axis, 0}, true);
    return out;
}

}  // namespace

ScalarField density(const BranchState &state, int n_e, const MeasurementModel &model) {
    check_particles(state, n_e);
    const Grid &g = state.grid();
    Sampler sampler(model);
    std::vector<double> p = sampler.estimate(marginal(state.amplitudes(), g.size()));
    ScalarField rho{g, std::vector<double>(g.size())};
    for (std::size_t k = 0; k < p.size(); ++k) {
        rho.values[k] = n_e * p[k] / g.cell_volume;
    }
    return rho;
}

OneElectronDM one_electron_dm(const BranchState &state, int n_e) {
    check_particles(state, n_e);
    const Grid &g = state.grid();
    std::size_t m = g.size();
    if (n_e >= 2 && m > kMultiParticleDMLimit) {
        throw std::invalid_argument("one_electron_dm: register too large for n_e >= 2");
    }
    std::size_t rest = state.branch_size() / m;
    Eigen::Map<const Eigen::MatrixXcd> a(state.amplitudes().data(), static_cast<Eigen::Index>(m),
                                         static_cast<Eigen::Index>(rest));
    OneElectronDM dm;
    dm.n_e = n_e;
    dm.gamma = (static_cast<double>(n_e) / g.cell_volume) * (a * a.adjoint());
    return dm;
}

ScalarField paramagnetic_current_measured(const BranchState &state, int axis, int d, const MeasurementModel &model,
                                          int n_e, double mass_ratio, CurrentUnits units) {
    check_particles(state, n_e);
    const Grid &g = state.grid();
    if (axis < 0 || axis >= g.dims) {
        throw std::invalid_argument("axis out of range");
    }
    if (d < 1 || static_cast<std::size_t>(d) >= g.n_points / 2) {
        throw std::invalid_argument("displacement d must satisfy 1 <= d < N/2");
    }
    std::size_t m = g.size();
    Sampler sampler(model);
    auto p_anc0 = [&](int shift) {
        std::vector<int> dv(static_cast<std::size_t>(g.dims * n_e), 0);
        dv[static_cast<std::size_t>(axis)] = shift;
        BranchState s = derivative_circuit_state(state, dv, 0.5 * std::numbers::pi);
        std::vector<double> joint = marginal(s.branch(0), m);
        std::vector<double> p1 = marginal(s.branch(1), m);
        joint.insert(joint.end(), p1.begin(), p1.end());
        joint = sampler.estimate(joint);
        joint.resize(m);
        return joint;
    };
    std::vector<double> p_plus = p_anc0(d);
    std::vector<double> p_minus = p_anc0(-d);
    std::vector<double> p_plain = sampler.estimate(marginal(state.amplitudes(), m));
    double inv_mass = 2.0 * kinetic_prefactor(mass_ratio);
    double h = d * g.dx;
    double factor = unit_factor(units) * inv_mass / (2.0 * h);
    ScalarField j{g, std::vector<double>(m)};
    for (std::size_t k = 0; k < m; ++k) {
        double rho_fwd = n_e * p_plain[axis_neighbor(g, k, axis, d)] / g.cell_volume;
        double rho_bwd = n_e * p_plain[axis_neighbor(g, k, axis, -d)] / g.cell_volume;
        j.values[k] = factor * ((2.0 * n_e / g.cell_volume) * (p_plus[k] - p_minus[k]) + 0.5 * (rho_fwd - rho_bwd));
    }
    return j;
}

VectorField paramagnetic_current_oracle(const BranchState &state, double mass_ratio, CurrentUnits units) {
    check_particles(state, 1);
    const Grid &g = state.grid();
    double inv_mass = 2.0 * kinetic_prefactor(mass_ratio);
    VectorField j{g, {}};
    auto a = state.amplitudes();
    for (int axis = 0; axis < g.dims; ++axis) {
        BranchState da = spectral_derivative(state, axis);
        auto dd = da.amplitudes();
        std::vector<double> comp(g.size());
        for (std::size_t k = 0; k < comp.size(); ++k) {
            comp[k] = unit_factor(units) * inv_mass * (std::conj(a[k]) * dd[k]).imag() / g.cell_volume;
        }
        j.components.push_back(std::move(comp));
    }
    return j;
}

VectorField diamagnetic_current(const ScalarField &rho, const HamiltonianSpec &spec, CurrentUnits units) {
    const Grid &g = rho.grid;
    double inv_mass = 2.0 * spec.kinetic_coeff();
    VectorField j{g, std::vector<std::vector<double>>(static_cast<std::size_t>(g.dims), std::vector<double>(g.size(), 0.0))};
    if (g.dims >= 2) {
        for (std::size_t k = 0; k < g.size(); ++k) {
            j.components[1][k] =
                -unit_factor(units) * inv_mass * vector_potential(spec, g.axis_index(k, 0)) * rho.values[k];
        }
    }
    return j;
}

VectorField add(const VectorField &a, const VectorField &b) {
    if (!(a.grid == b.grid) || a.components.size() != b.components.size()) {
        throw std::invalid_argument("vector fields differ in shape");
    }
    VectorField out = a;
    for (std::size_t c = 0; c < out.components.size(); ++c) {
        for (std::size_t k = 0; k < out.components[c].size(); ++k) {
            out.components[c][k] += b.components[c][k];
        }
    }
    return out;
}

ScalarField divergence(const VectorField &j) {
    const Grid &g = j.grid;
    ScalarField out{g, std::vector<double>(g.size(), 0.0)};
    for (int axis = 0; axis < g.dims; ++axis) {
        BranchState s(g);
        auto a = s.amplitudes();
        for (std::size_t k = 0; k < a.size(); ++k) {
            a[k] = j.components[static_cast<std::size_t>(axis)][k];
        }
        BranchState d = spectral_derivative(s, axis);
        auto dd = d.amplitudes();
        for (std::size_t k = 0; k < a.size(); ++k) {
            out.values[k] += dd[k].real();
        }
    }
    return out;
}

double circulation(const VectorField &j) {
    const Grid &g = j.grid;
    if (g.dims < 2) {
        throw std::invalid_argument("circulation requires dims >= 2");
    }
    double acc = 0;
    for (std::size_t k = 0; k < g.size(); ++k) {
        double x = g.centered(g.axis_index(k, 0));
        double y = g.centered(g.axis_index(k, 1));
        acc += x * j.components[1][k] - y * j.components[0][k];
    }
    return acc * g.cell_volume;
}

}  // namespace fqemag
