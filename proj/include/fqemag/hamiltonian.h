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

#ifndef FQEMAG_HAMILTONIAN_H
#define FQEMAG_HAMILTONIAN_H

#include <Eigen/Dense>
#include <vector>

#include "fqemag/branch_state.h"
#include "fqemag/grid.h"

namespace fqemag {

/// Shifted Landau gauge A = (x - x_g) B e_y.
struct GaugeSpec {
    double field_tesla = 0;
    double gauge_center = 0;
    /// q B / (hbar c) in nm^-2; enters the kinetic term as p_y - mu (x - x_g).
    double mu = 0;
};

GaugeSpec make_gauge(double field_tesla, double gauge_center);

enum class PotentialKind { zero, harmonic, double_well, table };

struct PotentialSpec {
    PotentialKind kind = PotentialKind::zero;
    double omega0 = 0;  // harmonic confinement energy, meV
    double v0 = 0;      // double-well dot depth, meV
    double vp = 0;      // double-well barrier height, meV
    double a = 0;       // dot offset, nm
    double delta = 0;   // dot width, nm
    double delta_x = 0; // barrier widths, nm
    double delta_y = 0;
    std::vector<double> table;  // one value per grid point (flat index)
};

PotentialSpec harmonic_potential(double omega0);
PotentialSpec double_well_potential(double v0, double vp, double a, double delta, double delta_x, double delta_y);

struct HamiltonianSpec {
    Grid grid;
    double mass_ratio = 1;
    GaugeSpec gauge;
    PotentialSpec potential;

    /// hbar^2 / 2m in meV nm^2.
    double kinetic_coeff() const;
};

/// Checks mass, field and potential parameters; throws std::invalid_argument.
void validate(const HamiltonianSpec &spec);

/// Potential in meV at every grid point; X = x - L/2 etc.
std::vector<double> evaluate_potential(const HamiltonianSpec &spec);

/// Vector-potential coupling mu (x - x_g) at per-axis x index kx.
inline double vector_potential(const HamiltonianSpec &spec, std::size_t kx) {
    return spec.gauge.mu * (spec.grid.coordinate(kx) - spec.gauge.gauge_center);
}

/// (T + V) psi, with T = hbar^2/2m sum_nu (P_nu - A_nu)^2 applied through
/// centered FFTs. `potential` may be passed to avoid re-evaluation.
BranchState apply_hamiltonian(const BranchState &state, const HamiltonianSpec &spec,
                              const std::vector<double> *potential = nullptr);

/// <psi|H|psi> for a single-branch state.
double energy_expectation(const BranchState &state, const HamiltonianSpec &spec,
                          const std::vector<double> *potential = nullptr);

/// Largest N^dims accepted by dense_hamiltonian.
inline constexpr std::size_t kDenseHamiltonianLimit = 4096;

/// Dense position-space matrix assembled from the Pi_nu matrices,
/// H = (1/N^dims) sum_nu Pi_nu Pi_nu^dagger / 2m + diag(V).
Eigen::MatrixXcd dense_hamiltonian(const HamiltonianSpec &spec);

/// Analytic Fock-Darwin levels (n1 + 1) Omega - l omega_c / 2, ascending,
/// with Omega = sqrt(omega0^2 + omega_c^2 / 4) and omega_c = hbar |e B| / m.
std::vector<double> fock_darwin_levels(double omega0, double field_tesla, double mass_ratio, int count);

}  // namespace fqemag

#endif
