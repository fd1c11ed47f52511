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

#ifndef FQEMAG_OBSERVABLES_H
#define FQEMAG_OBSERVABLES_H

#include <Eigen/Dense>
#include <vector>

#include "fqemag/branch_state.h"
#include "fqemag/derivatives.h"
#include "fqemag/hamiltonian.h"

namespace fqemag {

/// Real field on one particle register (density in nm^-dims, currents in
/// nm^-dims meV, i.e. probability current per unit time).
struct ScalarField {
    Grid grid;
    std::vector<double> values;
};

struct VectorField {
    Grid grid;
    /// One component per axis.
    std::vector<std::vector<double>> components;
};

/// Current output convention: probability current (charge divided out) or
/// electric current in units of e.
enum class CurrentUnits { probability, charge };

/// rho_k = (n_e / dV) P_k with P_k the marginal probability of one particle register.
ScalarField density(const BranchState &state, int n_e, const MeasurementModel &model = {});

/// One-electron density matrix gamma(k, k') = (n_e / dV) sum_rest a(k, rest) a*(k', rest).
struct OneElectronDM {
    Eigen::MatrixXcd gamma;
    int n_e = 1;
};

/// Largest register (N^dims) accepted for n_e >= 2.
inline constexpr std::size_t kMultiParticleDMLimit = 64;

OneElectronDM one_electron_dm(const BranchState &state, int n_e);

/// Paramagnetic current along `axis` from the probabilities of the circuits
/// C_para(+d) and C_para(-d) (ancilla outcome 0, one particle register measured).
ScalarField paramagnetic_current_measured(const BranchState &state, int axis, int d, const MeasurementModel &model,
                                          int n_e, double mass_ratio, CurrentUnits units = CurrentUnits::probability);

/// Spectral reference: j = (1/m) Im(psi^* grad psi), derivative evaluated through CQFT.
VectorField paramagnetic_current_oracle(const BranchState &state, double mass_ratio,
                                        CurrentUnits units = CurrentUnits::probability);

/// j_dia = -(1/m) mu (x - x_g) rho e_y in probability units.
VectorField diamagnetic_current(const ScalarField &rho, const HamiltonianSpec &spec,
                                CurrentUnits units = CurrentUnits::probability);

VectorField add(const VectorField &a, const VectorField &b);

/// Spectral divergence of a vector field.
ScalarField divergence(const VectorField &j);

/// dV * sum_k (X j_y - Y j_x) about the cell center; positive for counterclockwise flow.
double circulation(const VectorField &j);

}  // namespace fqemag

#endif
