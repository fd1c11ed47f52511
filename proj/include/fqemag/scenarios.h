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

#ifndef FQEMAG_SCENARIOS_H
#define FQEMAG_SCENARIOS_H

#include "fqemag/hamiltonian.h"
#include "fqemag/initial_state.h"

namespace fqemag {

/// Quantum-dot parameter sets on a square cell of 120 nm with m = 0.067 m_e
/// and the gauge centered in the cell.
inline constexpr double kScenarioBoxLen = 120.0;
inline constexpr double kScenarioMassRatio = 0.067;

/// omega0 = 4 meV, default B = 5 T.
HamiltonianSpec harmonic_scenario(int n = 6, double field_tesla = 5.0);

/// V0 = -59.3 meV, Vp = 41.51 meV, a = 20 nm, Delta = Delta_y = 24.48 nm,
/// Delta_x = 2.94 nm, default B = 3 T.
HamiltonianSpec double_well_scenario(int n = 6, double field_tesla = 3.0);

inline constexpr double kDoubleWellOffset = 20.0;

InitialStateSpec gaussian_initial(double width = 20.0);
InitialStateSpec exponential_initial(double decay = 15.0);
/// s+/s-/p_x+ orbitals with w = 11 nm at the dot offset.
InitialStateSpec double_well_initial(InitialKind kind);

}  // namespace fqemag

#endif
