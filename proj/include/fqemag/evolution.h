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

#ifndef FQEMAG_EVOLUTION_H
#define FQEMAG_EVOLUTION_H

#include <vector>

#include "fqemag/branch_state.h"
#include "fqemag/hamiltonian.h"

namespace fqemag {

enum class Splitting { TV, TVT };

const char *to_string(Splitting s);

/// exp(-i E_kin,s dt) on the momentum amplitudes of `axis`, E_kin,s = p_s^2 / 2m.
/// Throws std::logic_error unless the axis is tagged as momentum representation.
void apply_kinetic_phase(BranchState &state, const HamiltonianSpec &spec, int axis, double dt,
                         BranchMask mask = kAllBranches);

/// exp(+-i mu (x - x_g) y) in position representation (dims >= 2).
void apply_magnetic_phase(BranchState &state, const GaugeSpec &gauge, bool dagger, BranchMask mask = kAllBranches);

/// exp(-i V(r_k) dt) in position representation.
void apply_potential_phase(BranchState &state, const std::vector<double> &potential, double dt,
                           BranchMask mask = kAllBranches);

/// Kinetic propagator exp(-i T dt) factored as
/// U_mag exp(-i T0y dt) U_mag^dagger exp(-i T0x dt) exp(-i T0z dt), each free
/// factor realized as CQFT^dagger * phase * CQFT on its axis. With `adjoint`
/// the factors run in reverse order with negated times.
void apply_kinetic_evolution(BranchState &state, const HamiltonianSpec &spec, double dt,
                             BranchMask mask = kAllBranches, bool adjoint = false);

/// Trotterized real-time propagator for a fixed Hamiltonian.
///
/// TV applies U_pot(dt) then U_kin(dt); TVT applies U_kin(dt/2) U_pot(dt) U_kin(dt/2).
/// Only branches selected by `mask` evolve; Fourier transforms act on all
/// branches and cancel on the unselected ones.
class TrotterPropagator {
   public:
    TrotterPropagator(HamiltonianSpec spec, Splitting splitting);

    void step(BranchState &state, double dt, BranchMask mask = kAllBranches, bool adjoint = false) const;

    const HamiltonianSpec &spec() const { return spec_; }
    Splitting splitting() const { return splitting_; }
    const std::vector<double> &potential() const { return potential_; }

   private:
    HamiltonianSpec spec_;
    Splitting splitting_;
    std::vector<double> potential_;
};

/// One Trotter step; convenience wrapper over TrotterPropagator.
void rte_step(BranchState &state, const HamiltonianSpec &spec, double dt, Splitting splitting,
              BranchMask mask = kAllBranches, bool adjoint = false);

}  // namespace fqemag

#endif
