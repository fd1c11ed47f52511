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

#ifndef FQEMAG_PROPAGATOR_H
#define FQEMAG_PROPAGATOR_H

#include <Eigen/Dense>
#include <memory>

#include "fqemag/branch_state.h"
#include "fqemag/eigensolver.h"
#include "fqemag/evolution.h"

namespace fqemag {

/// Real-time propagator U(dt) acting branch-wise on a state.
class Propagator {
   public:
    virtual ~Propagator() = default;
    /// Applies U(dt), or U(dt)^dagger when `adjoint`, to the branches in `mask`.
    virtual void evolve(BranchState &state, double dt, BranchMask mask = kAllBranches, bool adjoint = false) const = 0;
};

/// Trotterized propagator; dt is split into ceil(|dt| / max_substep) equal
/// steps when max_substep > 0.
class TrotterBackend : public Propagator {
   public:
    TrotterBackend(const HamiltonianSpec &spec, Splitting splitting, double max_substep = 0);
    void evolve(BranchState &state, double dt, BranchMask mask = kAllBranches, bool adjoint = false) const override;
    const TrotterPropagator &stepper() const { return stepper_; }

   private:
    TrotterPropagator stepper_;
    double max_substep_;
};

/// exp(-i H dt) from a full eigendecomposition H = V diag(E) V^dagger.
class DensePropagator : public Propagator {
   public:
    DensePropagator(Eigen::VectorXd energies, Eigen::MatrixXcd vectors);
    /// Diagonalizes a Hermitian matrix.
    static DensePropagator from_hermitian(const Eigen::MatrixXcd &h);

    void evolve(BranchState &state, double dt, BranchMask mask = kAllBranches, bool adjoint = false) const override;
    const Eigen::VectorXd &energies() const { return energies_; }
    const Eigen::MatrixXcd &vectors() const { return vectors_; }

   private:
    Eigen::VectorXd energies_;
    Eigen::MatrixXcd vectors_;
};

/// Exact evolution on the span of an EigenSet; the orthogonal remainder is
/// evolved by `remainder` and projected back onto the complement.
class EigenExpansionPropagator : public Propagator {
   public:
    EigenExpansionPropagator(const EigenSet &eig, std::shared_ptr<const Propagator> remainder);
    void evolve(BranchState &state, double dt, BranchMask mask = kAllBranches, bool adjoint = false) const override;

   private:
    EigenSet eig_;
    std::shared_ptr<const Propagator> remainder_;
};

}  // namespace fqemag

#endif
