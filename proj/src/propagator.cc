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

#include "fqemag/propagator.h"

#include <cmath>
#include <stdexcept>

namespace fqemag {
namespace {

bool selected(BranchMask mask, int b) { return ((mask >> b) & 1u) != 0; }

Eigen::Map<Eigen::VectorXcd> as_vector(std::span<Complex> s) {
    return {s.data(), static_cast<Eigen::Index>(s.size())};
}

}  // namespace

TrotterBackend::TrotterBackend(const HamiltonianSpec &spec, Splitting splitting, double max_substep)
    : stepper_(spec, splitting), max_substep_(max_substep) {}

void TrotterBackend::evolve(BranchState &state, double dt, BranchMask mask, bool adjoint) const {
    int steps = 1;
    if (max_substep_ > 0) {
        steps = std::max(1, static_cast<int>(std::ceil(std::abs(dt) / max_substep_ - 1e-12)));
    }
    double h = dt / steps;
    for (int i = 0; i < steps; ++i) {
        stepper_.step(state, h, mask, adjoint);
    }
}

DensePropagator::DensePropagator(Eigen::VectorXd energies, Eigen::MatrixXcd vectors)
    : energies_(std::move(energies)), vectors_(std::move(vectors)) {
    if (vectors_.rows() != vectors_.cols() || vectors_.cols() != energies_.size()) {
        throw std::invalid_argument("DensePropagator needs a complete eigenbasis");
    }
}

DensePropagator DensePropagator::from_hermitian(const Eigen::MatrixXcd &h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    return {es.eigenvalues(), es.eigenvectors()};
}

void DensePropagator::evolve(BranchState &state, double dt, BranchMask mask, bool adjoint) const {
    if (static_cast<Eigen::Index>(state.branch_size()) != vectors_.rows()) {
        throw std::invalid_argument("DensePropagator size does not match the state");
    }
    double t = adjoint ? -dt : dt;
    for (int b = 0; b < state.n_branches(); ++b) {
        if (!selected(mask, b)) {
            continue;
        }
        auto v = as_vector(state.branch(b));
        Eigen::VectorXcd c = vectors_.adjoint() * v;
        for (Eigen::Index i = 0; i < c.size(); ++i) {
            c[i] *= std::polar(1.0, -energies_[i] * t);
        }
        v = vectors_ * c;
    }
}

EigenExpansionPropagator::EigenExpansionPropagator(const EigenSet &eig, std::shared_ptr<const Propagator> remainder)
    : eig_(eig), remainder_(std::move(remainder)) {}

void EigenExpansionPropagator::evolve(BranchState &state, double dt, BranchMask mask, bool adjoint) const {
    double t = adjoint ? -dt : dt;
    const Eigen::MatrixXcd &q = eig_.vectors;
    BranchState rest = state;
    for (int b = 0; b < state.n_branches(); ++b) {
        if (!selected(mask, b)) {
            continue;
        }
        auto v = as_vector(state.branch(b));
        Eigen::VectorXcd c = q.adjoint() * v;
        as_vector(rest.branch(b)) = v - q * c;
        for (Eigen::Index i = 0; i < c.size(); ++i) {
            c[i] *= std::polar(1.0, -eig_.eigenvalues[static_cast<std::size_t>(i)] * t);
        }
        v = q * c;
    }
    remainder_->evolve(rest, dt, mask, adjoint);
    for (int b = 0; b < state.n_branches(); ++b) {
        if (!selected(mask, b)) {
            continue;
        }
        auto r = as_vector(rest.branch(b));
        Eigen::VectorXcd c = q.adjoint() * r;
        as_vector(state.branch(b)) += r - q * c;
    }
}

}  // namespace fqemag
