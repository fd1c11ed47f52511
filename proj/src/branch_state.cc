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

#include "fqemag/branch_state.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fqemag {

BranchState::BranchState(const Grid &grid, int n_branches, int n_particles)
    : grid_(grid), n_branches_(n_branches), n_particles_(n_particles) {
    if (n_branches != 1 && n_branches != 2 && n_branches != 4) {
        throw std::invalid_argument("n_branches must be 1, 2 or 4");
    }
    if (n_particles < 1) {
        throw std::invalid_argument("n_particles must be positive");
    }
    branch_size_ = 1;
    for (int p = 0; p < n_particles; ++p) {
        branch_size_ *= grid.size();
        if (branch_size_ > kMaxGridPoints) {
            throw std::invalid_argument("multi-particle register exceeds the memory guard");
        }
    }
    amplitudes_.assign(branch_size_ * static_cast<std::size_t>(n_branches), Complex{0, 0});
    reps_.assign(static_cast<std::size_t>(grid.dims * n_particles), Representation::position);
}

std::span<Complex> BranchState::branch(int b) {
    return std::span<Complex>(amplitudes_).subspan(static_cast<std::size_t>(b) * branch_size_, branch_size_);
}

std::span<const Complex> BranchState::branch(int b) const {
    return std::span<const Complex>(amplitudes_).subspan(static_cast<std::size_t>(b) * branch_size_, branch_size_);
}

Representation BranchState::representation(int axis, int particle) const {
    return reps_.at(static_cast<std::size_t>(particle * grid_.dims + axis));
}

void BranchState::set_representation(int axis, Representation rep, int particle) {
    reps_.at(static_cast<std::size_t>(particle * grid_.dims + axis)) = rep;
}

bool BranchState::in_position_basis() const {
    return std::all_of(reps_.begin(), reps_.end(), [](Representation r) { return r == Representation::position; });
}

double BranchState::norm_squared() const { return fqemag::norm_squared(amplitudes_); }

double BranchState::branch_norm_squared(int b) const { return fqemag::norm_squared(branch(b)); }

void BranchState::normalize() {
    double n2 = norm_squared();
    if (!(n2 > 0) || !std::isfinite(n2)) {
        throw std::domain_error("cannot normalize a state with zero or non-finite norm");
    }
    double inv = 1.0 / std::sqrt(n2);
    for (auto &a : amplitudes_) {
        a *= inv;
    }
}

BranchState BranchState::extract_branch(int b) const {
    BranchState out(grid_, 1, n_particles_);
    auto src = branch(b);
    std::copy(src.begin(), src.end(), out.amplitudes_.begin());
    out.reps_ = reps_;
    return out;
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("inner_product: size mismatch");
    }
    Complex acc{0, 0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double norm_squared(std::span<const Complex> a) {
    double acc = 0;
    for (const auto &z : a) {
        acc += std::norm(z);
    }
    return acc;
}

}  // namespace fqemag
