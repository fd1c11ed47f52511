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

#ifndef FQEMAG_BRANCH_STATE_H
#define FQEMAG_BRANCH_STATE_H

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "fqemag/grid.h"

namespace fqemag {

using Complex = std::complex<double>;

/// Which basis an axis register is currently expressed in.
enum class Representation : std::uint8_t { position, momentum };

/// Bit b selects branch b (ancilla computational basis state b).
using BranchMask = std::uint32_t;
inline constexpr BranchMask kAllBranches = ~BranchMask{0};

inline constexpr BranchMask branch_bit(int branch) { return BranchMask{1} << branch; }

/// Register amplitudes, one copy per ancilla basis state.
///
/// A state with `n_branches` = 2^a represents `a` ancilla qubits coupled to
/// the system register(s); branch b holds the system amplitudes multiplying
/// ancilla basis state |b>, with ancilla qubit j being bit j of b. The system
/// part is `n_particles` grid registers with particle 0 varying fastest.
/// Encoded amplitudes are sqrt(dV) * psi(r_k) for a single particle.
class BranchState {
   public:
    BranchState() = default;
    explicit BranchState(const Grid &grid, int n_branches = 1, int n_particles = 1);

    const Grid &grid() const { return grid_; }
    int n_branches() const { return n_branches_; }
    int n_particles() const { return n_particles_; }
    /// Amplitudes per branch, (N^dims)^n_particles.
    std::size_t branch_size() const { return branch_size_; }

    std::span<Complex> branch(int b);
    std::span<const Complex> branch(int b) const;
    std::span<Complex> amplitudes() { return amplitudes_; }
    std::span<const Complex> amplitudes() const { return amplitudes_; }

    Representation representation(int axis, int particle = 0) const;
    void set_representation(int axis, Representation rep, int particle = 0);
    /// True when every axis of every particle is in the position basis.
    bool in_position_basis() const;

    double norm_squared() const;
    double branch_norm_squared(int b) const;
    /// Rescales all branches so that the total norm is one; throws on zero norm.
    void normalize();

    /// Copies branch `b` into a fresh single-branch state.
    BranchState extract_branch(int b) const;

   private:
    Grid grid_{};
    int n_branches_ = 0;
    int n_particles_ = 0;
    std::size_t branch_size_ = 0;
    std::vector<Complex> amplitudes_;
    std::vector<Representation> reps_;
};

/// <a|b> over a single branch each.
Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);
double norm_squared(std::span<const Complex> a);

}  // namespace fqemag

#endif
