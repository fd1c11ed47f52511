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

#ifndef FQEMAG_EIGENSOLVER_H
#define FQEMAG_EIGENSOLVER_H

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fqemag/branch_state.h"
#include "fqemag/hamiltonian.h"

namespace fqemag {

/// Eigenvalues closer than this (meV) are grouped as degenerate.
inline constexpr double kDegeneracyTolerance = 1e-6;

/// Lowest eigenpairs of a single-particle Hamiltonian, ascending.
struct EigenSet {
    Grid grid;
    std::vector<double> eigenvalues;
    /// One normalized eigenvector per column, flat grid index per row.
    Eigen::MatrixXcd vectors;
    /// ||H v - E v|| per pair.
    std::vector<double> residuals;
    std::vector<std::vector<int>> degeneracy_groups;

    int count() const { return static_cast<int>(eigenvalues.size()); }
    std::span<const Complex> vector(int i) const;
    BranchState state(int i) const;
};

std::vector<std::vector<int>> group_degenerate(const std::vector<double> &values,
                                               double tolerance = kDegeneracyTolerance);

struct EigensolverOptions {
    std::uint64_t seed = 20240531;
    /// Lanczos steps between restarts.
    int max_iterations = 500;
    int max_restarts = 40;
    /// Relative residual target, ||H v - E v|| <= tolerance * max(1, |E|).
    double tolerance = 1e-8;
    /// Grids up to this size are diagonalized densely.
    std::size_t dense_limit = 1024;
};

/// Thrown when the iterative solver misses the residual target.
class EigensolverError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Lowest `count` (<= 32) eigenpairs; Lanczos with full reorthogonalization,
/// thick restarts and deflation of converged pairs above `dense_limit`.
EigenSet lowest_eigenpairs(const HamiltonianSpec &spec, int count, const EigensolverOptions &options = {});

/// Lowest `count` (up to the full dimension) eigenpairs of an explicit Hermitian matrix on `grid`.
EigenSet eigenset_from_dense(const Eigen::MatrixXcd &h, const Grid &grid, int count);

}  // namespace fqemag

#endif
