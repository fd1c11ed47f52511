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

#ifndef FQEMAG_INITIAL_STATE_H
#define FQEMAG_INITIAL_STATE_H

#include <array>
#include <cstddef>
#include <istream>
#include <vector>

#include "fqemag/branch_state.h"
#include "fqemag/eigensolver.h"

namespace fqemag {

enum class InitialKind { gaussian, exponential, bonding_s, antibonding_s, bonding_px, position_basis, custom_table };

struct TableEntry {
    std::array<std::size_t, 3> k{0, 0, 0};
    Complex value;
};

/// Initial wavefunction descriptor. Coordinates are relative to the cell
/// center (X = x - L/2). Gaussians are g(X; x_c, w) = exp(-((X - x_c)^2 + Y^2 + Z^2) / w^2).
struct InitialStateSpec {
    InitialKind kind = InitialKind::gaussian;
    double center = 0;   // x_c for gaussian, nm
    double width = 0;    // w for Gaussian-based kinds, nm
    double decay = 0;    // d for exponential, nm
    double offset = 0;   // a for the s/p orbital combinations, nm
    std::array<std::size_t, 3> index{0, 0, 0};  // position_basis
    std::vector<TableEntry> table;
};

/// Normalized single-branch state.
///
/// bonding_s / antibonding_s: g(a) +/- g(-a); bonding_px: g(3a/2) + g(-3a/2) - 5/2 g(0).
BranchState init_state(const Grid &grid, const InitialStateSpec &spec);

/// Reads rows "k_x,k_y,re,im" (or with k_z before re for 3-D grids). Blank
/// lines and lines starting with '#' are skipped.
std::vector<TableEntry> parse_state_table(std::istream &in, int dims);

/// Index of the point inverted through the cell center, k -> (N - k) mod N per axis.
std::size_t inverted_index(const Grid &grid, std::size_t flat);

/// <psi|P|psi> for the inversion P.
double parity_expectation(const BranchState &state);

struct EigenWeights {
    std::vector<double> individual;
    /// Summed over each degeneracy group of the EigenSet.
    std::vector<double> grouped;
};

EigenWeights eigenweights(const BranchState &state, const EigenSet &eig);

}  // namespace fqemag

#endif
