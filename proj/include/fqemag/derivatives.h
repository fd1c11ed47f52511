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

#ifndef FQEMAG_DERIVATIVES_H
#define FQEMAG_DERIVATIVES_H

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <vector>

#include "fqemag/branch_state.h"

namespace fqemag {

enum class MeasurementMode { exact, sampled };

/// How outcome probabilities are obtained: exactly, or as frequencies of
/// `shots` multinomial draws from a generator seeded with `seed`.
struct MeasurementModel {
    MeasurementMode mode = MeasurementMode::exact;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
};

/// Outcome estimator shared by all circuits of one field run.
class Sampler {
   public:
    explicit Sampler(const MeasurementModel &model);
    /// Exact probabilities are returned unchanged in exact mode; otherwise
    /// replaced by sampled frequencies.
    std::vector<double> estimate(const std::vector<double> &probabilities);
    const MeasurementModel &model() const { return model_; }

   private:
    MeasurementModel model_;
    std::mt19937_64 rng_;
};

/// |D(l)| = (l + m - 1)! / (l! (m - 1)!), the number of order-l multi-indices in m variables.
long long derivative_combinations(int l, int m);

/// N^(r): sum of |D(l)| over l <= r with l of the same parity as r.
long long unknown_count(int r, int m);

/// Multi-indices of the unknowns, ordered by l and then descending lexicographically.
std::vector<std::vector<int>> unknown_multi_indices(int r, int m);

/// Derivative problem for a register of m variables (dims * n_particles;
/// variable v is axis v % dims of particle v / dims).
struct DerivativeProblem {
    int m_vars = 0;
    int order_r = 0;
    /// Integer displacements d, one per row of the linear system; h = d dx.
    std::vector<std::vector<int>> displacements;
};

/// Checks sizes and count; throws std::invalid_argument.
void validate(const DerivativeProblem &problem);

/// Row d, column u: prod_i h_{d,i}^{r_{u,i}}.
Eigen::MatrixXd displacement_matrix(const DerivativeProblem &problem, double dx);

/// Joint state of C^(phi)[d]: branch 0 = (f + e^{i phi} f[d]) / 2, branch 1 =
/// (f - e^{i phi} f[d]) / 2, with f[d] the register displaced by d via shift_unitary.
BranchState derivative_circuit_state(const BranchState &f, const std::vector<int> &d, double phi);

/// Flat index of x + d on the periodic register.
std::size_t displaced_index(const BranchState &f, std::size_t flat, const std::vector<int> &d);

struct DerivativeResult {
    std::vector<std::vector<int>> multi_indices;
    /// Row per register point, column per unknown g^(l)_{r_0..r_{m-1}} = f d^l f^* / (r_0! ...).
    Eigen::MatrixXcd g;
    /// G^(r)(x, h_d) built from probabilities, row per point, column per displacement.
    Eigen::MatrixXcd G;
};

/// Builds G^(r) from the phi = 0 and phi = pi/2 circuit probabilities and the
/// plain register distribution, then solves the linear system at every point.
DerivativeResult reconstruct_derivatives(const DerivativeProblem &problem, const BranchState &f, Sampler &sampler);

}  // namespace fqemag

#endif
