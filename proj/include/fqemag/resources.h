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

#ifndef FQEMAG_RESOURCES_H
#define FQEMAG_RESOURCES_H

#include <optional>
#include <stdexcept>
#include <string>

#include "fqemag/evolution.h"

namespace fqemag {

/// Subroutine calls of one PITE step; `*_controlled` counts the controlled subset.
struct CallCounts {
    int qft = 0;
    int u_kin = 0;
    int u_kin_controlled = 0;
    int u_mag = 0;
    int u_pot = 0;
    int u_pot_controlled = 0;

    bool operator==(const CallCounts &) const = default;
};

CallCounts subroutine_calls(Splitting splitting, bool magnetic);

/// Subcircuit costs of the Gaussian-evolution implementation of the double-well potential.
struct GaussianBlockCosts {
    long long squared_distance = 0;  // c(S)
    long long adder = 0;             // c(ADD)
    long long exp_phase = 0;         // c(U_e)
    long long controlled_exp_phase = 0;  // c(CU_e)
};

struct CnotModel {
    int n = 0;
    std::optional<GaussianBlockCosts> gaussian;
};

enum class CnotScenario { harmonic, double_well, symbolic };

class MissingSubcostError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Component costs. c(QFT) = n^2 + n/2 is half-integral for odd n, hence the
/// doubled form.
long long cnot_qft_doubled(int n);
double cnot_qft(int n);
long long cnot_u_mag(int n);
long long cnot_u_kin(int n);
long long cnot_cu_kin(int n);

/// Everything except c(U_pot) + c(CU_pot).
long long cnot_step_without_potential(int n, Splitting splitting);

struct PotentialCost {
    long long u_pot = 0;
    long long cu_pot = 0;
};

PotentialCost potential_cost(const CnotModel &model, CnotScenario scenario);

struct CnotCount {
    /// Empty for the symbolic scenario.
    std::optional<long long> value;
    /// Closed form, e.g. "c(U_pot) + c(CU_pot) + 642".
    std::string expression;
};

CnotCount cnot_counts(const CnotModel &model, Splitting splitting, CnotScenario scenario);

std::string to_string(CnotScenario scenario);
CnotScenario parse_scenario(const std::string &name);

}  // namespace fqemag

#endif
