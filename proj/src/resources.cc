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

#include "fqemag/resources.h"

namespace fqemag {
namespace {

void check_n(int n) {
    if (n < 1) {
        throw std::invalid_argument("CNOT model requires n >= 1");
    }
}

}  // namespace

CallCounts subroutine_calls(Splitting splitting, bool magnetic) {
    // Columns of the single-step table; the magnetic rows add two QFTs per
    // U_mag pair around each y kinetic factor.
    CallCounts c;
    c.u_pot = 2;
    c.u_pot_controlled = 1;
    if (splitting == Splitting::TV) {
        c.qft = magnetic ? 8 : 6;
        c.u_kin = 6;
        c.u_kin_controlled = 3;
        c.u_mag = magnetic ? 2 : 0;
    } else {
        c.qft = magnetic ? 20 : 18;
        c.u_kin = 12;
        c.u_kin_controlled = 6;
        c.u_mag = magnetic ? 6 : 0;
    }
    return c;
}

long long cnot_qft_doubled(int n) {
    check_n(n);
    long long m = n;
    return 2 * m * m + m;
}

double cnot_qft(int n) { return 0.5 * static_cast<double>(cnot_qft_doubled(n)); }

long long cnot_u_mag(int n) {
    check_n(n);
    return 2LL * n * n;
}

long long cnot_u_kin(int n) {
    check_n(n);
    return static_cast<long long>(n) * (n - 1);
}

long long cnot_cu_kin(int n) {
    check_n(n);
    // n singly controlled gates at 2 CNOTs, n(n-1)/2 doubly controlled at 6.
    return 2LL * n + 3 * cnot_u_kin(n);
}

long long cnot_step_without_potential(int n, Splitting splitting) {
    if (splitting == Splitting::TV) {
        return 3 * cnot_qft_doubled(n) + 2 * cnot_u_kin(n) + 2 * cnot_cu_kin(n) + 2 * cnot_u_mag(n);
    }
    return 7 * cnot_qft_doubled(n) + 4 * cnot_u_kin(n) + 4 * cnot_cu_kin(n) + 6 * cnot_u_mag(n);
}

PotentialCost potential_cost(const CnotModel &model, CnotScenario scenario) {
    check_n(model.n);
    switch (scenario) {
        case CnotScenario::harmonic:
            return {2 * cnot_u_kin(model.n), 2 * cnot_cu_kin(model.n)};
        case CnotScenario::double_well: {
            if (!model.gaussian) {
                throw MissingSubcostError("double-well CNOT count needs c(S), c(ADD), c(U_e) and c(CU_e)");
            }
            const GaussianBlockCosts &g = *model.gaussian;
            if (g.squared_distance < 0 || g.adder < 0 || g.exp_phase < 0 || g.controlled_exp_phase < 0) {
                throw std::invalid_argument("subcircuit costs must be non-negative");
            }
            long long shared = 12 * g.squared_distance + 6 * g.adder;
            return {shared + 3 * g.exp_phase, shared + 3 * g.controlled_exp_phase};
        }
        case CnotScenario::symbolic:
            break;
    }
    throw std::invalid_argument("symbolic scenario has no numeric potential cost");
}

CnotCount cnot_counts(const CnotModel &model, Splitting splitting, CnotScenario scenario) {
    check_n(model.n);
    long long rest = cnot_step_without_potential(model.n, splitting);
    CnotCount out;
    if (scenario == CnotScenario::symbolic) {
        out.expression = "c(U_pot) + c(CU_pot) + " + std::to_string(rest);
        return out;
    }
    PotentialCost pot = potential_cost(model, scenario);
    out.value = pot.u_pot + pot.cu_pot + rest;
    out.expression = std::to_string(pot.u_pot) + " + " + std::to_string(pot.cu_pot) + " + " + std::to_string(rest);
    return out;
}

std::string to_string(CnotScenario scenario) {
    switch (scenario) {
        case CnotScenario::harmonic:
            return "harmonic";
        case CnotScenario::double_well:
            return "double_well";
        case CnotScenario::symbolic:
            return "symbolic";
    }
    return "unknown";
}

CnotScenario parse_scenario(const std::string &name) {
    if (name == "harmonic") return CnotScenario::harmonic;
    if (name == "double_well" || name == "double-well") return CnotScenario::double_well;
    if (name == "symbolic") return CnotScenario::symbolic;
    throw std::invalid_argument("unknown CNOT scenario: " + name);
}

}  // namespace fqemag
