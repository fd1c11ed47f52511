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

#include "fqemag/scenarios.h"

namespace fqemag {

HamiltonianSpec harmonic_scenario(int n, double field_tesla) {
    return {build_grid(n, 2, kScenarioBoxLen), kScenarioMassRatio, make_gauge(field_tesla, 0.5 * kScenarioBoxLen),
            harmonic_potential(4.0)};
}

HamiltonianSpec double_well_scenario(int n, double field_tesla) {
    return {build_grid(n, 2, kScenarioBoxLen), kScenarioMassRatio, make_gauge(field_tesla, 0.5 * kScenarioBoxLen),
            double_well_potential(-59.3, 41.51, kDoubleWellOffset, 24.48, 2.94, 24.48)};
}

InitialStateSpec gaussian_initial(double width) {
    InitialStateSpec s;
    s.kind = InitialKind::gaussian;
    s.width = width;
    return s;
}

InitialStateSpec exponential_initial(double decay) {
    InitialStateSpec s;
    s.kind = InitialKind::exponential;
    s.decay = decay;
    return s;
}

InitialStateSpec double_well_initial(InitialKind kind) {
    InitialStateSpec s;
    s.kind = kind;
    s.width = 11.0;
    s.offset = kDoubleWellOffset;
    return s;
}

}  // namespace fqemag
