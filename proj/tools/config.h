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

#ifndef FQEMAG_TOOLS_CONFIG_H
#define FQEMAG_TOOLS_CONFIG_H

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fqemag/derivatives.h"
#include "fqemag/filtration.h"
#include "fqemag/hamiltonian.h"
#include "fqemag/initial_state.h"
#include "fqemag/pite.h"
#include "json.hpp"

namespace fqemag::cli {

using nlohmann::json;

/// Schema or value problem in the configuration (exit code 2).
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct FiltrationTarget {
    int index = 0;
    /// dt_f = pi / |E~_reference - E~_index|.
    int reference = 1;
};

struct FiltrationConfig {
    FiltrationOrder order = FiltrationOrder::first;
    std::vector<FiltrationTarget> targets;
    /// Injected error per eigenstate index (meV).
    std::map<int, double> errors;
    /// Sweep grid per eigenstate index; the cartesian product is evaluated.
    std::map<int, std::vector<double>> sweep;
    /// Trotter substep for the part of the state outside the eigen-expansion.
    double remainder_substep = 0.005;
};

enum class StateSource { initial, eigenstate, pite };
enum class CurrentMethod { measured, oracle };

struct ObservablesConfig {
    StateSource source = StateSource::eigenstate;
    int eigen_index = 0;
    CurrentMethod method = CurrentMethod::measured;
    int d = 1;
    MeasurementModel measurement;
    bool charge_units = false;
};

struct DerivativeDemoConfig {
    int n = 5;
    double box_len = 40;
    double width = 6;
    double wave_number = 0.4;
    double center = 1.3;
};

struct Config {
    std::string preset;
    std::string description;
    bool units_check = false;
    HamiltonianSpec spec;
    InitialStateSpec initial;
    PiteParams pite;
    Schedule schedule;
    int n_steps = 0;
    /// Eigenpairs used for weights, filtration and diagonalization.
    int n_eigen = 10;
    std::vector<double> field_sweep;
    bool write_eigenvectors = false;
    std::optional<FiltrationConfig> filtration;
    ObservablesConfig observables;
    DerivativeDemoConfig derivative;
    json gatecount;
    std::string out_dir = "out";
    std::uint64_t seed = 0;
};

std::vector<std::string> preset_names();
json preset(const std::string &name);

/// Merges `overlay` into `base` recursively (objects merge, other values replace).
void merge(json &base, const json &overlay);

/// Applies "a.b.c=value"; the value is parsed as JSON, falling back to a string.
void apply_override(json &doc, const std::string &assignment);

/// Validates the document against the schema (unknown keys rejected) and
/// converts it. Throws ConfigError.
Config parse_config(const json &doc);

}  // namespace fqemag::cli

#endif
