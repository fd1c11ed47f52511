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

#include "fqemag/gate_sequence.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace fqemag {
namespace {

std::vector<int> gate_qubits(const PhaseGate &g) {
    std::vector<int> q = g.targets;
    q.insert(q.end(), g.controls.begin(), g.controls.end());
    return q;
}

// Places each gate in the earliest layer where none of its qubits is used.
void assign_layers_greedy(PhaseGateSequence &seq) {
    std::vector<std::set<int>> used;
    for (auto &g : seq.gates) {
        auto qs = gate_qubits(g);
        std::size_t layer = 0;
        for (; layer < used.size(); ++layer) {
            bool clash = std::any_of(qs.begin(), qs.end(), [&](int q) { return used[layer].count(q) > 0; });
            if (!clash) {
                break;
            }
        }
        if (layer == used.size()) {
            used.emplace_back();
        }
        used[layer].insert(qs.begin(), qs.end());
        g.layer = static_cast<int>(layer);
    }
}

}  // namespace

int PhaseGateSequence::layer_count() const {
    int m = -1;
    for (const auto &g : gates) {
        m = std::max(m, g.layer);
    }
    return m + 1;
}

int PhaseGateSequence::controlled_count() const {
    return static_cast<int>(std::count_if(gates.begin(), gates.end(), [](const PhaseGate &g) { return !g.controls.empty(); }));
}

PhaseGateSequence kinetic_gate_sequence(int n, double ekin_dt) {
    if (n < 1 || n > 30) {
        throw std::invalid_argument("kinetic gate sequence: n out of range");
    }
    PhaseGateSequence seq;
    seq.n_qubits = n;
    double big_n = std::ldexp(1.0, n);
    seq.global_phase = -big_n * big_n * ekin_dt / 4.0;
    for (int l = 0; l < n; ++l) {
        double two_l = std::ldexp(1.0, l);
        seq.gates.push_back({{l}, {}, two_l * (big_n - two_l) * ekin_dt, 0});
    }
    for (int l = 0; l < n; ++l) {
        for (int lp = 0; lp < l; ++lp) {
            seq.gates.push_back({{lp}, {l}, -std::ldexp(1.0, l + lp + 1) * ekin_dt, 0});
        }
    }
    assign_layers_greedy(seq);
    return seq;
}

PhaseGateSequence magnetic_gate_sequence(int n, double mu, double dx, double gauge_center) {
    if (n < 1 || n > 15) {
        throw std::invalid_argument("magnetic gate sequence: n out of range");
    }
    PhaseGateSequence seq;
    seq.n_qubits = 2 * n;
    for (int d = 0; d < n; ++d) {
        for (int l = 0; l < n; ++l) {
            int lp = (l + d) % n;
            seq.gates.push_back({{n + lp}, {l}, std::ldexp(1.0, l + lp) * mu * dx * dx, d});
        }
    }
    if (gauge_center != 0) {
        for (int lp = 0; lp < n; ++lp) {
            seq.gates.push_back({{n + lp}, {}, -mu * gauge_center * dx * std::ldexp(1.0, lp), n});
        }
    }
    return seq;
}

PhaseGateSequence emit_phase_gate_sequence(PhaseGateKind kind, const HamiltonianSpec &spec, double dt) {
    const Grid &g = spec.grid;
    if (kind == PhaseGateKind::kinetic) {
        return kinetic_gate_sequence(g.n_per_axis, spec.kinetic_coeff() * g.dp * g.dp * dt);
    }
    return magnetic_gate_sequence(g.n_per_axis, spec.gauge.mu, g.dx, spec.gauge.gauge_center);
}

std::vector<std::complex<double>> reconstruct_diagonal(const PhaseGateSequence &seq) {
    if (seq.n_qubits > 24) {
        throw std::invalid_argument("reconstruct_diagonal: too many qubits");
    }
    std::size_t dim = std::size_t{1} << seq.n_qubits;
    std::vector<double> angle(dim, seq.global_phase);
    for (const auto &g : seq.gates) {
        std::size_t mask = 0;
        for (int q : gate_qubits(g)) {
            mask |= std::size_t{1} << q;
        }
        for (std::size_t j = 0; j < dim; ++j) {
            if ((j & mask) == mask) {
                angle[j] += g.angle;
            }
        }
    }
    std::vector<std::complex<double>> diag(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        diag[j] = std::polar(1.0, angle[j]);
    }
    return diag;
}

bool layers_are_disjoint(const PhaseGateSequence &seq) {
    std::vector<std::set<int>> used(static_cast<std::size_t>(seq.layer_count()));
    for (const auto &g : seq.gates) {
        for (int q : gate_qubits(g)) {
            if (!used[static_cast<std::size_t>(g.layer)].insert(q).second) {
                return false;
            }
        }
    }
    return true;
}

std::string to_json(const PhaseGateSequence &seq) {
    nlohmann::json j;
    j["n_qubits"] = seq.n_qubits;
    j["global_phase"] = seq.global_phase;
    j["layers"] = seq.layer_count();
    j["gates"] = nlohmann::json::array();
    for (const auto &g : seq.gates) {
        j["gates"].push_back({{"targets", g.targets}, {"controls", g.controls}, {"angle", g.angle}, {"layer", g.layer}});
    }
    return j.dump(2);
}

}  // namespace fqemag
