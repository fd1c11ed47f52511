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

#ifndef FQEMAG_GATE_SEQUENCE_H
#define FQEMAG_GATE_SEQUENCE_H

#include <complex>
#include <string>
#include <vector>

#include "fqemag/hamiltonian.h"

namespace fqemag {

/// Diagonal phase gate: multiplies by exp(i angle) when every qubit in
/// `targets` and `controls` is |1>.
struct PhaseGate {
    std::vector<int> targets;
    std::vector<int> controls;
    double angle = 0;
    int layer = 0;
};

/// Product of commuting phase gates plus a global phase. Qubit q is bit q of
/// the basis index; for the magnetic gate the x register occupies qubits
/// 0..n-1 and the y register n..2n-1.
struct PhaseGateSequence {
    int n_qubits = 0;
    std::vector<PhaseGate> gates;
    double global_phase = 0;

    int layer_count() const;
    int controlled_count() const;
};

/// U_kin(dt) for n qubits with e_kin dt = `ekin_dt`:
/// Z_kin(2^l (N - 2^l)) on each qubit l, C_{l,l'} Z_kin(-2^(l+l'+1)) for l' < l,
/// and global phase -N^2 e_kin dt / 4. Z_kin(u) has angle u e_kin dt.
PhaseGateSequence kinetic_gate_sequence(int n, double ekin_dt);

/// U_mag = exp(i mu (x - x_g) y) on 2n qubits: layer d holds the n gates
/// C_{l,l'} Z_mag^(l+l') with l' = l + d mod n and angle 2^(l+l') mu dx^2. A
/// nonzero gauge center adds one layer of single-qubit y phases
/// -mu x_g dx 2^l'.
PhaseGateSequence magnetic_gate_sequence(int n, double mu, double dx, double gauge_center);

enum class PhaseGateKind { kinetic, magnetic };

/// Sequence for the grid and Hamiltonian of `spec`; dt is ignored for the magnetic gate.
PhaseGateSequence emit_phase_gate_sequence(PhaseGateKind kind, const HamiltonianSpec &spec, double dt);

/// Dense diagonal (length 2^n_qubits) of the sequence, global phase included.
std::vector<std::complex<double>> reconstruct_diagonal(const PhaseGateSequence &seq);

/// True when no two gates in the same layer share a qubit.
bool layers_are_disjoint(const PhaseGateSequence &seq);

/// JSON export {n_qubits, global_phase, layers, gates: [{targets, controls, angle, layer}]}.
std::string to_json(const PhaseGateSequence &seq);

}  // namespace fqemag

#endif
