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

#ifndef FQEMAG_UNITS_H
#define FQEMAG_UNITS_H

namespace fqemag {

/// Physical constants for the hbar = 1 unit system used throughout the library.
///
/// Energies are in meV, lengths in nm, and times in meV^-1 (i.e. in units of
/// hbar/meV, about 0.658 ps). Magnetic fields are given in tesla and converted
/// to an inverse-area coupling mu = q B / (hbar c).
struct UnitSystem {
    /// hbar^2 / (2 m_e) in meV nm^2.
    double kinetic_coeff;
    /// e / hbar in nm^-2 per tesla.
    double tesla_to_inv_len2;
    /// Sign of the particle charge in units of e (electrons: -1).
    double electron_charge_sign;
};

namespace codata {
// CODATA 2018 exact / recommended values (SI).
inline constexpr double hbar_J_s = 1.054571817e-34;
inline constexpr double electron_mass_kg = 9.1093837015e-31;
inline constexpr double elementary_charge_C = 1.602176634e-19;
}  // namespace codata

inline constexpr UnitSystem kUnits{
    // J m^2 -> meV nm^2: divide by (e * 1e-3), multiply by 1e18.
    (codata::hbar_J_s * codata::hbar_J_s / (2.0 * codata::electron_mass_kg)) /
        (codata::elementary_charge_C * 1e-3) * 1e18,
    // C / (J s) = 1 / (T m^2) -> 1 / (T nm^2).
    codata::elementary_charge_C / codata::hbar_J_s * 1e-18,
    -1.0,
};

/// hbar^2 / (2 m) in meV nm^2 for a particle of mass mass_ratio * m_e.
inline constexpr double kinetic_prefactor(double mass_ratio) {
    return kUnits.kinetic_coeff / mass_ratio;
}

/// Cyclotron energy hbar |e B| / m in meV.
inline double cyclotron_energy(double field_tesla, double mass_ratio) {
    double b = field_tesla < 0 ? -field_tesla : field_tesla;
    return 2.0 * kinetic_prefactor(mass_ratio) * kUnits.tesla_to_inv_len2 * b;
}

}  // namespace fqemag

#endif
