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

#ifndef FQEMAG_GRID_H
#define FQEMAG_GRID_H

#include <array>
#include <cstddef>
#include <cstdint>

namespace fqemag {

/// Equidistant periodic grid on [0, L)^dims with N = 2^n points per axis.
///
/// Grid point k has coordinate k * dx along each axis. Flat indices are
/// row-major with x fastest: index = (kz * N + ky) * N + kx.
struct Grid {
    int n_per_axis = 0;
    int dims = 0;
    double box_len = 0;
    std::size_t n_points = 0;
    double dx = 0;
    double dp = 0;
    double cell_volume = 0;

    /// Total number of grid points, N^dims.
    std::size_t size() const;
    /// Stride of `axis` in the flat index.
    std::size_t stride(int axis) const;
    /// Per-axis index of a flat index.
    std::size_t axis_index(std::size_t flat, int axis) const;
    std::array<std::size_t, 3> unflatten(std::size_t flat) const;
    std::size_t flatten(const std::array<std::size_t, 3> &k) const;
    double coordinate(std::size_t k) const { return static_cast<double>(k) * dx; }
    /// Coordinate relative to the cell center, X = x - L/2.
    double centered(std::size_t k) const { return coordinate(k) - 0.5 * box_len; }
    /// Centered momentum (s - N/2) * dp of momentum index s.
    double momentum(std::size_t s) const;

    bool operator==(const Grid &other) const;
};

/// Largest number of grid points a single register may hold.
inline constexpr std::size_t kMaxGridPoints = std::size_t{1} << 24;

/// Builds a grid; throws std::invalid_argument on out-of-range input.
Grid build_grid(int n_per_axis, int dims, double box_len);

}  // namespace fqemag

#endif
