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

#include "fqemag/grid.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fqemag {

Grid build_grid(int n_per_axis, int dims, double box_len) {
    if (n_per_axis < 1 || n_per_axis > 12) {
        throw std::invalid_argument("n_per_axis must lie in [1, 12], got " + std::to_string(n_per_axis));
    }
    if (dims < 1 || dims > 3) {
        throw std::invalid_argument("dims must be 1, 2 or 3, got " + std::to_string(dims));
    }
    if (!(box_len > 0) || !std::isfinite(box_len)) {
        throw std::invalid_argument("box_len must be positive");
    }
    if (static_cast<std::size_t>(n_per_axis) * static_cast<std::size_t>(dims) > 24) {
        throw std::invalid_argument("grid too large: N^dims exceeds 2^24 points");
    }
    Grid g;
    g.n_per_axis = n_per_axis;
    g.dims = dims;
    g.box_len = box_len;
    g.n_points = std::size_t{1} << n_per_axis;
    g.dx = box_len / static_cast<double>(g.n_points);
    g.dp = 2.0 * std::numbers::pi / box_len;
    g.cell_volume = std::pow(g.dx, dims);
    return g;
}

std::size_t Grid::size() const {
    std::size_t total = 1;
    for (int a = 0; a < dims; ++a) {
        total *= n_points;
    }
    return total;
}

std::size_t Grid::stride(int axis) const {
    std::size_t s = 1;
    for (int a = 0; a < axis; ++a) {
        s *= n_points;
    }
    return s;
}

std::size_t Grid::axis_index(std::size_t flat, int axis) const {
    return (flat / stride(axis)) % n_points;
}

std::array<std::size_t, 3> Grid::unflatten(std::size_t flat) const {
    std::array<std::size_t, 3> k{0, 0, 0};
    for (int a = 0; a < dims; ++a) {
        k[a] = flat % n_points;
        flat /= n_points;
    }
    return k;
}

std::size_t Grid::flatten(const std::array<std::size_t, 3> &k) const {
    std::size_t flat = 0;
    for (int a = dims - 1; a >= 0; --a) {
        flat = flat * n_points + k[a];
    }
    return flat;
}

double Grid::momentum(std::size_t s) const {
    return (static_cast<double>(s) - 0.5 * static_cast<double>(n_points)) * dp;
}

bool Grid::operator==(const Grid &other) const {
    return n_per_axis == other.n_per_axis && dims == other.dims && box_len == other.box_len;
}

}  // namespace fqemag
