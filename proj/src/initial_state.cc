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

#include "fqemag/initial_state.h"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace fqemag {
namespace {

double gaussian(const Grid &g, const std::array<std::size_t, 3> &k, double xc, double w) {
    double r2 = 0;
    for (int a = 0; a < g.dims; ++a) {
        double x = g.centered(k[a]) - (a == 0 ? xc : 0.0);
        r2 += x * x;
    }
    return std::exp(-r2 / (w * w));
}

void require_positive(double v, const char *what) {
    if (!(v > 0) || !std::isfinite(v)) {
        throw std::invalid_argument(std::string(what) + " must be positive");
    }
}

void require_inside(const Grid &g, double x, const char *what) {
    if (!std::isfinite(x) || std::abs(x) >= 0.5 * g.box_len) {
        throw std::invalid_argument(std::string(what) + " lies outside the simulation cell");
    }
}

}  // namespace

BranchState init_state(const Grid &grid, const InitialStateSpec &spec) {
    BranchState s(grid);
    auto amp = s.amplitudes();
    switch (spec.kind) {
        case InitialKind::gaussian:
            require_positive(spec.width, "width");
            require_inside(grid, spec.center, "center");
            for (std::size_t i = 0; i < amp.size(); ++i) {
                amp[i] = gaussian(grid, grid.unflatten(i), spec.center, spec.width);
            }
            break;
        case InitialKind::exponential:
            require_positive(spec.decay, "decay");
            for (std::size_t i = 0; i < amp.size(); ++i) {
                auto k = grid.unflatten(i);
                double r1 = 0;
                for (int a = 0; a < grid.dims; ++a) {
                    r1 += std::abs(grid.centered(k[a]));
                }
                amp[i] = std::exp(-r1 / spec.decay);
            }
            break;
        case InitialKind::bonding_s:
        case InitialKind::antibonding_s: {
            require_positive(spec.width, "width");
            require_inside(grid, spec.offset, "offset");
            double sign = spec.kind == InitialKind::bonding_s ? 1.0 : -1.0;
            for (std::size_t i = 0; i < amp.size(); ++i) {
                auto k = grid.unflatten(i);
                amp[i] = gaussian(grid, k, spec.offset, spec.width) + sign * gaussian(grid, k, -spec.offset, spec.width);
            }
            break;
        }
        case InitialKind::bonding_px: {
            require_positive(spec.width, "width");
            require_inside(grid, 1.5 * spec.offset, "offset");
            double a = 1.5 * spec.offset;
            for (std::size_t i = 0; i < amp.size(); ++i) {
                auto k = grid.unflatten(i);
                amp[i] = gaussian(grid, k, a, spec.width) + gaussian(grid, k, -a, spec.width) -
                         2.5 * gaussian(grid, k, 0.0, spec.width);
            }
            break;
        }
        case InitialKind::position_basis:
            for (int a = 0; a < 3; ++a) {
                if ((a < grid.dims && spec.index[a] >= grid.n_points) || (a >= grid.dims && spec.index[a] != 0)) {
                    throw std::invalid_argument("position_basis index outside the grid");
                }
            }
            amp[grid.flatten(spec.index)] = 1.0;
            break;
        case InitialKind::custom_table:
            for (const auto &e : spec.table) {
                for (int a = 0; a < 3; ++a) {
                    if ((a < grid.dims && e.k[a] >= grid.n_points) || (a >= grid.dims && e.k[a] != 0)) {
                        throw std::invalid_argument("table index outside the grid");
                    }
                }
                amp[grid.flatten(e.k)] += e.value;
            }
            if (!(s.norm_squared() > 0)) {
                throw std::invalid_argument("state table has zero norm");
            }
            break;
    }
    s.normalize();
    return s;
}

std::vector<TableEntry> parse_state_table(std::istream &in, int dims) {
    std::vector<TableEntry> rows;
    std::string line;
    int n_index = dims == 3 ? 3 : 2;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        for (char &c : line) {
            if (c == ',') {
                c = ' ';
            }
        }
        std::istringstream ss(line);
        TableEntry e;
        long long idx[3] = {0, 0, 0};
        double re = 0, im = 0;
        bool ok = true;
        for (int a = 0; a < n_index; ++a) {
            ok = ok && static_cast<bool>(ss >> idx[a]);
        }
        ok = ok && static_cast<bool>(ss >> re >> im);
        std::string rest;
        if (!ok || (ss >> rest) || idx[0] < 0 || idx[1] < 0 || idx[2] < 0) {
            throw std::invalid_argument("malformed state table row " + std::to_string(lineno));
        }
        for (int a = 0; a < 3; ++a) {
            e.k[a] = static_cast<std::size_t>(idx[a]);
        }
        e.value = {re, im};
        rows.push_back(e);
    }
    return rows;
}

std::size_t inverted_index(const Grid &grid, std::size_t flat) {
    auto k = grid.unflatten(flat);
    for (int a = 0; a < grid.dims; ++a) {
        k[a] = (grid.n_points - k[a]) % grid.n_points;
    }
    return grid.flatten(k);
}

double parity_expectation(const BranchState &state) {
    if (state.n_branches() != 1 || state.n_particles() != 1) {
        throw std::invalid_argument("parity_expectation expects a single-branch single-particle state");
    }
    const Grid &g = state.grid();
    auto a = state.amplitudes();
    Complex acc{0, 0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i]) * a[inverted_index(g, i)];
    }
    return acc.real() / state.norm_squared();
}

EigenWeights eigenweights(const BranchState &state, const EigenSet &eig) {
    if (!(state.grid() == eig.grid) || state.n_particles() != 1 || state.n_branches() != 1) {
        throw std::invalid_argument("eigenweights: state and eigenset grids differ");
    }
    EigenWeights w;
    auto a = state.amplitudes();
    for (int i = 0; i < eig.count(); ++i) {
        w.individual.push_back(std::norm(inner_product(eig.vector(i), a)));
    }
    for (const auto &group : eig.degeneracy_groups) {
        double sum = 0;
        for (int i : group) {
            sum += w.individual[static_cast<std::size_t>(i)];
        }
        w.grouped.push_back(sum);
    }
    return w;
}

}  // namespace fqemag
