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

#include "fqemag/spectral.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "fqemag/fft.h"
#include "fqemag/parallel.h"

namespace fqemag {
namespace {

void check_selector(const BranchState &state, AxisSelector sel) {
    if (sel.axis < 0 || sel.axis >= state.grid().dims) {
        throw std::invalid_argument("axis out of range");
    }
    if (sel.particle < 0 || sel.particle >= state.n_particles()) {
        throw std::invalid_argument("particle index out of range");
    }
}

}  // namespace

std::size_t axis_stride(const BranchState &state, AxisSelector sel) {
    check_selector(state, sel);
    std::size_t stride = state.grid().stride(sel.axis);
    for (int p = 0; p < sel.particle; ++p) {
        stride *= state.grid().size();
    }
    return stride;
}

void for_each_axis_line(std::span<Complex> data, std::size_t n, std::size_t stride,
                        const std::function<void(Complex *line)> &op) {
    std::size_t block = n * stride;
    std::size_t n_blocks = data.size() / block;
    std::size_t n_lines = n_blocks * stride;
    parallel_for(n_lines, [&](std::size_t begin, std::size_t end) {
        std::vector<Complex> line(n);
        for (std::size_t l = begin; l < end; ++l) {
            Complex *base = data.data() + (l / stride) * block + (l % stride);
            if (stride == 1) {
                op(base);
                continue;
            }
            for (std::size_t k = 0; k < n; ++k) {
                line[k] = base[k * stride];
            }
            op(line.data());
            for (std::size_t k = 0; k < n; ++k) {
                base[k * stride] = line[k];
            }
        }
    });
}

void cqft_axis(BranchState &state, AxisSelector sel, bool inverse) {
    std::size_t stride = axis_stride(state, sel);
    std::size_t n = state.grid().n_points;
    const FftPlan &plan = fft_plan(n);
    double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for_each_axis_line(state.amplitudes(), n, stride, [&](Complex *line) {
        if (!inverse) {
            for (std::size_t k = 1; k < n; k += 2) {
                line[k] = -line[k];
            }
            plan.transform(line, -1);
            for (std::size_t k = 0; k < n; ++k) {
                line[k] *= scale;
            }
        } else {
            plan.transform(line, +1);
            for (std::size_t k = 0; k < n; ++k) {
                line[k] *= (k & 1u) ? -scale : scale;
            }
        }
    });
    state.set_representation(sel.axis, inverse ? Representation::position : Representation::momentum,
                             sel.particle);
}

void cqft_all_axes(BranchState &state, bool inverse) {
    for (int a = 0; a < state.grid().dims; ++a) {
        cqft_axis(state, {a, 0}, inverse);
    }
}

void shift_unitary(BranchState &state, AxisSelector sel, long long d) {
    std::size_t stride = axis_stride(state, sel);
    std::size_t n = state.grid().n_points;
    long long nn = static_cast<long long>(n);
    long long dm = ((d % nn) + nn) % nn;
    if (dm == 0) {
        return;
    }
    const FftPlan &plan = fft_plan(n);
    std::vector<Complex> phase(n);
    for (std::size_t k = 0; k < n; ++k) {
        long long e = (dm * static_cast<long long>(k)) % nn;
        double angle = -2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(n);
        phase[k] = Complex{std::cos(angle), std::sin(angle)} / static_cast<double>(n);
    }
    for_each_axis_line(state.amplitudes(), n, stride, [&](Complex *line) {
        plan.transform(line, -1);
        for (std::size_t k = 0; k < n; ++k) {
            line[k] *= phase[k];
        }
        plan.transform(line, +1);
    });
}

}  // namespace fqemag
