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

#ifndef FQEMAG_SPECTRAL_H
#define FQEMAG_SPECTRAL_H

#include <complex>
#include <cstddef>
#include <functional>
#include <span>

#include "fqemag/branch_state.h"

namespace fqemag {

/// One coordinate axis of one particle register.
struct AxisSelector {
    int axis = 0;
    int particle = 0;
};

/// Stride of the selected axis inside a branch of `state`.
std::size_t axis_stride(const BranchState &state, AxisSelector sel);

/// Calls op(line) on every 1-D line of length n with the given stride, for all
/// branches. `line` is a contiguous scratch copy written back afterwards.
void for_each_axis_line(std::span<Complex> data, std::size_t n, std::size_t stride,
                        const std::function<void(Complex *line)> &op);

/// Centered QFT along one axis.
///
/// Forward maps position amplitudes a_k to momentum amplitudes
/// b_s = N^-1/2 sum_k exp(-2 pi i s k / N) (-1)^k a_k, so that index s carries
/// momentum (s - N/2) dp. The state's representation tag for the axis is set
/// to momentum (forward) or position (inverse).
void cqft_axis(BranchState &state, AxisSelector sel, bool inverse);

/// Applies cqft_axis to every axis of particle 0.
void cqft_all_axes(BranchState &state, bool inverse);

/// Cyclic relabeling |j> -> |j + d mod N> along one axis, evaluated as
/// QFT * diag(exp(-2 pi i d k / N)) * QFT^dagger with the ordinary QFT.
void shift_unitary(BranchState &state, AxisSelector sel, long long d);

}  // namespace fqemag

#endif
