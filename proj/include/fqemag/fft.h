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

#ifndef FQEMAG_FFT_H
#define FQEMAG_FFT_H

#include <complex>
#include <cstddef>
#include <vector>

namespace fqemag {

/// In-place radix-2 FFT of a fixed power-of-two length.
///
/// transform(data, sign) computes y_s = sum_k exp(sign * 2 pi i s k / N) x_k
/// without normalization. Twiddles and the bit-reversal permutation are
/// precomputed so the butterfly loop makes no transcendental calls.
class FftPlan {
   public:
    explicit FftPlan(std::size_t n);

    std::size_t size() const { return n_; }
    void transform(std::complex<double> *data, int sign) const;

   private:
    std::size_t n_;
    std::vector<std::complex<double>> twiddles_;  // exp(-2 pi i j / N), j < N/2
    std::vector<std::size_t> bitrev_;
};

/// Shared plan for length n; plans are created once and never freed.
const FftPlan &fft_plan(std::size_t n);

}  // namespace fqemag

#endif
