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

#include "fqemag/fft.h"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace fqemag {

FftPlan::FftPlan(std::size_t n) : n_(n) {
    if (n == 0 || (n & (n - 1)) != 0) {
        throw std::invalid_argument("FFT length must be a power of two");
    }
    twiddles_.resize(n / 2);
    for (std::size_t j = 0; j < n / 2; ++j) {
        double angle = -2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
        twiddles_[j] = {std::cos(angle), std::sin(angle)};
    }
    bitrev_.resize(n);
    int bits = 0;
    while ((std::size_t{1} << bits) < n) {
        ++bits;
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = 0;
        for (int b = 0; b < bits; ++b) {
            r |= ((i >> b) & 1u) << (bits - 1 - b);
        }
        bitrev_[i] = r;
    }
}

void FftPlan::transform(std::complex<double> *data, int sign) const {
    for (std::size_t i = 0; i < n_; ++i) {
        std::size_t j = bitrev_[i];
        if (i < j) {
            std::swap(data[i], data[j]);
        }
    }
    for (std::size_t len = 2; len <= n_; len <<= 1) {
        std::size_t half = len / 2;
        std::size_t step = n_ / len;
        for (std::size_t start = 0; start < n_; start += len) {
            for (std::size_t j = 0; j < half; ++j) {
                std::complex<double> w = twiddles_[j * step];
                if (sign > 0) {
                    w = std::conj(w);
                }
                std::complex<double> u = data[start + j];
                std::complex<double> v = data[start + j + half] * w;
                data[start + j] = u + v;
                data[start + j + half] = u - v;
            }
        }
    }
}

const FftPlan &fft_plan(std::size_t n) {
    static std::mutex mu;
    static std::map<std::size_t, std::unique_ptr<FftPlan>> plans;
    std::lock_guard<std::mutex> lock(mu);
    auto &slot = plans[n];
    if (!slot) {
        slot = std::make_unique<FftPlan>(n);
    }
    return *slot;
}

}  // namespace fqemag
