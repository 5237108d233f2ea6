// Copyright 2026 The motifmine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MOTIFMINE_FFT_HPP_
#define MOTIFMINE_FFT_HPP_

#include <complex>
#include <cstddef>
#include <vector>

namespace motifmine {

bool is_power_of_two(std::size_t n);
std::size_t next_power_of_two(std::size_t n);

// In-place iterative radix-2 FFT. Size must be a power of two.
void fft_inplace(std::vector<std::complex<double>>& x, bool inverse);

// Real-input forward FFT of a power-of-two frame: returns n/2 + 1 bins.
std::vector<std::complex<double>> rfft(const std::vector<double>& frame);

// Cross-correlation corr[j] = sum_t a[t + j] * b[t] for j in
// [0, len(a) - len(b)], computed by FFT. Requires len(a) >= len(b) >= 1.
std::vector<double> fft_cross_correlate(const std::vector<double>& a,
                                        const std::vector<double>& b);

}  // namespace motifmine

#endif  // MOTIFMINE_FFT_HPP_
