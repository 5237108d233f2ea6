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

#include "motifmine/fft.hpp"

#include <cmath>

#include "motifmine/error.hpp"

namespace motifmine {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

void fft_inplace(std::vector<std::complex<double>>& x, bool inverse) {
  const std::size_t n = x.size();
  if (n == 0) return;
  if (!is_power_of_two(n)) throw ArgumentError("fft size must be a power of two");

  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 2.0 : -2.0) * M_PI / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        std::complex<double> u = x[i + k];
        std::complex<double> v = x[i + k + len / 2] * w;
        x[i + k] = u + v;
        x[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }

  if (inverse) {
    const double inv_n = 1.0 / static_cast<double>(n);
    for (auto& v : x) v *= inv_n;
  }
}

std::vector<std::complex<double>> rfft(const std::vector<double>& frame) {
  if (!is_power_of_two(frame.size()))
    throw ArgumentError("rfft frame size must be a power of two");
  std::vector<std::complex<double>> buf(frame.size());
  for (std::size_t i = 0; i < frame.size(); ++i) buf[i] = {frame[i], 0.0};
  fft_inplace(buf, false);
  buf.resize(frame.size() / 2 + 1);
  return buf;
}

std::vector<double> fft_cross_correlate(const std::vector<double>& a,
                                        const std::vector<double>& b) {
  if (b.empty() || a.size() < b.size())
    throw SizeError("cross-correlation needs len(a) >= len(b) >= 1");
  const std::size_t n = next_power_of_two(a.size() + b.size());
  std::vector<std::complex<double>> fa(n), fb(n);
  for (std::size_t i = 0; i < a.size(); ++i) fa[i] = {a[i], 0.0};
  // Time-reversing b turns convolution into correlation.
  for (std::size_t i = 0; i < b.size(); ++i) fb[b.size() - 1 - i] = {b[i], 0.0};
  fft_inplace(fa, false);
  fft_inplace(fb, false);
  for (std::size_t i = 0; i < n; ++i) fa[i] *= fb[i];
  fft_inplace(fa, true);

  std::vector<double> out(a.size() - b.size() + 1);
  for (std::size_t j = 0; j < out.size(); ++j)
    out[j] = fa[j + b.size() - 1].real();
  return out;
}

}  // namespace motifmine
