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
//
// SiMPle-style matrix profile over multi-bin spectrograms: the distance
// between subsequences i and j is the plain (non-normalized) Euclidean
// distance accumulated over all bins and m consecutive frames. The fast
// path seeds sliding dot products with FFT cross-correlation and advances
// them with O(1) incremental updates; a direct-summation oracle with the
// identical contract is provided for verification.

#ifndef MOTIFMINE_SIMPLE_MP_HPP_
#define MOTIFMINE_SIMPLE_MP_HPP_

#include <cstddef>
#include <vector>

#include "motifmine/features.hpp"
#include "motifmine/matrix.hpp"

namespace motifmine {

enum class JoinKind { kSelf, kAb };

// Matrix profile plus profile index. distances[i] is the distance from
// query subsequence i to its nearest admissible neighbor; indices[i] is
// that neighbor's start frame (-1 and +inf when the exclusion zone
// leaves no admissible neighbor).
struct MatrixProfile {
  std::vector<double> distances;
  std::vector<std::ptrdiff_t> indices;
  int subsequence_len = 0;
  int exclusion_radius = 0;  // 0 for AB joins
  JoinKind join_kind = JoinKind::kSelf;

  std::size_t size() const { return distances.size(); }
};

// Standard trivial-match policy: half the subsequence length.
inline int default_exclusion_radius(int m) { return m / 2; }

// Self-join with an exclusion zone: distances[i] is the minimum over all
// j with |i - j| > exclusion_radius. Pass exclusion_radius < 0 for the
// m/2 default. Results are identical for any worker count.
MatrixProfile self_join(const Spectrogram& spec, int m, int exclusion_radius = -1,
                        int workers = 1);

// AB-join: every reference position is admissible, indices point into
// the reference.
MatrixProfile ab_join(const Spectrogram& query, const Spectrogram& reference,
                      int m, int workers = 1);

// Direct O(n^2 * m * bins) oracle with the same contract as the fast
// paths. Guarded to small inputs (frames <= 2048). Pass reference =
// nullptr for a self-join.
MatrixProfile brute_force_profile(const Spectrogram& query,
                                  const Spectrogram* reference, int m,
                                  int exclusion_radius = -1);

// All sliding dot products between m-length subsequences of two rows:
// result(i, j) = sum_{t < m} a[i+t] * b[j+t]. Each row of the result is
// one FFT cross-correlation. This is the kernel that seeds the joins.
Matrix sliding_dot(const std::vector<double>& a, const std::vector<double>& b,
                   std::size_t m);

}  // namespace motifmine

#endif  // MOTIFMINE_SIMPLE_MP_HPP_
