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
// Matrix-profile-join features: each audio window is joined against a
// sampled motif library and summarized by the join profile's min,
// median, and max.

#ifndef MOTIFMINE_JOIN_FEATURES_HPP_
#define MOTIFMINE_JOIN_FEATURES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "motifmine/features.hpp"
#include "motifmine/matrix.hpp"

namespace motifmine {

struct MotifCandidate {
  std::string species;
  Matrix patch;  // (bins, m) feature slice at a mined motif position
};

struct MotifLibrary {
  std::vector<MotifCandidate> entries;
  std::uint64_t seed = 0;

  std::size_t size() const { return entries.size(); }
};

// Uniform sample of k motifs without replacement, deterministic per
// seed. All candidates must share bin count and patch length.
MotifLibrary sample_motif_library(const std::vector<MotifCandidate>& candidates,
                                  std::size_t k, std::uint64_t rng_seed);

// Joins the window against the library (per-position distance is the
// minimum over entries; no subsequence spans two entries) and returns
// [min, median, max] of the pooled profile. The median of an
// even-length profile is the lower middle element.
std::vector<double> join_feature_vector(const Spectrogram& window_spec,
                                        const MotifLibrary& library, int m);

// Per-entry variant: [min, median, max] for each library entry's own
// profile, concatenated in entry order (3 * k values).
std::vector<double> join_feature_vector_per_entry(const Spectrogram& window_spec,
                                                  const MotifLibrary& library,
                                                  int m);

}  // namespace motifmine

#endif  // MOTIFMINE_JOIN_FEATURES_HPP_
