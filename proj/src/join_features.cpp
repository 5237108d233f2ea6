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

#include "motifmine/join_features.hpp"

#include <algorithm>
#include <limits>

#include "motifmine/error.hpp"
#include "motifmine/rng.hpp"
#include "motifmine/simple_mp.hpp"

namespace motifmine {

namespace {

// Join profile of the window against one m-frame patch. The patch holds
// a single subsequence, so each profile position is one distance.
std::vector<double> entry_profile(const Spectrogram& window_spec,
                                  const Matrix& patch, int m) {
  Spectrogram ref;
  ref.data = patch;
  ref.kind = window_spec.kind;
  ref.frame_rate = window_spec.frame_rate;
  return ab_join(window_spec, ref, m).distances;
}

std::vector<double> summarize(std::vector<double> profile) {
  std::sort(profile.begin(), profile.end());
  const std::size_t n = profile.size();
  return {profile.front(), profile[(n - 1) / 2], profile.back()};
}

}  // namespace

MotifLibrary sample_motif_library(const std::vector<MotifCandidate>& candidates,
                                  std::size_t k, std::uint64_t rng_seed) {
  if (k < 1) throw ArgumentError("library size must be >= 1");
  if (candidates.size() < k)
    throw SizeError("need at least " + std::to_string(k) + " motifs, have " +
                    std::to_string(candidates.size()));
  for (const auto& c : candidates)
    if (c.patch.rows() != candidates.front().patch.rows() ||
        c.patch.cols() != candidates.front().patch.cols())
      throw ShapeError("motif patches must share shape");

  // Partial Fisher-Yates: the first k slots of the shuffle.
  std::vector<std::size_t> order(candidates.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  Rng rng(rng_seed);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + rng.uniform_index(order.size() - i);
    std::swap(order[i], order[j]);
  }

  MotifLibrary lib;
  lib.seed = rng_seed;
  lib.entries.reserve(k);
  for (std::size_t i = 0; i < k; ++i) lib.entries.push_back(candidates[order[i]]);
  return lib;
}

std::vector<double> join_feature_vector(const Spectrogram& window_spec,
                                        const MotifLibrary& library, int m) {
  if (library.entries.empty()) throw SizeError("empty motif library");
  if (window_spec.frames() < static_cast<std::size_t>(m))
    throw SizeError("window has fewer than m frames");

  std::vector<double> pooled(window_spec.frames() - m + 1,
                             std::numeric_limits<double>::infinity());
  for (const auto& entry : library.entries) {
    if (entry.patch.rows() != window_spec.bins())
      throw ShapeError("library bin count differs from window");
    const auto profile = entry_profile(window_spec, entry.patch, m);
    for (std::size_t i = 0; i < pooled.size(); ++i)
      pooled[i] = std::min(pooled[i], profile[i]);
  }
  return summarize(std::move(pooled));
}

std::vector<double> join_feature_vector_per_entry(const Spectrogram& window_spec,
                                                  const MotifLibrary& library,
                                                  int m) {
  if (library.entries.empty()) throw SizeError("empty motif library");
  std::vector<double> out;
  out.reserve(3 * library.entries.size());
  for (const auto& entry : library.entries) {
    if (entry.patch.rows() != window_spec.bins())
      throw ShapeError("library bin count differs from window");
    const auto summary = summarize(entry_profile(window_spec, entry.patch, m));
    out.insert(out.end(), summary.begin(), summary.end());
  }
  return out;
}

}  // namespace motifmine
