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
// Motif and discord extraction from matrix profiles. The profile minimum
// names the motif pair (the most repeated pattern); the maximum names the
// discord (the most anomalous one). Ties break to the lowest index.

#ifndef MOTIFMINE_MOTIFS_HPP_
#define MOTIFMINE_MOTIFS_HPP_

#include <cstddef>
#include <vector>

#include "motifmine/simple_mp.hpp"

namespace motifmine {

struct Motif {
  std::ptrdiff_t position_a = -1;  // profile argmin
  std::ptrdiff_t position_b = -1;  // its nearest-neighbor partner
  double distance = 0.0;
};

struct Discord {
  std::ptrdiff_t position = -1;
  double distance = 0.0;
};

struct MotifResult {
  Motif motif;
  Discord discord;
  int subsequence_len = 0;
};

// Fully masked positions (infinite distance) never qualify; an
// all-infinite profile raises an error.
Motif extract_motif(const MatrixProfile& mp);
Discord extract_discord(const MatrixProfile& mp);
MotifResult extract_motif_result(const MatrixProfile& mp);

// Greedy top-k: repeatedly take the global argmin, then mask
// exclusion_radius frames around both pair members. Returns at most k
// motifs in nondecreasing distance order.
std::vector<Motif> top_k_motifs(const MatrixProfile& mp, std::size_t k);

inline double frame_to_time(std::ptrdiff_t frame, double frame_rate) {
  return static_cast<double>(frame) / frame_rate;
}

}  // namespace motifmine

#endif  // MOTIFMINE_MOTIFS_HPP_
