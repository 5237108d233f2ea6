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

#include "motifmine/motifs.hpp"

#include <cmath>
#include <limits>

#include "motifmine/error.hpp"

namespace motifmine {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

Motif extract_motif(const MatrixProfile& mp) {
  double best = kInf;
  std::ptrdiff_t best_i = -1;
  for (std::size_t i = 0; i < mp.size(); ++i) {
    if (std::isfinite(mp.distances[i]) && mp.distances[i] < best) {
      best = mp.distances[i];
      best_i = static_cast<std::ptrdiff_t>(i);
    }
  }
  if (best_i < 0) throw Error("profile has no finite distance; no motif");
  return Motif{best_i, mp.indices[static_cast<std::size_t>(best_i)], best};
}

Discord extract_discord(const MatrixProfile& mp) {
  double best = -kInf;
  std::ptrdiff_t best_i = -1;
  for (std::size_t i = 0; i < mp.size(); ++i) {
    if (std::isfinite(mp.distances[i]) && mp.distances[i] > best) {
      best = mp.distances[i];
      best_i = static_cast<std::ptrdiff_t>(i);
    }
  }
  if (best_i < 0) throw Error("profile has no finite distance; no discord");
  return Discord{best_i, best};
}

MotifResult extract_motif_result(const MatrixProfile& mp) {
  MotifResult out;
  out.motif = extract_motif(mp);
  out.discord = extract_discord(mp);
  out.subsequence_len = mp.subsequence_len;
  return out;
}

std::vector<Motif> top_k_motifs(const MatrixProfile& mp, std::size_t k) {
  if (k < 1) throw ArgumentError("k must be >= 1");
  std::vector<double> work = mp.distances;
  const auto len = static_cast<std::ptrdiff_t>(work.size());
  const std::ptrdiff_t radius = mp.exclusion_radius;

  auto mask_around = [&](std::ptrdiff_t center) {
    const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, center - radius);
    const std::ptrdiff_t hi = std::min(len - 1, center + radius);
    for (std::ptrdiff_t p = lo; p <= hi; ++p)
      work[static_cast<std::size_t>(p)] = kInf;
  };

  std::vector<Motif> out;
  while (out.size() < k) {
    double best = kInf;
    std::ptrdiff_t best_i = -1;
    for (std::ptrdiff_t i = 0; i < len; ++i) {
      if (std::isfinite(work[static_cast<std::size_t>(i)]) &&
          work[static_cast<std::size_t>(i)] < best) {
        best = work[static_cast<std::size_t>(i)];
        best_i = i;
      }
    }
    if (best_i < 0) break;
    const std::ptrdiff_t partner = mp.indices[static_cast<std::size_t>(best_i)];
    out.push_back(Motif{best_i, partner, best});
    mask_around(best_i);
    // The partner index lies on the profile axis only for self-joins.
    if (mp.join_kind == JoinKind::kSelf && partner >= 0 && partner < len)
      mask_around(partner);
  }
  return out;
}

}  // namespace motifmine
