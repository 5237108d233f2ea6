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
// Triplet dataset construction from precomputed profile indices: window
// pair building, species-queue mini-batching, triplet formation, the
// triplet hinge loss, and seeded waveform augmentations. Every
// randomized operation is a pure function of (inputs, seed).

#ifndef MOTIFMINE_TRIPLETS_HPP_
#define MOTIFMINE_TRIPLETS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "motifmine/audio_io.hpp"
#include "motifmine/rng.hpp"

namespace motifmine {

// Per-track input for pair building: the frame-level profile index plus
// the window geometry needed to reduce it to window granularity.
struct TrackWindows {
  std::string track_id;
  std::string species;
  std::size_t n_windows = 0;
  std::size_t frames_per_window = 0;
  std::vector<std::ptrdiff_t> profile_index;  // frame-level neighbor starts
};

// (anchor, nearest-neighbor) window pair within one track.
struct WindowPair {
  std::string track_id;
  std::size_t anchor_index = 0;
  std::size_t neighbor_index = 0;
  std::string species;
};

struct WindowRef {
  std::string track_id;
  std::size_t window_index = 0;
};

struct TripletRecord {
  WindowRef anchor;
  WindowRef neighbor;  // same track as anchor
  WindowRef distant;   // different track
  std::string species_anchor;
  std::string species_distant;
  bool degenerate = false;  // neighbor collapsed onto the anchor window
};

using EmbeddingVector = std::vector<double>;

// One pair per window: the window's nearest neighbor is the window
// containing the frame its profile index points at (frame start divided
// by frames_per_window). Window i is looked up at its start frame,
// clamped to the profile tail. Deterministic order: input track order,
// then window index.
std::vector<WindowPair> build_pairs(const std::vector<TrackWindows>& tracks);

// Exactly one triplet per pair; the distant element is a uniformly drawn
// (seeded) anchor from a pair of a different track.
std::vector<TripletRecord> form_triplets(const std::vector<WindowPair>& pairs,
                                         std::uint64_t rng_seed);

struct QueueBatchResult {
  std::vector<std::vector<TripletRecord>> batches;
  std::size_t dropped_pairs = 0;  // pairs in batches with < 2 species
};

// Species-queue mini-batching: one FIFO queue per species, filled in
// input order; batches are assembled by round-robin pops across
// non-empty queues (rotation carries across batches). Within a batch the
// distant element is drawn from a member of a different species. Batches
// left with a single species are dropped; a final partial batch is
// emitted when it still spans >= 2 species.
QueueBatchResult species_queue_batches(const std::vector<WindowPair>& pairs,
                                       std::size_t batch_size,
                                       std::uint64_t rng_seed);

// max(0, ||a - n|| - ||a - d|| + margin)
double triplet_loss(const EmbeddingVector& anchor, const EmbeddingVector& neighbor,
                    const EmbeddingVector& distant, double margin);

// --- Waveform augmentations (length-preserving, hard-clipped to [-1, 1]).

AudioWindow apply_gain(const AudioWindow& win, double gain_db);

// White Gaussian noise scaled to the requested signal-to-noise ratio.
// Silent windows are returned unchanged.
AudioWindow add_noise_snr(const AudioWindow& win, double snr_db,
                          std::uint64_t rng_seed);

// Circular shift by round(shift_fraction * len) samples.
AudioWindow time_shift(const AudioWindow& win, double shift_fraction);

// Noise with power spectral density proportional to f^(-decay) (DC bin
// zeroed), scaled to snr_db and added. Silent windows unchanged.
AudioWindow colored_noise(const AudioWindow& win, double snr_db, double decay,
                          std::uint64_t rng_seed);

// Parameter ranges for the randomized augmentation chain applied to
// anchor/neighbor windows before export.
struct AugmentRanges {
  double gain_db_min = -20.0, gain_db_max = 20.0;
  double noise_snr_db_min = -5.0, noise_snr_db_max = 40.0;
  double shift_fraction_max = 0.1;
  double colored_snr_db_min = -3.0, colored_snr_db_max = 30.0;
  double colored_decay_min = -2.0, colored_decay_max = 2.0;
};

// Gain, white noise, circular time shift, and colored noise with
// parameters drawn uniformly from `ranges`.
AudioWindow augment_window(const AudioWindow& win, const AugmentRanges& ranges,
                           Rng& rng);

}  // namespace motifmine

#endif  // MOTIFMINE_TRIPLETS_HPP_
