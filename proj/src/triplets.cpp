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

#include "motifmine/triplets.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <deque>
#include <map>
#include <numeric>

#include "motifmine/error.hpp"
#include "motifmine/fft.hpp"

namespace motifmine {

namespace {

double rms(const std::vector<double>& samples) {
  double acc = 0.0;
  for (double s : samples) acc += s * s;
  return std::sqrt(acc / static_cast<double>(samples.size()));
}

void clip_inplace(std::vector<double>& samples) {
  for (double& s : samples) s = std::clamp(s, -1.0, 1.0);
}

TripletRecord make_record(const WindowPair& pair, const WindowPair& distant) {
  TripletRecord r;
  r.anchor = {pair.track_id, pair.anchor_index};
  r.neighbor = {pair.track_id, pair.neighbor_index};
  r.distant = {distant.track_id, distant.anchor_index};
  r.species_anchor = pair.species;
  r.species_distant = distant.species;
  r.degenerate = (pair.anchor_index == pair.neighbor_index);
  return r;
}

}  // namespace

std::vector<WindowPair> build_pairs(const std::vector<TrackWindows>& tracks) {
  std::vector<WindowPair> out;
  for (const auto& track : tracks) {
    if (track.n_windows == 0) continue;
    if (track.frames_per_window == 0)
      throw ArgumentError("frames_per_window must be positive");
    if (track.profile_index.empty())
      throw DataError("empty profile index for track " + track.track_id);
    const std::size_t profile_len = track.profile_index.size();
    for (std::size_t i = 0; i < track.n_windows; ++i) {
      const std::size_t frame =
          std::min(i * track.frames_per_window, profile_len - 1);
      const std::ptrdiff_t neighbor_frame = track.profile_index[frame];
      if (neighbor_frame < 0 ||
          static_cast<std::size_t>(neighbor_frame) / track.frames_per_window >=
              track.n_windows)
        throw DataError("profile index out of range for track " + track.track_id);
      WindowPair p;
      p.track_id = track.track_id;
      p.species = track.species;
      p.anchor_index = i;
      p.neighbor_index =
          static_cast<std::size_t>(neighbor_frame) / track.frames_per_window;
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<TripletRecord> form_triplets(const std::vector<WindowPair>& pairs,
                                         std::uint64_t rng_seed) {
  std::map<std::string, std::vector<std::size_t>> by_track;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    by_track[pairs[i].track_id].push_back(i);
  if (by_track.size() < 2)
    throw DiversityError("triplet formation needs pairs from >= 2 tracks");

  Rng rng(rng_seed);
  std::vector<TripletRecord> out;
  out.reserve(pairs.size());
  for (const auto& pair : pairs) {
    const auto& own = by_track[pair.track_id];
    // Uniform draw over the pairs of other tracks: draw a rank, then
    // shift it past this track's (sorted) indices.
    std::size_t g = rng.uniform_index(pairs.size() - own.size());
    for (std::size_t idx : own) {
      if (idx <= g) ++g;
      else break;
    }
    out.push_back(make_record(pair, pairs[g]));
  }
  return out;
}

QueueBatchResult species_queue_batches(const std::vector<WindowPair>& pairs,
                                       std::size_t batch_size,
                                       std::uint64_t rng_seed) {
  if (batch_size < 2) throw ArgumentError("batch_size must be >= 2");
  std::map<std::string, std::deque<const WindowPair*>> queues;
  for (const auto& pair : pairs) queues[pair.species].push_back(&pair);
  if (queues.size() < 2)
    throw DiversityError("species-queue batching needs >= 2 species");

  std::vector<std::string> order;
  order.reserve(queues.size());
  for (const auto& [species, queue] : queues) order.push_back(species);

  Rng rng(rng_seed);
  QueueBatchResult result;
  std::size_t cursor = 0;
  std::size_t remaining = pairs.size();

  while (remaining > 0) {
    std::vector<const WindowPair*> batch;
    while (batch.size() < batch_size && remaining > 0) {
      auto& queue = queues[order[cursor]];
      cursor = (cursor + 1) % order.size();
      if (queue.empty()) continue;
      batch.push_back(queue.front());
      queue.pop_front();
      --remaining;
    }

    std::size_t distinct = 0;
    for (const auto& species : order)
      if (std::any_of(batch.begin(), batch.end(),
                      [&](const WindowPair* p) { return p->species == species; }))
        ++distinct;
    if (distinct < 2) {
      result.dropped_pairs += batch.size();
      continue;
    }

    std::vector<TripletRecord> triplets;
    triplets.reserve(batch.size());
    for (const WindowPair* pair : batch) {
      std::size_t others = 0;
      for (const WindowPair* q : batch)
        if (q->species != pair->species) ++others;
      std::size_t pick = rng.uniform_index(others);
      const WindowPair* distant = nullptr;
      for (const WindowPair* q : batch) {
        if (q->species == pair->species) continue;
        if (pick == 0) {
          distant = q;
          break;
        }
        --pick;
      }
      triplets.push_back(make_record(*pair, *distant));
    }
    result.batches.push_back(std::move(triplets));
  }
  return result;
}

double triplet_loss(const EmbeddingVector& anchor, const EmbeddingVector& neighbor,
                    const EmbeddingVector& distant, double margin) {
  if (anchor.size() != neighbor.size() || anchor.size() != distant.size())
    throw ShapeError("embedding dimensions differ");
  if (anchor.empty()) throw ShapeError("empty embedding");
  if (margin < 0.0) throw ArgumentError("margin must be >= 0");

  double dn = 0.0, dd = 0.0;
  for (std::size_t i = 0; i < anchor.size(); ++i) {
    const double n = anchor[i] - neighbor[i];
    const double d = anchor[i] - distant[i];
    dn += n * n;
    dd += d * d;
  }
  return std::max(0.0, std::sqrt(dn) - std::sqrt(dd) + margin);
}

AudioWindow apply_gain(const AudioWindow& win, double gain_db) {
  AudioWindow out = win;
  const double gain = std::pow(10.0, gain_db / 20.0);
  for (double& s : out.samples) s = s * gain;
  clip_inplace(out.samples);
  return out;
}

AudioWindow add_noise_snr(const AudioWindow& win, double snr_db,
                          std::uint64_t rng_seed) {
  const double signal_rms = rms(win.samples);
  if (signal_rms == 0.0) return win;

  const double noise_rms = signal_rms / std::pow(10.0, snr_db / 20.0);
  Rng rng(rng_seed);
  AudioWindow out = win;
  for (double& s : out.samples) s += noise_rms * rng.gaussian();
  clip_inplace(out.samples);
  return out;
}

AudioWindow time_shift(const AudioWindow& win, double shift_fraction) {
  if (std::abs(shift_fraction) > 1.0)
    throw ArgumentError("shift_fraction out of range");
  const auto len = static_cast<std::ptrdiff_t>(win.samples.size());
  if (len == 0) return win;
  std::ptrdiff_t shift =
      std::llround(shift_fraction * static_cast<double>(len)) % len;
  if (shift < 0) shift += len;

  AudioWindow out = win;
  for (std::ptrdiff_t i = 0; i < len; ++i)
    out.samples[static_cast<std::size_t>((i + shift) % len)] =
        win.samples[static_cast<std::size_t>(i)];
  return out;
}

AudioWindow colored_noise(const AudioWindow& win, double snr_db, double decay,
                          std::uint64_t rng_seed) {
  const double signal_rms = rms(win.samples);
  if (signal_rms == 0.0) return win;

  const std::size_t n = win.samples.size();
  const std::size_t n_fft = next_power_of_two(n);
  Rng rng(rng_seed);

  // Hermitian spectrum with amplitude ~ f^(-decay/2); inverse FFT gives
  // a real noise sequence which is truncated to the window length.
  std::vector<std::complex<double>> spectrum(n_fft);
  for (std::size_t k = 1; k <= n_fft / 2; ++k) {
    const double scale = std::pow(static_cast<double>(k), -decay / 2.0);
    const double re = rng.gaussian() * scale;
    const double im = (k == n_fft / 2) ? 0.0 : rng.gaussian() * scale;
    spectrum[k] = {re, im};
    if (k != n_fft / 2) spectrum[n_fft - k] = std::conj(spectrum[k]);
  }
  fft_inplace(spectrum, true);

  std::vector<double> noise(n);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    noise[i] = spectrum[i].real();
    acc += noise[i] * noise[i];
  }
  const double noise_rms = std::sqrt(acc / static_cast<double>(n));
  if (noise_rms == 0.0) return win;

  const double target_rms = signal_rms / std::pow(10.0, snr_db / 20.0);
  const double gain = target_rms / noise_rms;

  AudioWindow out = win;
  for (std::size_t i = 0; i < n; ++i) out.samples[i] += gain * noise[i];
  clip_inplace(out.samples);
  return out;
}

AudioWindow augment_window(const AudioWindow& win, const AugmentRanges& ranges,
                           Rng& rng) {
  AudioWindow out =
      apply_gain(win, rng.uniform_range(ranges.gain_db_min, ranges.gain_db_max));
  out = add_noise_snr(out,
                      rng.uniform_range(ranges.noise_snr_db_min, ranges.noise_snr_db_max),
                      rng.next_u64());
  out = time_shift(out, rng.uniform_range(-ranges.shift_fraction_max,
                                          ranges.shift_fraction_max));
  out = colored_noise(
      out, rng.uniform_range(ranges.colored_snr_db_min, ranges.colored_snr_db_max),
      rng.uniform_range(ranges.colored_decay_min, ranges.colored_decay_max),
      rng.next_u64());
  return out;
}

}  // namespace motifmine
