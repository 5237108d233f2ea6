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

#include "motifmine/features.hpp"

#include <algorithm>
#include <cmath>

#include "motifmine/error.hpp"
#include "motifmine/fft.hpp"

namespace motifmine {

namespace {

constexpr double kDbFloor = 1e-10;
constexpr double kDbRange = 80.0;
constexpr int kCensFftSize = 4096;
constexpr int kCensHop = 512;
constexpr int kCensSmoothLen = 41;
constexpr double kCensMinFreqHz = 65.0;
constexpr int kChromaBins = 12;

// Reflect indexing without edge repetition, bouncing for pads longer
// than the signal. A length-1 signal degenerates to a constant pad.
std::size_t reflect_index(std::ptrdiff_t i, std::size_t len) {
  if (len == 1) return 0;
  const auto period = static_cast<std::ptrdiff_t>(2 * len - 2);
  std::ptrdiff_t m = i % period;
  if (m < 0) m += period;
  if (m >= static_cast<std::ptrdiff_t>(len)) m = period - m;
  return static_cast<std::size_t>(m);
}

// Periodic Hann, the analysis window convention for centered STFTs.
std::vector<double> hann_periodic(int n) {
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i)
    w[i] = 0.5 - 0.5 * std::cos(2.0 * M_PI * i / n);
  return w;
}

// Symmetric Hann with zero endpoints, used for temporal smoothing.
std::vector<double> hann_symmetric(int n) {
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i)
    w[i] = 0.5 - 0.5 * std::cos(2.0 * M_PI * i / (n - 1));
  return w;
}

void db_scale_inplace(Matrix& power) {
  double peak = -std::numeric_limits<double>::infinity();
  for (double& v : power.data()) {
    v = 10.0 * std::log10(std::max(v, kDbFloor));
    peak = std::max(peak, v);
  }
  const double floor_db = peak - kDbRange;
  for (double& v : power.data()) v = std::max(v, floor_db);
}

Matrix mel_power(const AudioBuffer& buf, int n_fft, int hop, int n_mels,
                 int sample_rate) {
  const Spectrogram stft = stft_magnitude(buf, n_fft, hop);
  const Matrix fb = mel_filterbank(n_mels, n_fft, sample_rate);

  // Nonzero column range per filter keeps the projection banded.
  std::vector<std::pair<std::size_t, std::size_t>> span(n_mels);
  for (int m = 0; m < n_mels; ++m) {
    std::size_t lo = fb.cols(), hi = 0;
    for (std::size_t k = 0; k < fb.cols(); ++k) {
      if (fb(m, k) > 0.0) {
        lo = std::min(lo, k);
        hi = std::max(hi, k + 1);
      }
    }
    span[m] = {std::min(lo, hi), hi};
  }

  Matrix out(static_cast<std::size_t>(n_mels), stft.frames());
  for (std::size_t t = 0; t < stft.frames(); ++t) {
    for (int m = 0; m < n_mels; ++m) {
      double acc = 0.0;
      for (std::size_t k = span[m].first; k < span[m].second; ++k) {
        const double mag = stft.data(k, t);
        acc += fb(m, k) * mag * mag;
      }
      out(m, t) = acc;
    }
  }
  return out;
}

}  // namespace

std::string to_string(SpectrogramKind kind) {
  switch (kind) {
    case SpectrogramKind::kLinear: return "linear";
    case SpectrogramKind::kMel: return "mel";
    case SpectrogramKind::kCens: return "cens";
  }
  return "unknown";
}

SpectrogramKind spectrogram_kind_from_string(const std::string& s) {
  if (s == "linear") return SpectrogramKind::kLinear;
  if (s == "mel") return SpectrogramKind::kMel;
  if (s == "cens") return SpectrogramKind::kCens;
  throw ArgumentError("unknown spectrogram kind: " + s);
}

double hz_to_mel(double hz) {
  constexpr double lin_scale = 200.0 / 3.0;
  constexpr double min_log_hz = 1000.0;
  constexpr double min_log_mel = min_log_hz / lin_scale;
  const double log_step = std::log(6.4) / 27.0;
  if (hz < min_log_hz) return hz / lin_scale;
  return min_log_mel + std::log(hz / min_log_hz) / log_step;
}

double mel_to_hz(double mel) {
  constexpr double lin_scale = 200.0 / 3.0;
  constexpr double min_log_hz = 1000.0;
  constexpr double min_log_mel = min_log_hz / lin_scale;
  const double log_step = std::log(6.4) / 27.0;
  if (mel < min_log_mel) return mel * lin_scale;
  return min_log_hz * std::exp((mel - min_log_mel) * log_step);
}

Matrix mel_filterbank(int n_mels, int n_fft, int sample_rate) {
  if (n_mels < 1) throw ArgumentError("n_mels must be >= 1");
  const int n_bins = n_fft / 2 + 1;
  const double mel_max = hz_to_mel(sample_rate / 2.0);

  std::vector<double> mel_f(n_mels + 2);
  for (int i = 0; i < n_mels + 2; ++i)
    mel_f[i] = mel_to_hz(mel_max * i / (n_mels + 1));

  Matrix fb(static_cast<std::size_t>(n_mels), static_cast<std::size_t>(n_bins));
  for (int m = 0; m < n_mels; ++m) {
    const double lo = mel_f[m], mid = mel_f[m + 1], hi = mel_f[m + 2];
    const double enorm = 2.0 / (hi - lo);
    for (int k = 0; k < n_bins; ++k) {
      const double f = static_cast<double>(k) * sample_rate / n_fft;
      const double rising = (f - lo) / (mid - lo);
      const double falling = (hi - f) / (hi - mid);
      fb(m, k) = std::max(0.0, std::min(rising, falling)) * enorm;
    }
  }
  return fb;
}

Spectrogram stft_magnitude(const AudioBuffer& buf, int n_fft, int hop) {
  if (buf.samples.empty()) throw EmptyInputError("stft of empty buffer");
  if (hop < 1) throw ArgumentError("hop must be >= 1");
  if (n_fft < hop) throw ArgumentError("n_fft must be >= hop");
  if (!is_power_of_two(static_cast<std::size_t>(n_fft)))
    throw ArgumentError("n_fft must be a power of two");

  const std::size_t len = buf.samples.size();
  const int pad = n_fft / 2;
  const std::size_t n_frames = 1 + len / hop;
  const std::size_t n_bins = static_cast<std::size_t>(n_fft) / 2 + 1;
  const std::vector<double> window = hann_periodic(n_fft);

  Spectrogram out;
  out.kind = SpectrogramKind::kLinear;
  out.frame_rate = static_cast<double>(buf.sample_rate) / hop;
  out.params.n_fft = n_fft;
  out.params.hop = hop;
  out.params.sample_rate = buf.sample_rate;
  out.data = Matrix(n_bins, n_frames);

  std::vector<double> frame(n_fft);
  for (std::size_t t = 0; t < n_frames; ++t) {
    const auto start = static_cast<std::ptrdiff_t>(t) * hop - pad;
    for (int i = 0; i < n_fft; ++i) {
      const std::ptrdiff_t src = start + i;
      const double s = (src >= 0 && src < static_cast<std::ptrdiff_t>(len))
                           ? buf.samples[static_cast<std::size_t>(src)]
                           : buf.samples[reflect_index(src, len)];
      frame[i] = s * window[i];
    }
    const auto spectrum = rfft(frame);
    for (std::size_t k = 0; k < n_bins; ++k)
      out.data(k, t) = std::abs(spectrum[k]);
  }
  return out;
}

Spectrogram mel_spectrogram(const AudioBuffer& buf, const SpectrogramParams& params) {
  Matrix power = mel_power(buf, params.n_fft, params.hop, params.n_mels,
                           buf.sample_rate);
  db_scale_inplace(power);

  Spectrogram out;
  out.kind = SpectrogramKind::kMel;
  out.frame_rate = static_cast<double>(buf.sample_rate) / params.hop;
  out.params = params;
  out.params.sample_rate = buf.sample_rate;
  out.data = std::move(power);
  return out;
}

Spectrogram cens_chromagram(const AudioBuffer& buf, int target_fps) {
  if (target_fps < 1) throw ArgumentError("target_fps must be >= 1");
  if (buf.samples.size() < kCensFftSize)
    throw EmptyInputError("buffer shorter than one FFT window");

  const Spectrogram stft = stft_magnitude(buf, kCensFftSize, kCensHop);
  const std::size_t n_frames = stft.frames();

  // Energy folding: FFT bin -> nearest equal-tempered pitch class, C = 0.
  std::vector<int> bin_chroma(stft.bins(), -1);
  for (std::size_t k = 1; k < stft.bins(); ++k) {
    const double f = static_cast<double>(k) * buf.sample_rate / kCensFftSize;
    if (f < kCensMinFreqHz) continue;
    const double midi = 69.0 + 12.0 * std::log2(f / 440.0);
    const long pitch = std::lround(midi);
    bin_chroma[k] = static_cast<int>(((pitch % 12) + 12) % 12);
  }

  Matrix chroma(kChromaBins, n_frames);
  for (std::size_t t = 0; t < n_frames; ++t) {
    for (std::size_t k = 1; k < stft.bins(); ++k) {
      if (bin_chroma[k] < 0) continue;
      const double mag = stft.data(k, t);
      chroma(static_cast<std::size_t>(bin_chroma[k]), t) += mag * mag;
    }
  }

  // L1 normalization, then threshold quantization in steps of 0.25.
  constexpr double kThresholds[4] = {0.05, 0.1, 0.2, 0.4};
  for (std::size_t t = 0; t < n_frames; ++t) {
    double l1 = 0.0;
    for (int c = 0; c < kChromaBins; ++c) l1 += chroma(c, t);
    for (int c = 0; c < kChromaBins; ++c) {
      const double v = (l1 > 0.0) ? chroma(c, t) / l1 : 0.0;
      double q = 0.0;
      for (double threshold : kThresholds)
        if (v > threshold) q += 0.25;
      chroma(c, t) = q;
    }
  }

  // Temporal smoothing along each chroma row, zero-padded at the edges.
  const std::vector<double> smooth = hann_symmetric(kCensSmoothLen);
  const int half = kCensSmoothLen / 2;
  Matrix smoothed(kChromaBins, n_frames);
  for (int c = 0; c < kChromaBins; ++c) {
    for (std::size_t t = 0; t < n_frames; ++t) {
      double acc = 0.0;
      for (int i = 0; i < kCensSmoothLen; ++i) {
        const std::ptrdiff_t src = static_cast<std::ptrdiff_t>(t) + i - half;
        if (src < 0 || src >= static_cast<std::ptrdiff_t>(n_frames)) continue;
        acc += smooth[i] * chroma(c, static_cast<std::size_t>(src));
      }
      smoothed(c, t) = acc;
    }
  }

  // Pick the nearest source frame on the exact target_fps grid.
  const double step = stft.frame_rate / target_fps;
  std::vector<std::size_t> picks;
  for (std::size_t k = 0;; ++k) {
    const auto idx = static_cast<std::size_t>(std::llround(k * step));
    if (idx >= n_frames) break;
    picks.push_back(idx);
  }

  Spectrogram out;
  out.kind = SpectrogramKind::kCens;
  out.frame_rate = target_fps;
  out.params.n_fft = kCensFftSize;
  out.params.hop = kCensHop;
  out.params.target_fps = target_fps;
  out.params.sample_rate = buf.sample_rate;
  out.data = Matrix(kChromaBins, picks.size());
  for (std::size_t t = 0; t < picks.size(); ++t) {
    double norm2 = 0.0;
    for (int c = 0; c < kChromaBins; ++c) {
      const double v = smoothed(c, picks[t]);
      norm2 += v * v;
    }
    if (norm2 > 0.0) {
      const double inv = 1.0 / std::sqrt(norm2);
      for (int c = 0; c < kChromaBins; ++c)
        out.data(c, t) = smoothed(c, picks[t]) * inv;
    }
  }
  return out;
}

Matrix embedding_frame(const AudioWindow& win) {
  constexpr int kSide = 128;
  constexpr int kFft = 4096;
  if (win.samples.size() < kSide)
    throw EmptyInputError("window too short for an embedding frame");

  const int hop = static_cast<int>(win.samples.size()) / kSide;
  AudioBuffer tmp;
  tmp.samples = win.samples;
  tmp.sample_rate = win.sample_rate;
  tmp.track_id = win.parent_track_id;

  Matrix power = mel_power(tmp, kFft, hop, kSide, win.sample_rate);
  db_scale_inplace(power);

  // Force the time axis to exactly 128 frames; the floor-division hop
  // usually yields one extra frame.
  Matrix out(kSide, kSide);
  double floor_db = power.data()[0];
  for (double v : power.data()) floor_db = std::min(floor_db, v);
  for (int m = 0; m < kSide; ++m)
    for (int t = 0; t < kSide; ++t)
      out(m, t) = (t < static_cast<int>(power.cols())) ? power(m, t) : floor_db;
  return out;
}

}  // namespace motifmine
