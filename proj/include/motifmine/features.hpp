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
// STFT-based feature extraction: linear magnitude spectrograms, dB-scaled
// Mel spectrograms (Slaney filterbank), CENS chromagrams, and the fixed
// 128x128 Mel frame used as model input.

#ifndef MOTIFMINE_FEATURES_HPP_
#define MOTIFMINE_FEATURES_HPP_

#include <string>

#include "motifmine/audio_io.hpp"
#include "motifmine/matrix.hpp"

namespace motifmine {

enum class SpectrogramKind { kLinear, kMel, kCens };
enum class WindowFn { kHann };

struct SpectrogramParams {
  int n_fft = 2048;
  int hop = 80;
  int n_mels = 16;      // mel only
  int target_fps = 10;  // cens only
  int sample_rate = 22050;
  WindowFn window_fn = WindowFn::kHann;
};

// 2-D feature matrix, shape (bins, frames), with frame-rate metadata.
struct Spectrogram {
  Matrix data;
  double frame_rate = 0.0;  // frames per second
  SpectrogramKind kind = SpectrogramKind::kLinear;
  SpectrogramParams params;

  std::size_t bins() const { return data.rows(); }
  std::size_t frames() const { return data.cols(); }
};

std::string to_string(SpectrogramKind kind);
SpectrogramKind spectrogram_kind_from_string(const std::string& s);

// Centered STFT magnitude: the input is reflect-padded by n_fft/2 on each
// side, so frames = 1 + floor(len / hop) and bins = n_fft/2 + 1. n_fft
// must be a power of two (FFT plan constraint).
Spectrogram stft_magnitude(const AudioBuffer& buf, int n_fft, int hop);

// Power spectrogram through a Slaney-normalized triangular Mel filterbank
// (0 Hz .. sample_rate/2), then 10*log10(max(x, 1e-10)) clamped to an
// 80 dB range below the peak.
Spectrogram mel_spectrogram(const AudioBuffer& buf, const SpectrogramParams& params);

// 12-row CENS chromagram at exactly target_fps frames per second.
// Pipeline: STFT magnitude (n_fft 4096, hop 512) -> energy folding onto
// pitch classes (A440 reference, bins below 65 Hz discarded, row 0 = C)
// -> per-frame L1 normalization -> quantization at (0.05, 0.1, 0.2, 0.4]
// in steps of 0.25 -> 41-frame Hann smoothing -> downsampling ->
// per-frame L2 normalization (silent frames stay zero).
Spectrogram cens_chromagram(const AudioBuffer& buf, int target_fps);

// Mel frame for the embedding model: n_fft 4096, 128 Mel bands, hop
// floor(len/128); the time axis is truncated or zero-padded to exactly
// 128 frames, dB-scaled as in mel_spectrogram.
Matrix embedding_frame(const AudioWindow& win);

// Triangular Slaney-scale filterbank, shape (n_mels, n_fft/2 + 1).
// Exposed for oracle tests.
Matrix mel_filterbank(int n_mels, int n_fft, int sample_rate);

double hz_to_mel(double hz);
double mel_to_hz(double mel);

}  // namespace motifmine

#endif  // MOTIFMINE_FEATURES_HPP_
