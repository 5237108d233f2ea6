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
// WAV decoding, resampling, and windowing into analysis-ready mono buffers.
//
// The reader handles RIFF/WAVE with PCM 16-bit, PCM 24-bit, and IEEE
// float 32-bit data, mono or multichannel. Multichannel input is
// downmixed to mono by the arithmetic mean of the channels. Integer
// samples are scaled to [-1, 1] by the type's maximum magnitude (32768
// for 16-bit, 2^23 for 24-bit).

#ifndef MOTIFMINE_AUDIO_IO_HPP_
#define MOTIFMINE_AUDIO_IO_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace motifmine {

// Decoded mono waveform. Immutable by convention once loaded; all
// operations below return new buffers.
struct AudioBuffer {
  std::vector<double> samples;  // amplitudes in [-1, 1], all finite
  int sample_rate = 0;          // Hz, > 0
  std::string track_id;

  double duration_s() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }
};

// One fixed-length analysis window cut from a track. The final window of
// a track is zero-padded to full length.
struct AudioWindow {
  std::string parent_track_id;
  std::size_t window_index = 0;
  std::vector<double> samples;  // exactly round(window_seconds * rate) long
  double start_time_s = 0.0;
  int sample_rate = 0;
};

// What to do with NaN/Inf samples found in a float WAV.
enum class NonFinitePolicy { kReject, kZero };

struct WavInfo {
  int sample_rate = 0;
  int channels = 0;
  int bits_per_sample = 0;
  bool is_float = false;
  std::uint64_t frames = 0;  // samples per channel

  double duration_s() const {
    return static_cast<double>(frames) / sample_rate;
  }
};

// Parses the header only; no sample data is decoded.
WavInfo wav_info(const std::string& path);

AudioBuffer load_wav(const std::string& path,
                     NonFinitePolicy policy = NonFinitePolicy::kReject);

enum class WavEncoding { kPcm16, kPcm24, kFloat32 };

// Mono writer used for dataset synthesis and round-trip tests. Samples
// are clipped to [-1, 1] before integer quantization.
void write_wav(const std::string& path, const AudioBuffer& buf,
               WavEncoding encoding = WavEncoding::kPcm16);

// Band-limited resampling with a Hann-windowed sinc kernel. `taps` is
// the total zero-crossing span of the kernel at unity rate; when
// downsampling the kernel widens by the rate ratio to keep the
// anti-alias cutoff at the target Nyquist. Same-rate calls pass through.
AudioBuffer resample(const AudioBuffer& buf, int target_rate, int taps = 64);

// Non-overlapping windows ordered by start time; the tail window is
// zero-padded to full length.
std::vector<AudioWindow> window_track(const AudioBuffer& buf, double window_seconds);

}  // namespace motifmine

#endif  // MOTIFMINE_AUDIO_IO_HPP_
