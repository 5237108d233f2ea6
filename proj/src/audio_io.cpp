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

#include "motifmine/audio_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>

#include "motifmine/error.hpp"

namespace motifmine {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xfffe;

struct WavHeader {
  std::uint16_t format = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t bits_per_sample = 0;
  std::size_t data_offset = 0;
  std::size_t data_size = 0;
};

std::uint32_t read_u32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open: " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                                  std::istreambuf_iterator<char>());
  return bytes;
}

// Walks the RIFF chunk list and extracts `fmt ` and `data`. Any other
// chunk is skipped, honoring the 2-byte chunk alignment rule.
WavHeader parse_wav(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0)
    throw FormatError("not a RIFF/WAVE file");

  WavHeader h;
  bool have_fmt = false, have_data = false;
  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const std::uint8_t* p = bytes.data() + pos;
    const std::uint32_t chunk_size = read_u32(p + 4);
    const std::size_t body = pos + 8;
    if (std::memcmp(p, "fmt ", 4) == 0) {
      if (body + 16 > bytes.size()) throw FormatError("fmt chunk truncated");
      h.format = read_u16(bytes.data() + body);
      h.channels = read_u16(bytes.data() + body + 2);
      h.sample_rate = read_u32(bytes.data() + body + 4);
      h.bits_per_sample = read_u16(bytes.data() + body + 14);
      if (h.format == kFormatExtensible) {
        // Sub-format GUID starts with the effective format code.
        if (body + 26 > bytes.size()) throw FormatError("fmt extension truncated");
        h.format = read_u16(bytes.data() + body + 24);
      }
      have_fmt = true;
    } else if (std::memcmp(p, "data", 4) == 0) {
      if (body + chunk_size > bytes.size()) throw FormatError("data chunk truncated");
      h.data_offset = body;
      h.data_size = chunk_size;
      have_data = true;
    }
    pos = body + chunk_size + (chunk_size & 1);
  }
  if (!have_fmt || !have_data) throw FormatError("missing fmt or data chunk");
  if (h.channels == 0 || h.sample_rate == 0) throw FormatError("bad fmt chunk");
  return h;
}

int bytes_per_sample(const WavHeader& h) {
  if (h.format == kFormatPcm && h.bits_per_sample == 16) return 2;
  if (h.format == kFormatPcm && h.bits_per_sample == 24) return 3;
  if (h.format == kFormatFloat && h.bits_per_sample == 32) return 4;
  throw UnsupportedError("unsupported WAV encoding: format=" +
                         std::to_string(h.format) + " bits=" +
                         std::to_string(h.bits_per_sample));
}

double decode_sample(const std::uint8_t* p, const WavHeader& h) {
  if (h.format == kFormatFloat) {
    float f;
    std::memcpy(&f, p, 4);
    return f;
  }
  if (h.bits_per_sample == 16) {
    const auto v = static_cast<std::int16_t>(p[0] | (p[1] << 8));
    return static_cast<double>(v) / 32768.0;
  }
  // 24-bit: sign-extend the top byte.
  std::int32_t v = p[0] | (p[1] << 8) | (p[2] << 16);
  if (v & 0x800000) v |= ~0xffffff;
  return static_cast<double>(v) / 8388608.0;
}

}  // namespace

WavInfo wav_info(const std::string& path) {
  const auto bytes = read_file(path);
  const WavHeader h = parse_wav(bytes);
  const int bps = bytes_per_sample(h);
  WavInfo info;
  info.sample_rate = static_cast<int>(h.sample_rate);
  info.channels = h.channels;
  info.bits_per_sample = h.bits_per_sample;
  info.is_float = (h.format == kFormatFloat);
  info.frames = h.data_size / (static_cast<std::size_t>(bps) * h.channels);
  return info;
}

AudioBuffer load_wav(const std::string& path, NonFinitePolicy policy) {
  const auto bytes = read_file(path);
  const WavHeader h = parse_wav(bytes);
  const int bps = bytes_per_sample(h);
  const std::size_t stride = static_cast<std::size_t>(bps) * h.channels;
  const std::size_t frames = h.data_size / stride;
  if (frames == 0) throw EmptyInputError("WAV has no sample data: " + path);

  AudioBuffer buf;
  buf.sample_rate = static_cast<int>(h.sample_rate);
  buf.track_id = std::filesystem::path(path).stem().string();
  buf.samples.resize(frames);

  const std::uint8_t* p = bytes.data() + h.data_offset;
  const double inv_channels = 1.0 / h.channels;
  for (std::size_t i = 0; i < frames; ++i, p += stride) {
    double acc = 0.0;
    for (int c = 0; c < h.channels; ++c) acc += decode_sample(p + c * bps, h);
    double v = acc * inv_channels;
    if (!std::isfinite(v)) {
      if (policy == NonFinitePolicy::kReject)
        throw FormatError("non-finite sample at frame " + std::to_string(i) +
                          " in " + path);
      v = 0.0;
    }
    buf.samples[i] = std::clamp(v, -1.0, 1.0);
  }
  return buf;
}

void write_wav(const std::string& path, const AudioBuffer& buf, WavEncoding encoding) {
  if (buf.samples.empty()) throw EmptyInputError("refusing to write empty WAV");
  if (buf.sample_rate <= 0) throw ArgumentError("sample_rate must be positive");

  const int bps = encoding == WavEncoding::kPcm16 ? 2
                  : encoding == WavEncoding::kPcm24 ? 3 : 4;
  const std::uint32_t data_size = static_cast<std::uint32_t>(buf.samples.size() * bps);

  std::vector<std::uint8_t> out;
  out.reserve(44 + data_size);
  auto push_u16 = [&](std::uint16_t v) {
    out.push_back(v & 0xff);
    out.push_back(v >> 8);
  };
  auto push_u32 = [&](std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back((v >> (8 * i)) & 0xff);
  };
  auto push_tag = [&](const char* t) { out.insert(out.end(), t, t + 4); };

  push_tag("RIFF");
  push_u32(36 + data_size);
  push_tag("WAVE");
  push_tag("fmt ");
  push_u32(16);
  push_u16(encoding == WavEncoding::kFloat32 ? kFormatFloat : kFormatPcm);
  push_u16(1);  // mono
  push_u32(static_cast<std::uint32_t>(buf.sample_rate));
  push_u32(static_cast<std::uint32_t>(buf.sample_rate) * bps);
  push_u16(static_cast<std::uint16_t>(bps));
  push_u16(static_cast<std::uint16_t>(bps * 8));
  push_tag("data");
  push_u32(data_size);

  for (double s : buf.samples) {
    const double c = std::clamp(s, -1.0, 1.0);
    switch (encoding) {
      case WavEncoding::kPcm16: {
        auto q = static_cast<std::int32_t>(std::llround(c * 32768.0));
        q = std::clamp(q, -32768, 32767);
        push_u16(static_cast<std::uint16_t>(static_cast<std::int16_t>(q)));
        break;
      }
      case WavEncoding::kPcm24: {
        auto q = static_cast<std::int32_t>(std::llround(c * 8388608.0));
        q = std::clamp(q, -8388608, 8388607);
        out.push_back(q & 0xff);
        out.push_back((q >> 8) & 0xff);
        out.push_back((q >> 16) & 0xff);
        break;
      }
      case WavEncoding::kFloat32: {
        float f = static_cast<float>(c);
        std::uint32_t u;
        std::memcpy(&u, &f, 4);
        push_u32(u);
        break;
      }
    }
  }

  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open for writing: " + path);
  f.write(reinterpret_cast<const char*>(out.data()),
          static_cast<std::streamsize>(out.size()));
  if (!f) throw IoError("short write: " + path);
}

AudioBuffer resample(const AudioBuffer& buf, int target_rate, int taps) {
  if (target_rate <= 0) throw ArgumentError("target_rate must be positive");
  if (taps < 2) throw ArgumentError("taps must be >= 2");
  if (target_rate == buf.sample_rate) return buf;
  if (buf.samples.empty()) throw EmptyInputError("cannot resample empty buffer");

  const double ratio = static_cast<double>(target_rate) / buf.sample_rate;
  const double cutoff = std::min(1.0, ratio);  // fraction of source Nyquist
  const double half_width = (taps / 2) / cutoff;
  const auto n_in = static_cast<std::ptrdiff_t>(buf.samples.size());
  const auto n_out = static_cast<std::size_t>(
      std::llround(static_cast<double>(buf.samples.size()) * ratio));

  AudioBuffer out;
  out.sample_rate = target_rate;
  out.track_id = buf.track_id;
  out.samples.resize(n_out);

  for (std::size_t j = 0; j < n_out; ++j) {
    const double center = static_cast<double>(j) / ratio;
    const auto k0 = static_cast<std::ptrdiff_t>(std::ceil(center - half_width));
    const auto k1 = static_cast<std::ptrdiff_t>(std::floor(center + half_width));
    double acc = 0.0;
    for (std::ptrdiff_t k = std::max<std::ptrdiff_t>(0, k0);
         k <= std::min(n_in - 1, k1); ++k) {
      const double t = (static_cast<double>(k) - center) * cutoff;
      double sinc = 1.0;
      if (t != 0.0) sinc = std::sin(M_PI * t) / (M_PI * t);
      const double u = (static_cast<double>(k) - center) / half_width;
      const double window = 0.5 + 0.5 * std::cos(M_PI * u);
      acc += buf.samples[static_cast<std::size_t>(k)] * sinc * window;
    }
    out.samples[j] = std::clamp(acc * cutoff, -1.0, 1.0);
  }
  return out;
}

std::vector<AudioWindow> window_track(const AudioBuffer& buf, double window_seconds) {
  if (window_seconds <= 0.0) throw ArgumentError("window_seconds must be positive");
  if (buf.samples.empty()) throw EmptyInputError("cannot window empty buffer");

  const auto window_len =
      static_cast<std::size_t>(std::llround(window_seconds * buf.sample_rate));
  if (window_len == 0) throw ArgumentError("window shorter than one sample");
  const std::size_t n_windows = (buf.samples.size() + window_len - 1) / window_len;

  std::vector<AudioWindow> out;
  out.reserve(n_windows);
  for (std::size_t i = 0; i < n_windows; ++i) {
    AudioWindow w;
    w.parent_track_id = buf.track_id;
    w.window_index = i;
    w.start_time_s = static_cast<double>(i) * window_seconds;
    w.sample_rate = buf.sample_rate;
    w.samples.assign(window_len, 0.0);
    const std::size_t begin = i * window_len;
    const std::size_t end = std::min(begin + window_len, buf.samples.size());
    std::copy(buf.samples.begin() + static_cast<std::ptrdiff_t>(begin),
              buf.samples.begin() + static_cast<std::ptrdiff_t>(end),
              w.samples.begin());
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace motifmine
