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

#include "motifmine/simple_mp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "motifmine/error.hpp"
#include "motifmine/fft.hpp"

namespace motifmine {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Rows are recomputed from an FFT seed at fixed block boundaries so the
// numeric path of every row is independent of the worker count.
constexpr std::size_t kRowBlock = 1024;

// d^2 below this relative floor is cancellation noise; snap it to zero
// so exact repeats report distance 0.
constexpr double kCancelRel = 1e-12;

struct JoinInput {
  std::size_t bins = 0;
  std::size_t n_a = 0, n_b = 0;   // frame counts
  std::size_t len_a = 0, len_b = 0;  // profile lengths
  std::vector<double> frames_a;   // frame-major (frame * bins + bin)
  std::vector<double> frames_b;
  std::vector<double> norm_a;     // subsequence squared norms
  std::vector<double> norm_b;
  const Matrix* rows_a = nullptr;  // original bin-major data, for FFT seeds
  const Matrix* rows_b = nullptr;
  std::size_t m = 0;
};

void check_finite(const Matrix& data) {
  for (double v : data.data())
    if (!std::isfinite(v)) throw DataError("non-finite value in spectrogram");
}

std::vector<double> to_frame_major(const Matrix& data) {
  std::vector<double> out(data.rows() * data.cols());
  for (std::size_t b = 0; b < data.rows(); ++b)
    for (std::size_t t = 0; t < data.cols(); ++t)
      out[t * data.rows() + b] = data(b, t);
  return out;
}

std::vector<double> subsequence_norms(const std::vector<double>& frames,
                                      std::size_t n, std::size_t bins,
                                      std::size_t m) {
  std::vector<double> frame_sq(n);
  for (std::size_t t = 0; t < n; ++t) {
    double acc = 0.0;
    for (std::size_t b = 0; b < bins; ++b) {
      const double v = frames[t * bins + b];
      acc += v * v;
    }
    frame_sq[t] = acc;
  }
  std::vector<double> out(n - m + 1);
  for (std::size_t i = 0; i + m <= n; ++i) {
    double acc = 0.0;
    for (std::size_t t = 0; t < m; ++t) acc += frame_sq[i + t];
    out[i] = acc;
  }
  return out;
}

// QT(start, j) for all j: sliding dot products of the query subsequence
// beginning at `start` against the whole reference, summed over bins.
std::vector<double> seed_row(const JoinInput& in, std::size_t start) {
  std::vector<double> qt(in.len_b, 0.0);
  std::vector<double> sub(in.m);
  std::vector<double> full(in.n_b);
  for (std::size_t b = 0; b < in.bins; ++b) {
    for (std::size_t t = 0; t < in.m; ++t) sub[t] = (*in.rows_a)(b, start + t);
    for (std::size_t t = 0; t < in.n_b; ++t) full[t] = (*in.rows_b)(b, t);
    const auto corr = fft_cross_correlate(full, sub);
    for (std::size_t j = 0; j < in.len_b; ++j) qt[j] += corr[j];
  }
  return qt;
}

// QT(i, 0) for all i: the reference's first subsequence slid along the query.
std::vector<double> seed_col(const JoinInput& in) {
  std::vector<double> qt(in.len_a, 0.0);
  std::vector<double> sub(in.m);
  std::vector<double> full(in.n_a);
  for (std::size_t b = 0; b < in.bins; ++b) {
    for (std::size_t t = 0; t < in.m; ++t) sub[t] = (*in.rows_b)(b, t);
    for (std::size_t t = 0; t < in.n_a; ++t) full[t] = (*in.rows_a)(b, t);
    const auto corr = fft_cross_correlate(full, sub);
    for (std::size_t i = 0; i < in.len_a; ++i) qt[i] += corr[i];
  }
  return qt;
}

double squared_to_distance(double d2, double norm_sum) {
  if (d2 < kCancelRel * norm_sum) return 0.0;
  return std::sqrt(d2);
}

// Scans one QT row for the nearest admissible neighbor. exclusion < 0
// means no exclusion zone (AB join).
void scan_row(const JoinInput& in, const std::vector<double>& qt, std::size_t i,
              std::ptrdiff_t exclusion, double* best_dist, std::ptrdiff_t* best_idx) {
  double best_d2 = kInf;
  std::ptrdiff_t best_j = -1;
  const double na = in.norm_a[i];
  for (std::size_t j = 0; j < in.len_b; ++j) {
    if (exclusion >= 0) {
      const auto lag = static_cast<std::ptrdiff_t>(j) - static_cast<std::ptrdiff_t>(i);
      if (lag >= -exclusion && lag <= exclusion) continue;
    }
    const double d2 = std::max(0.0, na + in.norm_b[j] - 2.0 * qt[j]);
    if (d2 < best_d2) {
      best_d2 = d2;
      best_j = static_cast<std::ptrdiff_t>(j);
    }
  }
  if (best_j < 0) {
    *best_dist = kInf;
    *best_idx = -1;
  } else {
    *best_dist = squared_to_distance(best_d2, na + in.norm_b[best_j]);
    *best_idx = best_j;
  }
}

void process_block(const JoinInput& in, const std::vector<double>& first_col,
                   std::size_t row0, std::size_t row1, std::ptrdiff_t exclusion,
                   MatrixProfile* out) {
  std::vector<double> qt = seed_row(in, row0);
  scan_row(in, qt, row0, exclusion, &out->distances[row0], &out->indices[row0]);

  const std::size_t bins = in.bins;
  for (std::size_t i = row0 + 1; i < row1; ++i) {
    const double* drop = &in.frames_a[(i - 1) * bins];
    const double* add = &in.frames_a[(i + in.m - 1) * bins];
    for (std::size_t j = in.len_b; j-- > 1;) {
      const double* drop_b = &in.frames_b[(j - 1) * bins];
      const double* add_b = &in.frames_b[(j + in.m - 1) * bins];
      double delta = 0.0;
      for (std::size_t b = 0; b < bins; ++b)
        delta += add[b] * add_b[b] - drop[b] * drop_b[b];
      qt[j] = qt[j - 1] + delta;
    }
    qt[0] = first_col[i];
    scan_row(in, qt, i, exclusion, &out->distances[i], &out->indices[i]);
  }
}

MatrixProfile compute_join(const Spectrogram& query, const Spectrogram& reference,
                           std::size_t m, std::ptrdiff_t exclusion, JoinKind kind,
                           int workers) {
  if (query.bins() != reference.bins())
    throw ShapeError("bin counts differ between query and reference");
  check_finite(query.data);
  if (&query.data != &reference.data) check_finite(reference.data);

  JoinInput in;
  in.bins = query.bins();
  in.n_a = query.frames();
  in.n_b = reference.frames();
  in.m = m;
  in.len_a = in.n_a - m + 1;
  in.len_b = in.n_b - m + 1;
  in.rows_a = &query.data;
  in.rows_b = &reference.data;
  in.frames_a = to_frame_major(query.data);
  in.frames_b = (kind == JoinKind::kSelf) ? in.frames_a
                                          : to_frame_major(reference.data);
  in.norm_a = subsequence_norms(in.frames_a, in.n_a, in.bins, m);
  in.norm_b = (kind == JoinKind::kSelf)
                  ? in.norm_a
                  : subsequence_norms(in.frames_b, in.n_b, in.bins, m);

  MatrixProfile out;
  out.subsequence_len = static_cast<int>(m);
  out.exclusion_radius = (kind == JoinKind::kSelf) ? static_cast<int>(exclusion) : 0;
  out.join_kind = kind;
  out.distances.resize(in.len_a);
  out.indices.resize(in.len_a);

  const std::vector<double> first_col = seed_col(in);
  const std::size_t n_blocks = (in.len_a + kRowBlock - 1) / kRowBlock;
  const std::ptrdiff_t excl = (kind == JoinKind::kSelf) ? exclusion : -1;

  auto run_block = [&](std::size_t blk) {
    const std::size_t row0 = blk * kRowBlock;
    const std::size_t row1 = std::min(row0 + kRowBlock, in.len_a);
    process_block(in, first_col, row0, row1, excl, &out);
  };

  const int pool = std::max(1, std::min<int>(workers, static_cast<int>(n_blocks)));
  if (pool == 1) {
    for (std::size_t blk = 0; blk < n_blocks; ++blk) run_block(blk);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> threads;
    threads.reserve(pool);
    for (int w = 0; w < pool; ++w) {
      threads.emplace_back([&] {
        for (std::size_t blk = next.fetch_add(1); blk < n_blocks;
             blk = next.fetch_add(1))
          run_block(blk);
      });
    }
    for (auto& t : threads) t.join();
  }
  return out;
}

}  // namespace

MatrixProfile self_join(const Spectrogram& spec, int m, int exclusion_radius,
                        int workers) {
  if (m < 2) throw ArgumentError("self-join needs m >= 2");
  if (exclusion_radius < 0) exclusion_radius = default_exclusion_radius(m);
  if (spec.frames() < static_cast<std::size_t>(m + exclusion_radius + 1))
    throw SizeError("need at least m + exclusion_radius + 1 frames");
  return compute_join(spec, spec, static_cast<std::size_t>(m), exclusion_radius,
                      JoinKind::kSelf, workers);
}

MatrixProfile ab_join(const Spectrogram& query, const Spectrogram& reference,
                      int m, int workers) {
  if (m < 1) throw ArgumentError("ab-join needs m >= 1");
  if (query.frames() < static_cast<std::size_t>(m) ||
      reference.frames() < static_cast<std::size_t>(m))
    throw SizeError("both sides need at least m frames");
  return compute_join(query, reference, static_cast<std::size_t>(m), 0,
                      JoinKind::kAb, workers);
}

MatrixProfile brute_force_profile(const Spectrogram& query,
                                  const Spectrogram* reference, int m,
                                  int exclusion_radius) {
  const bool self = (reference == nullptr);
  const Spectrogram& ref = self ? query : *reference;
  if (m < (self ? 2 : 1)) throw ArgumentError("m too small");
  if (query.frames() > 2048 || ref.frames() > 2048)
    throw SizeError("brute-force oracle guarded to <= 2048 frames");
  if (query.bins() != ref.bins()) throw ShapeError("bin counts differ");
  if (self && exclusion_radius < 0) exclusion_radius = default_exclusion_radius(m);
  if (!self) exclusion_radius = 0;
  if (query.frames() < static_cast<std::size_t>(m) ||
      ref.frames() < static_cast<std::size_t>(m))
    throw SizeError("too few frames");
  if (self &&
      query.frames() < static_cast<std::size_t>(m + exclusion_radius + 1))
    throw SizeError("need at least m + exclusion_radius + 1 frames");
  check_finite(query.data);
  if (!self) check_finite(ref.data);

  const std::size_t len_a = query.frames() - m + 1;
  const std::size_t len_b = ref.frames() - m + 1;
  const std::size_t bins = query.bins();

  MatrixProfile out;
  out.subsequence_len = m;
  out.exclusion_radius = self ? exclusion_radius : 0;
  out.join_kind = self ? JoinKind::kSelf : JoinKind::kAb;
  out.distances.assign(len_a, kInf);
  out.indices.assign(len_a, -1);

  for (std::size_t i = 0; i < len_a; ++i) {
    double best = kInf;
    std::ptrdiff_t best_j = -1;
    for (std::size_t j = 0; j < len_b; ++j) {
      if (self) {
        const auto lag =
            static_cast<std::ptrdiff_t>(j) - static_cast<std::ptrdiff_t>(i);
        if (lag >= -exclusion_radius && lag <= exclusion_radius) continue;
      }
      double d2 = 0.0;
      for (std::size_t b = 0; b < bins; ++b)
        for (std::size_t t = 0; t < static_cast<std::size_t>(m); ++t) {
          const double diff = query.data(b, i + t) - ref.data(b, j + t);
          d2 += diff * diff;
        }
      if (d2 < best) {
        best = d2;
        best_j = static_cast<std::ptrdiff_t>(j);
      }
    }
    if (best_j >= 0) {
      out.distances[i] = std::sqrt(best);
      out.indices[i] = best_j;
    }
  }
  return out;
}

Matrix sliding_dot(const std::vector<double>& a, const std::vector<double>& b,
                   std::size_t m) {
  if (m < 1) throw ArgumentError("m must be >= 1");
  if (a.size() < m || b.size() < m) throw SizeError("rows shorter than m");
  const std::size_t rows = a.size() - m + 1;
  const std::size_t cols = b.size() - m + 1;
  Matrix out(rows, cols);
  std::vector<double> sub(m);
  for (std::size_t i = 0; i < rows; ++i) {
    std::copy(a.begin() + static_cast<std::ptrdiff_t>(i),
              a.begin() + static_cast<std::ptrdiff_t>(i + m), sub.begin());
    const auto corr = fft_cross_correlate(b, sub);
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = corr[j];
  }
  return out;
}

}  // namespace motifmine
