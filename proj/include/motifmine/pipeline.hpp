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
// Batch orchestration: dataset scanning, per-track feature + self-join
// processing with persisted artifacts, manifests, run reports, triplet
// dataset export, join-feature export, and plot-data CSVs.
//
// Dataset layout: <root>/<species>/<track>.wav — the species is the
// immediate parent directory of each audio file.
//
// Run directory layout:
//   config.json                         effective configuration
//   manifest.csv                        one row per scanned track
//   run_report.json                     counters, timings, dispatch order
//   tracks/<species>/<stem>.feature.npy float32 (bins, frames)
//   tracks/<species>/<stem>.profile.npy float64 matrix profile
//   tracks/<species>/<stem>.index.npy   float64 profile index (-1 = none)
//   tracks/<species>/<stem>.meta.json   per-track metadata

#ifndef MOTIFMINE_PIPELINE_HPP_
#define MOTIFMINE_PIPELINE_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "motifmine/audio_io.hpp"
#include "motifmine/features.hpp"
#include "motifmine/simple_mp.hpp"

namespace motifmine {

enum class LabelSource { kMotif, kDiscord };

std::string to_string(LabelSource source);
LabelSource label_source_from_string(const std::string& s);

struct PipelineConfig {
  SpectrogramKind feature_kind = SpectrogramKind::kCens;
  int sample_rate = 22050;
  int n_fft = 2048;      // mel
  int hop = 80;          // mel
  int n_mels = 16;       // mel
  int target_fps = 10;   // cens
  int simple_window = 0;  // 0 = default for the feature kind (50 cens, 400 mel)
  int exclusion_radius = -1;  // < 0 = m/2
  double window_seconds = 5.0;
  int workers = 1;
  std::uint64_t seed = 42;
  LabelSource label_source = LabelSource::kMotif;
  bool zero_non_finite = false;  // opt-in zeroing of NaN/Inf input samples

  int effective_simple_window() const {
    if (simple_window > 0) return simple_window;
    return feature_kind == SpectrogramKind::kMel ? 400 : 50;
  }
  int effective_exclusion() const {
    return exclusion_radius >= 0 ? exclusion_radius
                                 : default_exclusion_radius(effective_simple_window());
  }
  double frame_rate() const {
    return feature_kind == SpectrogramKind::kCens
               ? static_cast<double>(target_fps)
               : static_cast<double>(sample_rate) / hop;
  }

  void validate() const;
  std::string to_json() const;
  static PipelineConfig from_json(const std::string& text);
  // Key/value config files: .json or a flat key = value subset of TOML.
  static PipelineConfig from_file(const std::filesystem::path& path);
};

enum class TrackStatus { kOk, kSkippedShort, kError };

std::string to_string(TrackStatus status);

struct TrackManifestEntry {
  std::string track_id;
  std::string species;
  std::string path;  // relative to the dataset root
  double duration_s = 0.0;
  int sample_rate = 0;
  SpectrogramKind feature_kind = SpectrogramKind::kCens;
  double motif_start_s = 0.0;
  double motif_end_s = 0.0;
  double motif_pair_start_s = 0.0;
  double motif_distance = 0.0;
  double discord_start_s = 0.0;
  double discord_distance = 0.0;
  TrackStatus status = TrackStatus::kOk;
};

struct ScanEntry {
  std::string species;
  std::filesystem::path path;  // relative to root
};

struct ScanResult {
  std::vector<ScanEntry> entries;  // lexicographic (species, path) order
  std::size_t non_audio_skipped = 0;
};

ScanResult scan_dataset(const std::filesystem::path& root);

struct StageTimings {
  double decode_ms = 0.0;
  double feature_ms = 0.0;
  double join_ms = 0.0;
  double persist_ms = 0.0;
};

struct ProcessOutcome {
  TrackManifestEntry entry;
  std::string error_message;  // set when status == kError
  StageTimings timings;
  // Frame-level detail mirrored into <stem>.meta.json:
  std::ptrdiff_t motif_a_frame = -1, motif_b_frame = -1, discord_frame = -1;
  std::size_t profile_len = 0, n_windows = 0, n_samples = 0;
};

// Decodes, resamples, extracts the configured feature, self-joins, and
// persists artifacts under out_dir. Tracks too short for the join are
// reported as skipped_short with nothing persisted; decode failures
// become status=error. When compute_join is false only the feature array
// and metadata are persisted and the motif fields stay empty.
ProcessOutcome process_track(const std::filesystem::path& root,
                             const ScanEntry& scan, const PipelineConfig& config,
                             const std::filesystem::path& out_dir,
                             bool compute_join = true);

struct RunReport {
  std::size_t scanned = 0, ok = 0, skipped_short = 0, error = 0,
              non_audio_skipped = 0;
  double wall_time_s = 0.0;
  std::vector<std::string> dispatch_order;  // longest-first
  std::map<std::string, std::string> errors;  // track_id -> message
  std::map<std::string, std::vector<double>> stage_totals_ms;  // per stage
  std::vector<TrackManifestEntry> manifest;  // sorted by track_id
};

// Scans root, dispatches tracks longest-first over `workers` threads,
// writes manifest.csv / run_report.json / config.json into out_dir.
// Per-track failures do not abort the run.
RunReport run_batch(const std::filesystem::path& root, const PipelineConfig& config,
                    const std::filesystem::path& out_dir, bool compute_join = true);

// --- Manifest and metadata round trips (CSV is RFC-4180 quoted).

void write_manifest_csv(const std::filesystem::path& path,
                        const std::vector<TrackManifestEntry>& entries);
std::vector<TrackManifestEntry> read_manifest_csv(const std::filesystem::path& path);

// --- Downstream exports over a finished run directory.

struct TripletExportOptions {
  std::size_t batch_size = 32;
  bool use_species_queues = true;
  bool augment = false;
  std::uint64_t seed = 42;
};

struct TripletExportReport {
  std::size_t n_pairs = 0;
  std::size_t n_triplets = 0;
  std::size_t n_batches = 0;
  std::size_t dropped_pairs = 0;
};

// Builds pairs from persisted profile indices, batches them, cuts the
// referenced 5 s windows from the source audio, and writes per-batch
// anchor/neighbor/distant arrays of 128x128 embedding frames plus a
// JSON-lines index (triplets.jsonl).
TripletExportReport export_triplets(const std::filesystem::path& run_dir,
                                    const std::filesystem::path& audio_root,
                                    const std::filesystem::path& out_dir,
                                    const TripletExportOptions& options);

struct JoinFeatureExportOptions {
  std::size_t library_size = 64;
  bool per_entry = false;
  std::uint64_t seed = 42;
};

struct JoinFeatureExportReport {
  std::size_t n_windows = 0;
  std::size_t library_size = 0;
};

// Samples a motif library from the run's mined motifs (or discords,
// per the run's label_source) and writes per-window join features as
// join_features.npy + join_features.csv.
JoinFeatureExportReport export_join_features(const std::filesystem::path& run_dir,
                                             const std::filesystem::path& out_dir,
                                             const JoinFeatureExportOptions& options);

// Writes <stem>.spectrogram.csv (frame,bin,value) and <stem>.profile.csv
// (frame,distance,index) for one processed track, with full round-trip
// float formatting. Returns the written file paths.
std::vector<std::filesystem::path> emit_plot_data(
    const std::filesystem::path& run_dir, const std::string& track_id,
    const std::filesystem::path& out_dir);

// Top-k motif listing across a run directory -> motifs.csv rows.
struct MotifListing {
  std::string track_id;
  std::size_t rank = 0;
  double start_s = 0.0;
  double pair_start_s = 0.0;
  double distance = 0.0;
};

std::vector<MotifListing> list_motifs(const std::filesystem::path& run_dir,
                                      std::size_t top_k);
void write_motifs_csv(const std::filesystem::path& path,
                      const std::vector<MotifListing>& listings);

}  // namespace motifmine

#endif  // MOTIFMINE_PIPELINE_HPP_
