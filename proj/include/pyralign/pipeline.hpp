#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pyralign/io.hpp"
#include "pyralign/merge_scheduler.hpp"
#include "pyralign/pairwise_dp.hpp"
#include "pyralign/simulate.hpp"

namespace pyralign {

struct ScoringOptions {
  double match = 2.0;
  double mismatch = -3.0;
  double gap_open = -5.0;
  double gap_extend = -2.0;
  bool affine = false;
  std::optional<std::filesystem::path> matrix_path;
};

/// Builds the scheme the pipeline runs with: a matrix file if given,
/// otherwise match/mismatch over DNA; linear gaps of gap_open unless affine.
ScoringScheme make_scheme(const ScoringOptions& options);

struct PipelineOptions {
  ScoringOptions scoring;
  std::size_t block_size = 100;
  std::size_t worker_count = 1;
  bool include_reference = false;
};

struct PipelineConfig {
  std::filesystem::path reference_path;
  std::filesystem::path reads_path;
  std::filesystem::path output_path;
  AlignmentFormat output_format = AlignmentFormat::AlignedFasta;
  std::optional<std::filesystem::path> report_path;
  PipelineOptions options;
};

struct StageTimes {
  double overlap = 0.0;
  double ordering = 0.0;
  double pairing = 0.0;
  double merging = 0.0;

  double total() const noexcept { return overlap + ordering + pairing + merging; }
};

struct RunReport {
  std::size_t read_count = 0;
  std::size_t reference_length = 0;
  StageTimes seconds;
  /// Reads whose best overlap score is not positive.
  std::vector<std::string> unplaceable_read_ids;
  std::size_t alignment_width = 0;
  std::size_t seed_profiles = 0;
  std::size_t profile_alignments = 0;
  double overlap_score_min = 0.0;
  double overlap_score_mean = 0.0;
  double overlap_score_max = 0.0;
  double pairwise_score_total = 0.0;
  double merge_score_total = 0.0;

  std::string to_json() const;
};

struct PipelineResult {
  Profile msa;
  OverlapIndex placements;
  RunReport report;
};

/// Overlap placement, ordering, adjacent pairing, local pair alignment,
/// reference-coordinate padding, and the blocked merge tree.
PipelineResult align_reads(const Sequence& reference, const std::vector<Read>& reads, const PipelineOptions& options);

/// File-level driver: parses inputs, runs align_reads, writes the alignment
/// and, if requested, the report.
RunReport run_pipeline(const PipelineConfig& config);

struct BenchmarkOptions {
  std::size_t read_length = 100;
  double substitution_rate = 0.01;
  double indel_rate = 0.0;
  std::uint64_t seed = 1;
  /// Runs per grid point; each stage keeps its fastest time.
  std::size_t repeats = 1;
  PipelineOptions pipeline;
};

struct BenchmarkRow {
  std::size_t reads = 0;
  StageTimes seconds;
  /// Total of the slowest single run.
  double slowest_total = 0.0;
};

struct BenchmarkTable {
  std::vector<BenchmarkRow> rows;
  /// Least-squares slope of log(total time) against log(N); present with two
  /// or more distinct N.
  std::optional<double> growth_exponent;

  std::string to_text() const;
};

BenchmarkTable run_benchmark(const Sequence& reference, const std::vector<std::size_t>& grid,
                             const BenchmarkOptions& options);

double fit_growth_exponent(const std::vector<double>& n, const std::vector<double>& seconds);

}  // namespace pyralign
