#include "pyralign/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include "json.hpp"

#include "pyralign/error.hpp"
#include "pyralign/placement.hpp"
#include "pyralign/worker_pool.hpp"

namespace pyralign {

namespace {

class Stopwatch {
 public:
  double lap() {
    auto now = std::chrono::steady_clock::now();
    double s = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace

ScoringScheme make_scheme(const ScoringOptions& options) {
  ScoringScheme scheme = options.matrix_path
                             ? scheme_from_matrix(load_score_matrix(*options.matrix_path), options.gap_open)
                             : simple_dna_model(options.match, options.mismatch);
  return options.affine ? scheme.with_affine_gaps(options.gap_open, options.gap_extend)
                        : scheme.with_linear_gap(options.gap_open);
}

std::string RunReport::to_json() const {
  nlohmann::ordered_json j;
  j["read_count"] = read_count;
  j["reference_length"] = reference_length;
  j["time_overlap_s"] = seconds.overlap;
  j["time_ordering_s"] = seconds.ordering;
  j["time_pairing_s"] = seconds.pairing;
  j["time_merging_s"] = seconds.merging;
  j["time_total_s"] = seconds.total();
  j["unplaceable_read_ids"] = unplaceable_read_ids;
  j["alignment_width"] = alignment_width;
  j["seed_profiles"] = seed_profiles;
  j["profile_alignments"] = profile_alignments;
  j["overlap_score_min"] = overlap_score_min;
  j["overlap_score_mean"] = overlap_score_mean;
  j["overlap_score_max"] = overlap_score_max;
  j["pairwise_score_total"] = pairwise_score_total;
  j["merge_score_total"] = merge_score_total;
  return j.dump(2) + "\n";
}

PipelineResult align_reads(const Sequence& reference, const std::vector<Read>& reads, const PipelineOptions& options) {
  if (reads.empty()) throw Error(ErrorCode::EmptyReads, "no reads to align");
  if (options.block_size == 0) throw Error(ErrorCode::InvalidConfig, "block size must be at least 1");
  const ScoringScheme scheme = make_scheme(options.scoring);
  const Alphabet& alphabet = scheme.matrix.alphabet();
  WorkerPool pool(options.worker_count);

  RunReport report;
  report.read_count = reads.size();
  report.reference_length = reference.size();
  Stopwatch clock;

  OverlapIndex index = build_overlap_index(reads, reference, scheme, &pool);
  report.seconds.overlap = clock.lap();

  GuideOrder order = order_reads(index);
  report.seconds.ordering = clock.lap();

  std::map<std::string, Sequence> by_id;
  for (const auto& r : reads) by_id.emplace(r.id(), r.sequence);
  ReadPairing pairing = pair_adjacent(order);
  PairedSeeds seeds = align_pairs(pairing, by_id, scheme, &pool);
  report.seconds.pairing = clock.lap();

  std::vector<Profile> profiles;
  profiles.reserve(seeds.alignments.size() + 1);
  for (std::size_t p = 0; p < seeds.alignments.size(); ++p) {
    const auto& [a, b] = pairing.pairs[p];
    const std::size_t offset = std::min(index.at(a).start, index.at(b).start);
    profiles.push_back(pad_left(profile_of_pairwise(seeds.alignments[p], alphabet), offset));
    report.pairwise_score_total += seeds.alignments[p].score;
  }
  if (seeds.singleton)
    profiles.push_back(pad_left(build_profile({*seeds.singleton}, alphabet), index.at(seeds.singleton->id).start));

  MergeStats stats;
  MergePlan plan = plan_merge(profiles.size(), options.block_size);
  Profile msa = execute_merge(plan, std::move(profiles), scheme, &pool, &stats);
  if (options.include_reference) {
    Profile ref = build_profile({AlignedSequence{reference.id(), reference.residues()}}, alphabet);
    msa = align_profiles(ref, msa, scheme);
  }
  report.seconds.merging = clock.lap();

  report.seed_profiles = plan.leaf_count();
  report.profile_alignments = stats.profile_alignments;
  report.merge_score_total = stats.total_score;
  report.alignment_width = msa.width();
  double sum = 0.0;
  bool first = true;
  for (const auto& [id, rec] : index) {
    if (rec.score <= 0) report.unplaceable_read_ids.push_back(id);
    sum += rec.score;
    report.overlap_score_min = first ? rec.score : std::min(report.overlap_score_min, rec.score);
    report.overlap_score_max = first ? rec.score : std::max(report.overlap_score_max, rec.score);
    first = false;
  }
  report.overlap_score_mean = sum / static_cast<double>(index.size());

  return PipelineResult{std::move(msa), std::move(index), std::move(report)};
}

RunReport run_pipeline(const PipelineConfig& config) {
  const Alphabet alphabet = make_scheme(config.options.scoring).matrix.alphabet();
  auto references = parse_fasta(config.reference_path, alphabet);
  if (references.empty()) throw Error(ErrorCode::EmptyInput, "reference file has no records");
  auto sequences = parse_fasta(config.reads_path, alphabet);
  if (sequences.empty()) throw Error(ErrorCode::EmptyReads, "reads file has no records");

  std::vector<Read> reads;
  reads.reserve(sequences.size());
  for (std::size_t i = 0; i < sequences.size(); ++i) reads.push_back(Read{std::move(sequences[i]), i});

  PipelineResult result = align_reads(references.front(), reads, config.options);
  write_alignment(result.msa, config.output_format, config.output_path);
  if (config.report_path) write_text_file(*config.report_path, result.report.to_json());
  return result.report;
}

double fit_growth_exponent(const std::vector<double>& n, const std::vector<double>& seconds) {
  const std::size_t k = n.size();
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < k; ++i) {
    mx += std::log(n[i]);
    my += std::log(seconds[i]);
  }
  mx /= k;
  my /= k;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < k; ++i) {
    double dx = std::log(n[i]) - mx;
    sxy += dx * (std::log(seconds[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

BenchmarkTable run_benchmark(const Sequence& reference, const std::vector<std::size_t>& grid,
                             const BenchmarkOptions& options) {
  BenchmarkTable table;
  for (std::size_t n : grid) {
    SimulationParams sim{n, options.read_length, options.substitution_rate, options.indel_rate, options.seed};
    auto corpus = simulate_reads(reference, sim);
    BenchmarkRow row{n, {}, 0.0};
    for (std::size_t r = 0; r < std::max<std::size_t>(options.repeats, 1); ++r) {
      const StageTimes t = align_reads(reference, corpus.reads, options.pipeline).report.seconds;
      if (r == 0) {
        row.seconds = t;
      } else {
        row.seconds.overlap = std::min(row.seconds.overlap, t.overlap);
        row.seconds.ordering = std::min(row.seconds.ordering, t.ordering);
        row.seconds.pairing = std::min(row.seconds.pairing, t.pairing);
        row.seconds.merging = std::min(row.seconds.merging, t.merging);
      }
      row.slowest_total = std::max(row.slowest_total, t.total());
    }
    table.rows.push_back(row);
  }
  std::vector<double> xs, ys;
  for (const auto& row : table.rows) {
    xs.push_back(static_cast<double>(row.reads));
    ys.push_back(row.seconds.total());
  }
  if (std::any_of(xs.begin(), xs.end(), [&](double x) { return x != xs.front(); }))
    table.growth_exponent = fit_growth_exponent(xs, ys);
  return table;
}

std::string BenchmarkTable::to_text() const {
  std::ostringstream out;
  out << std::left << std::setw(8) << "reads" << std::right;
  for (const char* h : {"overlap_s", "ordering_s", "pairing_s", "merging_s", "total_s"}) out << std::setw(13) << h;
  out << '\n' << std::fixed << std::setprecision(6);
  for (const auto& row : rows) {
    out << std::left << std::setw(8) << row.reads << std::right;
    for (double t : {row.seconds.overlap, row.seconds.ordering, row.seconds.pairing, row.seconds.merging,
                     row.seconds.total()})
      out << std::setw(13) << t;
    out << '\n';
  }
  if (growth_exponent) out << "growth exponent (total vs reads): " << std::setprecision(3) << *growth_exponent << '\n';
  return out.str();
}

}  // namespace pyralign
