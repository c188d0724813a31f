// pyralign: reference-guided multiple alignment of short reads.
//
//   pyralign align    --reference REF.fa --reads READS.fa --out OUT.aln [...]
//   pyralign simulate --reference REF.fa --count N --length L --out READS.fa --truth TRUTH.tsv
//   pyralign bench    --reference REF.fa --grid 250,500,1000,2000
//
// Exit status: 0 success, 1 usage error, 2 data error.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pyralign/error.hpp"
#include "pyralign/io.hpp"
#include "pyralign/pipeline.hpp"
#include "pyralign/simulate.hpp"
#include "pyralign/worker_pool.hpp"

namespace {

constexpr int kUsageError = 1;
constexpr int kDataError = 2;

void add_scoring_options(CLI::App& cmd, pyralign::ScoringOptions& s) {
  cmd.add_option("--match", s.match, "Score for identical residues")->capture_default_str();
  cmd.add_option("--mismatch", s.mismatch, "Score for differing residues")->capture_default_str();
  cmd.add_option("--gap-open", s.gap_open, "Gap penalty (linear) or gap opening penalty (affine)")
      ->capture_default_str();
  cmd.add_option("--gap-extend", s.gap_extend, "Gap extension penalty, used with --affine")->capture_default_str();
  cmd.add_flag("--affine", s.affine, "Affine gaps in the pairwise kernels");
  cmd.add_option("--matrix", s.matrix_path, "Substitution matrix file")->check(CLI::ExistingFile);
}

pyralign::Sequence load_reference(const std::string& path, const pyralign::ScoringOptions& scoring) {
  auto refs = pyralign::parse_fasta(path, pyralign::make_scheme(scoring).matrix.alphabet());
  if (refs.empty()) throw pyralign::Error(pyralign::ErrorCode::EmptyInput, "reference file has no records");
  return refs.front();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reference-guided multiple alignment of short sequencing reads"};
  app.require_subcommand(1);

  pyralign::PipelineConfig align;
  align.options.worker_count = pyralign::WorkerPool::hardware_workers();
  std::string align_reference, align_reads, align_out, format = "aligned-fasta", report;
  auto* align_cmd = app.add_subcommand("align", "Align reads against a reference into one MSA");
  align_cmd->add_option("--reference", align_reference, "Reference FASTA")->required()->check(CLI::ExistingFile);
  align_cmd->add_option("--reads", align_reads, "Reads FASTA")->required()->check(CLI::ExistingFile);
  align_cmd->add_option("--out", align_out, "Output alignment path")->required();
  align_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"aligned-fasta", "clustal"}))
      ->capture_default_str();
  add_scoring_options(*align_cmd, align.options.scoring);
  align_cmd->add_option("--block-size", align.options.block_size, "Profiles per merge tree")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  align_cmd->add_option("--workers", align.options.worker_count, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  align_cmd->add_option("--report", report, "Write the run report (JSON) here");
  align_cmd->add_flag("--include-reference", align.options.include_reference, "Add the reference as the first row");

  std::string sim_reference, sim_out, sim_truth;
  pyralign::SimulationParams sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Draw reads from a reference with errors");
  sim_cmd->add_option("--reference", sim_reference, "Reference FASTA")->required()->check(CLI::ExistingFile);
  sim_cmd->add_option("--count", sim.count, "Number of reads")->required();
  sim_cmd->add_option("--length", sim.read_length, "Read length")->required()->check(CLI::PositiveNumber);
  sim_cmd->add_option("--sub-rate", sim.substitution_rate, "Per-base substitution rate")->capture_default_str();
  sim_cmd->add_option("--indel-rate", sim.indel_rate, "Per-base indel rate")->capture_default_str();
  sim_cmd->add_option("--seed", sim.seed, "Random seed")->capture_default_str();
  sim_cmd->add_option("--out", sim_out, "Reads FASTA to write")->required();
  sim_cmd->add_option("--truth", sim_truth, "Truth table (TSV) to write")->required();

  std::string bench_reference;
  std::vector<std::size_t> grid{250, 500, 1000, 2000};
  pyralign::BenchmarkOptions bench;
  bench.pipeline.worker_count = pyralign::WorkerPool::hardware_workers();
  auto* bench_cmd = app.add_subcommand("bench", "Time the pipeline over simulated corpora of growing size");
  bench_cmd->add_option("--reference", bench_reference, "Reference FASTA")->required()->check(CLI::ExistingFile);
  bench_cmd->add_option("--grid", grid, "Read counts")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--length", bench.read_length, "Read length")->check(CLI::PositiveNumber)->capture_default_str();
  bench_cmd->add_option("--sub-rate", bench.substitution_rate, "Per-base substitution rate")->capture_default_str();
  bench_cmd->add_option("--indel-rate", bench.indel_rate, "Per-base indel rate")->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Random seed")->capture_default_str();
  bench_cmd->add_option("--repeats", bench.repeats, "Runs per read count; stages keep their fastest time")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--block-size", bench.pipeline.block_size, "Profiles per merge tree")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--workers", bench.pipeline.worker_count, "Worker threads")->check(CLI::PositiveNumber);
  add_scoring_options(*bench_cmd, bench.pipeline.scoring);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*align_cmd) {
      align.reference_path = align_reference;
      align.reads_path = align_reads;
      align.output_path = align_out;
      align.output_format = pyralign::parse_alignment_format(format);
      if (!report.empty()) align.report_path = report;
      auto run = pyralign::run_pipeline(align);
      std::cerr << "aligned " << run.read_count << " reads, width " << run.alignment_width << ", "
                << run.unplaceable_read_ids.size() << " unplaceable, " << run.seconds.total() << " s\n";
    } else if (*sim_cmd) {
      auto reference = load_reference(sim_reference, pyralign::ScoringOptions{});
      auto corpus = pyralign::simulate_reads(reference, sim);
      std::vector<pyralign::Sequence> seqs;
      seqs.reserve(corpus.reads.size());
      for (auto& r : corpus.reads) seqs.push_back(r.sequence);
      pyralign::write_fasta(sim_out, seqs);
      pyralign::write_truth_table(sim_truth, corpus.truth);
    } else if (*bench_cmd) {
      auto reference = load_reference(bench_reference, bench.pipeline.scoring);
      auto table = pyralign::run_benchmark(reference, grid, bench);
      std::cout << table.to_text();
    }
  } catch (const pyralign::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDataError;
  }
  return 0;
}
