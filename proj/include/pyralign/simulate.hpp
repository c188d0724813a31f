#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "pyralign/seq_model.hpp"

namespace pyralign {

struct SimulationParams {
  std::size_t count = 0;
  std::size_t read_length = 100;
  double substitution_rate = 0.0;
  double indel_rate = 0.0;
  std::uint64_t seed = 1;
};

struct TruthEntry {
  std::string read_id;
  std::size_t true_start = 0;
};

struct SimulatedReads {
  std::vector<Read> reads;
  std::vector<TruthEntry> truth;
};

/// Draws read starts uniformly over [0, |ref| - read_length] and copies the
/// reference from there, applying per-base substitutions and single-base
/// insertions/deletions at the given rates. Deterministic in the seed.
SimulatedReads simulate_reads(const Sequence& reference, const SimulationParams& params,
                              const Alphabet& alphabet = Alphabet::dna());

/// Random reference over the alphabet's residues.
Sequence random_reference(std::size_t length, std::uint64_t seed, const Alphabet& alphabet = Alphabet::dna(),
                          std::string id = "reference");

/// `read_id<TAB>true_start` lines.
void write_truth_table(std::ostream& out, const std::vector<TruthEntry>& truth);
void write_truth_table(const std::filesystem::path& path, const std::vector<TruthEntry>& truth);
std::vector<TruthEntry> parse_truth_table(std::istream& in);

}  // namespace pyralign
