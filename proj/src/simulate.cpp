#include "pyralign/simulate.hpp"

#include <random>
#include <sstream>

#include "pyralign/error.hpp"
#include "pyralign/io.hpp"

namespace pyralign {

namespace {

// std::uniform_*_distribution is implementation-defined; these keep the
// simulator byte-reproducible across standard libraries.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t below(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(unit(rng) * static_cast<double>(bound));
}

}  // namespace

SimulatedReads simulate_reads(const Sequence& reference, const SimulationParams& params, const Alphabet& alphabet) {
  for (double rate : {params.substitution_rate, params.indel_rate})
    if (!(rate >= 0.0 && rate < 0.5)) throw Error(ErrorCode::InvalidRate, "rate " + std::to_string(rate) + " not in [0, 0.5)");
  if (params.read_length == 0) throw Error(ErrorCode::InvalidConfig, "read length must be positive");
  if (params.read_length > reference.size())
    throw Error(ErrorCode::ReadTooLong, "read length " + std::to_string(params.read_length) + " exceeds reference length " +
                                            std::to_string(reference.size()));

  const std::string& ref = reference.residues();
  const std::string& residues = alphabet.symbols();
  const std::size_t span = ref.size() - params.read_length + 1;
  const int width = static_cast<int>(std::to_string(params.count > 0 ? params.count - 1 : 0).size());
  std::mt19937_64 rng(params.seed);

  SimulatedReads out;
  out.reads.reserve(params.count);
  out.truth.reserve(params.count);
  for (std::size_t r = 0; r < params.count; ++r) {
    const std::size_t start = below(rng, span);
    std::string body;
    body.reserve(params.read_length);
    std::size_t pos = start;
    while (body.size() < params.read_length && pos < ref.size()) {
      const double u = unit(rng);
      if (u < params.indel_rate) {
        if (unit(rng) < 0.5) {
          body.push_back(residues[below(rng, residues.size())]);
        } else {
          ++pos;
        }
      } else if (u < params.indel_rate + params.substitution_rate && residues.size() > 1) {
        char original = ref[pos++];
        char replacement;
        do {
          replacement = residues[below(rng, residues.size())];
        } while (replacement == original);
        body.push_back(replacement);
      } else {
        body.push_back(ref[pos++]);
      }
    }
    if (body.empty()) body.push_back(ref[start]);

    std::ostringstream id;
    id << 'r';
    id.width(width);
    id.fill('0');
    id << r;
    out.truth.push_back(TruthEntry{id.str(), start});
    out.reads.push_back(Read{Sequence(id.str(), std::move(body)), r});
  }
  return out;
}

Sequence random_reference(std::size_t length, std::uint64_t seed, const Alphabet& alphabet, std::string id) {
  std::mt19937_64 rng(seed);
  std::string body(length, 'A');
  for (auto& c : body) c = alphabet.symbols()[below(rng, alphabet.size())];
  return Sequence(std::move(id), std::move(body));
}

void write_truth_table(std::ostream& out, const std::vector<TruthEntry>& truth) {
  for (const auto& t : truth) out << t.read_id << '\t' << t.true_start << '\n';
}

void write_truth_table(const std::filesystem::path& path, const std::vector<TruthEntry>& truth) {
  std::ostringstream buf;
  write_truth_table(buf, truth);
  write_text_file(path, buf.str());
}

std::vector<TruthEntry> parse_truth_table(std::istream& in) {
  std::vector<TruthEntry> truth;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected read_id<TAB>true_start");
    try {
      truth.push_back(TruthEntry{line.substr(0, tab), std::stoul(line.substr(tab + 1))});
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad start '" + line.substr(tab + 1) + "'");
    }
  }
  return truth;
}

}  // namespace pyralign
