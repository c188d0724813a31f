#include "pyralign/seq_model.hpp"

#include <algorithm>
#include <cctype>

#include "pyralign/error.hpp"

namespace pyralign {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptySequence: return "EmptySequence";
    case ErrorCode::IllegalSymbol: return "IllegalSymbol";
    case ErrorCode::InvalidAlphabet: return "InvalidAlphabet";
    case ErrorCode::InvalidScores: return "InvalidScores";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NonPositiveProbability: return "NonPositiveProbability";
    case ErrorCode::UnnormalizedColumn: return "UnnormalizedColumn";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::EmptyIndex: return "EmptyIndex";
    case ErrorCode::UnknownReadId: return "UnknownReadId";
    case ErrorCode::RaggedRows: return "RaggedRows";
    case ErrorCode::EmptyProfile: return "EmptyProfile";
    case ErrorCode::ZeroProfiles: return "ZeroProfiles";
    case ErrorCode::PlanMismatch: return "PlanMismatch";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::EmptyReads: return "EmptyReads";
    case ErrorCode::InvalidRate: return "InvalidRate";
    case ErrorCode::ReadTooLong: return "ReadTooLong";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

Alphabet::Alphabet(std::string symbols, char ambiguity, char gap)
    : symbols_(std::move(symbols)), ambiguity_(ambiguity), gap_(gap) {
  codes_.fill(kNotInAlphabet);
  if (symbols_.empty()) throw Error(ErrorCode::InvalidAlphabet, "alphabet has no residues");
  auto upper = [](char c) { return static_cast<char>(std::toupper(static_cast<unsigned char>(c))); };
  ambiguity_ = upper(ambiguity_);
  if (ambiguity_ == gap_) throw Error(ErrorCode::InvalidAlphabet, "ambiguity symbol equals gap symbol");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    char c = upper(symbols_[i]);
    symbols_[i] = c;
    if (c == gap_ || c == ambiguity_)
      throw Error(ErrorCode::InvalidAlphabet, std::string("reserved symbol '") + c + "' among residues");
    if (codes_[static_cast<unsigned char>(c)] != kNotInAlphabet)
      throw Error(ErrorCode::InvalidAlphabet, std::string("duplicate residue '") + c + "'");
    codes_[static_cast<unsigned char>(c)] = static_cast<std::int16_t>(i);
  }
  codes_[static_cast<unsigned char>(ambiguity_)] = static_cast<std::int16_t>(symbols_.size());
}

Alphabet Alphabet::dna() { return Alphabet("ACGT", 'N'); }

Sequence::Sequence(std::string id, std::string residues) : id_(std::move(id)), residues_(std::move(residues)) {
  if (residues_.empty()) throw Error(ErrorCode::EmptySequence, "sequence '" + id_ + "' is empty");
  auto pos = residues_.find(kGap);
  if (pos != std::string::npos)
    throw Error(ErrorCode::IllegalSymbol, "gap at position " + std::to_string(pos) + " of '" + id_ + "'");
}

Sequence validate_sequence(std::string_view raw, const Alphabet& alphabet, std::string id) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!raw.empty() && is_space(raw.front())) raw.remove_prefix(1);
  while (!raw.empty() && is_space(raw.back())) raw.remove_suffix(1);
  if (raw.empty()) throw Error(ErrorCode::EmptySequence, "sequence '" + id + "' is empty");

  std::string residues(raw);
  for (std::size_t i = 0; i < residues.size(); ++i) {
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(residues[i])));
    if (alphabet.code(c) == Alphabet::kNotInAlphabet)
      throw Error(ErrorCode::IllegalSymbol,
                  "position " + std::to_string(i) + " character '" + raw[i] + "' in '" + id + "'");
    residues[i] = c;
  }
  return Sequence(std::move(id), std::move(residues));
}

Sequence strip_gaps(const AlignedSequence& row) {
  std::string residues;
  residues.reserve(row.cells.size());
  std::copy_if(row.cells.begin(), row.cells.end(), std::back_inserter(residues),
               [](char c) { return c != kGap; });
  if (residues.empty()) throw Error(ErrorCode::EmptySequence, "row '" + row.id + "' is all gaps");
  return Sequence(row.id, std::move(residues));
}

}  // namespace pyralign
