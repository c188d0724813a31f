#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace pyralign {

inline constexpr char kGap = '-';

/// Ordered residue set plus the two reserved symbols. Residue order fixes the
/// row/column order of every score matrix and frequency vector built on it.
class Alphabet {
 public:
  static constexpr int kNotInAlphabet = -1;

  Alphabet(std::string symbols, char ambiguity = 'N', char gap = kGap);

  static Alphabet dna();

  const std::string& symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  char gap_symbol() const noexcept { return gap_; }
  char ambiguity_symbol() const noexcept { return ambiguity_; }

  /// Residue index for an upper-case symbol; size() for the ambiguity
  /// symbol; kNotInAlphabet otherwise.
  int code(char c) const noexcept { return codes_[static_cast<unsigned char>(c)]; }
  bool is_residue(char c) const noexcept {
    int k = code(c);
    return k >= 0 && static_cast<std::size_t>(k) < size();
  }

  bool operator==(const Alphabet& other) const {
    return symbols_ == other.symbols_ && gap_ == other.gap_ && ambiguity_ == other.ambiguity_;
  }

 private:
  std::string symbols_;
  char ambiguity_;
  char gap_;
  std::array<std::int16_t, 256> codes_{};
};

/// Ungapped residue string with an identifier. Construction enforces the
/// structural invariants; alphabet membership is checked by validate_sequence.
class Sequence {
 public:
  Sequence(std::string id, std::string residues);

  const std::string& id() const noexcept { return id_; }
  const std::string& residues() const noexcept { return residues_; }
  std::size_t size() const noexcept { return residues_.size(); }
  char operator[](std::size_t i) const noexcept { return residues_[i]; }

  bool operator==(const Sequence&) const = default;

 private:
  std::string id_;
  std::string residues_;
};

struct Read {
  Sequence sequence;
  std::size_t source_index = 0;

  const std::string& id() const noexcept { return sequence.id(); }
};

/// One row of an alignment: residues, ambiguity symbols and gaps.
struct AlignedSequence {
  std::string id;
  std::string cells;

  std::size_t size() const noexcept { return cells.size(); }
  bool operator==(const AlignedSequence&) const = default;
};

/// Strips surrounding whitespace, upper-cases, and checks every symbol
/// against the alphabet (ambiguity symbol allowed, gap rejected).
Sequence validate_sequence(std::string_view raw, const Alphabet& alphabet, std::string id = {});

Sequence strip_gaps(const AlignedSequence& row);

}  // namespace pyralign
