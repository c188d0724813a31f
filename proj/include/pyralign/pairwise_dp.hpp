#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pyralign/scoring.hpp"
#include "pyralign/seq_model.hpp"

namespace pyralign {

class WorkerPool;

enum class DpMode { Overlap, Local };

enum class Move : std::uint8_t { Stop = 0, Diag = 1, Up = 2, Left = 3 };

/// (m+1) x (n+1) score grid for x (rows) against y (columns) together with
/// the move that produced each cell's best score. Up consumes a residue of x
/// against a gap, Left a residue of y against a gap. In affine mode `up` and
/// `left` hold the gap-state layers and `flags` records, per cell, whether
/// each gap state was entered by extension.
struct DpMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> best;
  std::vector<Move> moves;
  std::vector<double> up;
  std::vector<double> left;
  std::vector<std::uint8_t> flags;

  std::size_t at(std::size_t i, std::size_t j) const noexcept { return i * cols + j; }
  double score(std::size_t i, std::size_t j) const noexcept { return best[at(i, j)]; }
  Move move(std::size_t i, std::size_t j) const noexcept { return moves[at(i, j)]; }
};

/// Fills the DP matrix for x against y. Overlap mode zeroes the first row
/// and column; local mode clamps every cell at zero. Ties between moves go
/// diag, then up, then left; in local mode a zero cell is always a stop.
DpMatrix fill_dp_matrix(const Sequence& x, const Sequence& y, const ScoringScheme& scheme, DpMode mode);

/// Placement of one read on the reference. Coordinates are reference
/// offsets; [start, end) is the reference span covered by the traceback.
struct OverlapRecord {
  std::string read_id;
  std::size_t source_index = 0;
  std::size_t start = 0;
  std::size_t end = 0;
  std::size_t leading_gaps = 0;
  std::size_t trailing_gaps = 0;
  double score = 0.0;
  /// The read laid out in reference coordinates: leading gaps, the aligned
  /// region, trailing gaps, with any overhanging read residues kept at the
  /// ends. Gap-stripped it is the read.
  AlignedSequence aligned_read;
  /// Reference row matching aligned_read column for column.
  AlignedSequence aligned_reference;
};

using OverlapIndex = std::map<std::string, OverlapRecord>;

struct PairwiseAlignment {
  AlignedSequence row_a;
  AlignedSequence row_b;
  double score = 0.0;
  /// Column range [core_begin, core_end) of the local core inside the rows.
  std::size_t core_begin = 0;
  std::size_t core_end = 0;
};

/// Semi-global alignment of a read against the reference: end gaps are free,
/// the optimum is the best cell on the last row or last column. Among equal
/// scores the placement with the smallest start wins, then the smallest end,
/// then the one consuming more of the read.
OverlapRecord overlap_align(const Sequence& read, const Sequence& reference, const ScoringScheme& scheme);

/// Smith-Waterman. The optimum is the highest cell with the smallest
/// (row, column); the rows carry both sequences in full, with unaligned
/// prefixes and suffixes set against gaps around the local core.
PairwiseAlignment local_align(const Sequence& a, const Sequence& b, const ScoringScheme& scheme);

/// One overlap alignment per read, keyed by read id. Reads may be aligned
/// concurrently when a pool is given; the result does not depend on it.
OverlapIndex build_overlap_index(std::span<const Read> reads, const Sequence& reference, const ScoringScheme& scheme,
                                 WorkerPool* pool = nullptr);

}  // namespace pyralign
