#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pyralign/pairwise_dp.hpp"
#include "pyralign/scoring.hpp"

namespace pyralign {

/// A block of aligned rows plus per-column symbol counts. Frequencies are
/// derived from the counts: residues and gaps are counted cells, ambiguity
/// symbols are not; a column with no counted cell reads as all-gap.
class Profile {
 public:
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<AlignedSequence>& members() const noexcept { return members_; }
  std::size_t weight() const noexcept { return members_.size(); }
  std::size_t width() const noexcept { return width_; }

  ProfileColumn column(std::size_t c) const;
  std::vector<ProfileColumn> columns() const;

  /// Raw counts of column c: alphabet-size residue counts, then gaps, then
  /// ambiguity symbols.
  std::span<const std::uint32_t> counts(std::size_t c) const noexcept {
    return {counts_.data() + c * stride(), stride()};
  }
  std::size_t stride() const noexcept { return alphabet_.size() + 2; }

 private:
  friend Profile build_profile(std::vector<AlignedSequence>, const Alphabet&);
  friend Profile pad_left(const Profile&, std::size_t);
  friend struct ProfileMerger;

  Profile(Alphabet alphabet, std::vector<AlignedSequence> members, std::vector<std::uint32_t> counts);

  Alphabet alphabet_;
  std::vector<AlignedSequence> members_;
  std::vector<std::uint32_t> counts_;
  std::size_t width_ = 0;
};

Profile build_profile(std::vector<AlignedSequence> rows, const Alphabet& alphabet);

/// Two-member profile of a pairwise alignment.
Profile profile_of_pairwise(const PairwiseAlignment& pa, const Alphabet& alphabet);

/// Prepends `columns` all-gap columns to every member.
Profile pad_left(const Profile& p, std::size_t columns);

struct ProfileAlignment {
  Profile merged;
  double score = 0.0;
  /// For each merged column, the source column in x (resp. y), or nullopt
  /// where an all-gap column was inserted on that side.
  std::vector<std::optional<std::size_t>> x_columns;
  std::vector<std::optional<std::size_t>> y_columns;
};

/// Global DP over columns. Matching scores the PSP of the two columns;
/// setting a column against an inserted gap column costs the linear gap
/// penalty times (1 - that column's gap frequency). Ties go diag, up (x
/// column against a gap), left. Members of x come first in the result.
ProfileAlignment align_profiles_scored(const Profile& x, const Profile& y, const ScoringScheme& scheme);

Profile align_profiles(const Profile& x, const Profile& y, const ScoringScheme& scheme);

}  // namespace pyralign
