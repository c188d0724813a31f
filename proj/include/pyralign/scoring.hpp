#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "pyralign/seq_model.hpp"

namespace pyralign {

/// Dense residue-by-residue score table over an alphabet. The ambiguity
/// symbol scores `ambiguity_score` against everything, itself included.
class ScoreMatrix {
 public:
  ScoreMatrix(Alphabet alphabet, std::vector<double> scores, double ambiguity_score);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return alphabet_.size(); }

  /// Score by residue code; code size() is the ambiguity symbol.
  double by_code(int a, int b) const noexcept { return coded_[static_cast<std::size_t>(a) * stride_ + b]; }
  double operator()(char a, char b) const noexcept { return by_code(alphabet_.code(a), alphabet_.code(b)); }

  /// Residue-only k*k block, row-major in alphabet order.
  std::span<const double> residue_scores() const noexcept { return scores_; }
  double ambiguity_score() const noexcept { return ambiguity_score_; }
  bool is_symmetric() const noexcept;

 private:
  Alphabet alphabet_;
  std::vector<double> scores_;
  double ambiguity_score_;
  std::size_t stride_;
  std::vector<double> coded_;
};

/// Background and joint residue probabilities with the log-odds matrix
/// S_ij = ln(p_ij / (p_i p_j)) derived from them.
class SubstitutionModel {
 public:
  const Alphabet& alphabet() const noexcept { return log_odds_.alphabet(); }
  const std::vector<double>& background() const noexcept { return background_; }
  /// Row-major k*k joint probabilities.
  const std::vector<double>& joint() const noexcept { return joint_; }
  const ScoreMatrix& log_odds() const noexcept { return log_odds_; }

 private:
  friend SubstitutionModel log_odds_from_probabilities(const Alphabet&, const std::map<char, double>&,
                                                       const std::map<std::pair<char, char>, double>&);
  SubstitutionModel(std::vector<double> background, std::vector<double> joint, ScoreMatrix log_odds)
      : background_(std::move(background)), joint_(std::move(joint)), log_odds_(std::move(log_odds)) {}

  std::vector<double> background_;
  std::vector<double> joint_;
  ScoreMatrix log_odds_;
};

enum class GapModel { Linear, Affine };

/// Substitution scores plus gap costs. A gap run of length k costs
/// gap_open + (k - 1) * gap_extend; linear mode has gap_open == gap_extend.
struct ScoringScheme {
  ScoreMatrix matrix;
  GapModel gap_model = GapModel::Linear;
  double gap_open = -5.0;
  double gap_extend = -5.0;

  /// Single per-position gap cost used by linear recurrences.
  double linear_gap() const noexcept { return gap_open; }

  ScoringScheme with_linear_gap(double gap) const;
  ScoringScheme with_affine_gaps(double open, double extend) const;
};

/// Equal residues score `match`, unequal `mismatch`, the ambiguity symbol
/// always `mismatch`. Linear gap of -5.
ScoringScheme simple_dna_model(double match, double mismatch);

/// Keys are residue symbols (case-insensitive). A joint entry given for only
/// one of (i,j), (j,i) is mirrored; entries given for both must agree.
SubstitutionModel log_odds_from_probabilities(const Alphabet& alphabet, const std::map<char, double>& background,
                                              const std::map<std::pair<char, char>, double>& joint);

ScoringScheme scheme_from_matrix(ScoreMatrix matrix, double gap);

/// Square matrix text: a header row of residue letters, then one row per
/// letter with the row letter first. '#' lines are comments and '*' is
/// ignored. If every letter is nucleotide the ambiguity symbol is 'N',
/// otherwise 'X'; the ambiguity row, if present, is dropped and the symbol
/// scores the matrix minimum.
ScoreMatrix parse_score_matrix(std::istream& in);
ScoreMatrix load_score_matrix(const std::filesystem::path& path);

/// Column of a profile: residue frequencies in alphabet order plus the gap
/// frequency. Counted cells exclude ambiguity symbols.
struct ProfileColumn {
  std::vector<double> residue_freq;
  double gap_freq = 0.0;

  double residue_mass() const noexcept;
};

/// Sum over residue pairs of f^x_i f^y_j S_ij. Gap frequencies do not enter
/// the sum. Both columns must be normalized (residues + gap == 1).
double psp_score(const ProfileColumn& x, const ProfileColumn& y, const ScoreMatrix& matrix);
double psp_score(const ProfileColumn& x, const ProfileColumn& y, const SubstitutionModel& model);

/// Same double sum without the normalization check; bilinear in the inputs.
double psp_score_unchecked(std::span<const double> fx, std::span<const double> fy, const ScoreMatrix& matrix);

}  // namespace pyralign
