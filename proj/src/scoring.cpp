#include "pyralign/scoring.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "pyralign/error.hpp"

namespace pyralign {

namespace {

constexpr double kNormTolerance = 1e-9;

char upper(char c) { return static_cast<char>(std::toupper(static_cast<unsigned char>(c))); }

}  // namespace

ScoreMatrix::ScoreMatrix(Alphabet alphabet, std::vector<double> scores, double ambiguity_score)
    : alphabet_(std::move(alphabet)),
      scores_(std::move(scores)),
      ambiguity_score_(ambiguity_score),
      stride_(alphabet_.size() + 1) {
  const std::size_t k = alphabet_.size();
  if (scores_.size() != k * k)
    throw Error(ErrorCode::InvalidScores, "score table has " + std::to_string(scores_.size()) + " entries, expected " +
                                              std::to_string(k * k));
  coded_.assign(stride_ * stride_, ambiguity_score_);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) coded_[a * stride_ + b] = scores_[a * k + b];
}

bool ScoreMatrix::is_symmetric() const noexcept {
  const std::size_t k = size();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      if (scores_[a * k + b] != scores_[b * k + a]) return false;
  return true;
}

ScoringScheme ScoringScheme::with_linear_gap(double gap) const {
  if (gap > 0) throw Error(ErrorCode::InvalidScores, "gap penalty must be non-positive");
  ScoringScheme s = *this;
  s.gap_model = GapModel::Linear;
  s.gap_open = s.gap_extend = gap;
  return s;
}

ScoringScheme ScoringScheme::with_affine_gaps(double open, double extend) const {
  if (!(open <= extend && extend <= 0))
    throw Error(ErrorCode::InvalidScores, "affine gaps need gap_open <= gap_extend <= 0");
  ScoringScheme s = *this;
  s.gap_model = GapModel::Affine;
  s.gap_open = open;
  s.gap_extend = extend;
  return s;
}

ScoringScheme simple_dna_model(double match, double mismatch) {
  if (!(match > mismatch)) throw Error(ErrorCode::InvalidScores, "match must exceed mismatch");
  Alphabet dna = Alphabet::dna();
  const std::size_t k = dna.size();
  std::vector<double> table(k * k, mismatch);
  for (std::size_t i = 0; i < k; ++i) table[i * k + i] = match;
  return scheme_from_matrix(ScoreMatrix(std::move(dna), std::move(table), mismatch), -5.0);
}

ScoringScheme scheme_from_matrix(ScoreMatrix matrix, double gap) {
  ScoringScheme s{std::move(matrix)};
  return s.with_linear_gap(gap);
}

SubstitutionModel log_odds_from_probabilities(const Alphabet& alphabet, const std::map<char, double>& background,
                                              const std::map<std::pair<char, char>, double>& joint) {
  const std::size_t k = alphabet.size();
  auto residue_index = [&](char c) {
    char u = upper(c);
    if (!alphabet.is_residue(u))
      throw Error(ErrorCode::IllegalSymbol, std::string("probability given for non-residue '") + c + "'");
    return static_cast<std::size_t>(alphabet.code(u));
  };

  std::vector<double> p(k, 0.0);
  std::vector<bool> seen(k, false);
  for (auto [c, prob] : background) {
    std::size_t i = residue_index(c);
    p[i] = prob;
    seen[i] = true;
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!seen[i] || !(p[i] > 0))
      throw Error(ErrorCode::NonPositiveProbability,
                  std::string("background probability of '") + alphabet.symbols()[i] + "' must be positive");
  }

  std::vector<double> pj(k * k, 0.0);
  std::vector<bool> given(k * k, false);
  for (auto [pair, prob] : joint) {
    std::size_t i = residue_index(pair.first);
    std::size_t j = residue_index(pair.second);
    pj[i * k + j] = prob;
    given[i * k + j] = true;
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      std::size_t ij = i * k + j, ji = j * k + i;
      if (given[ij] && given[ji]) {
        if (pj[ij] != pj[ji])
          throw Error(ErrorCode::NotNormalized, std::string("joint probabilities of ") + alphabet.symbols()[i] +
                                                    alphabet.symbols()[j] + " are not symmetric");
      } else if (given[ij]) {
        pj[ji] = pj[ij];
        given[ji] = true;
      } else if (given[ji]) {
        pj[ij] = pj[ji];
        given[ij] = true;
      }
    }
  }
  for (std::size_t n = 0; n < k * k; ++n) {
    if (!given[n] || !(pj[n] > 0))
      throw Error(ErrorCode::NonPositiveProbability, std::string("joint probability of ") +
                                                         alphabet.symbols()[n / k] + alphabet.symbols()[n % k] +
                                                         " must be positive");
  }

  double background_sum = 0.0;
  for (double v : p) background_sum += v;
  if (std::abs(background_sum - 1.0) > kNormTolerance)
    throw Error(ErrorCode::NotNormalized, "background probabilities sum to " + std::to_string(background_sum));
  double joint_sum = 0.0;
  for (double v : pj) joint_sum += v;
  if (std::abs(joint_sum - 1.0) > kNormTolerance)
    throw Error(ErrorCode::NotNormalized, "joint probabilities sum to " + std::to_string(joint_sum));

  std::vector<double> s(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) s[i * k + j] = std::log(pj[i * k + j] / (p[i] * p[j]));
  double floor = *std::min_element(s.begin(), s.end());
  return SubstitutionModel(std::move(p), std::move(pj), ScoreMatrix(alphabet, std::move(s), floor));
}

ScoreMatrix parse_score_matrix(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<char> header;
  std::map<char, std::vector<double>> rows;

  auto parse_error = [&](const std::string& what) {
    return Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + what);
  };

  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (header.empty()) {
      std::string tok;
      while (fields >> tok) {
        if (tok.size() != 1) throw parse_error("header token '" + tok + "' is not a single letter");
        header.push_back(upper(tok[0]));
      }
      continue;
    }
    std::string label;
    fields >> label;
    if (label.size() != 1) throw parse_error("row label '" + label + "' is not a single letter");
    std::vector<double> values;
    std::string tok;
    while (fields >> tok) {
      try {
        std::size_t used = 0;
        values.push_back(std::stod(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw parse_error("'" + tok + "' is not a number");
      }
    }
    if (values.size() != header.size())
      throw parse_error("row has " + std::to_string(values.size()) + " values, header has " +
                        std::to_string(header.size()));
    if (!rows.emplace(upper(label[0]), std::move(values)).second)
      throw parse_error(std::string("duplicate row '") + label + "'");
  }
  if (header.empty()) throw Error(ErrorCode::ParseError, "line 1: no header row");

  const bool nucleotide = std::all_of(header.begin(), header.end(), [](char c) {
    return c == 'A' || c == 'C' || c == 'G' || c == 'T' || c == 'U' || c == 'N' || c == '*';
  });
  const char ambiguity = nucleotide ? 'N' : 'X';

  std::string symbols;
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (header[c] == '*' || header[c] == ambiguity) continue;
    symbols.push_back(header[c]);
    keep.push_back(c);
  }
  Alphabet alphabet(symbols, ambiguity);
  const std::size_t k = symbols.size();
  std::vector<double> table(k * k);
  double lowest = 0.0;
  bool first = true;
  for (std::size_t a = 0; a < k; ++a) {
    auto row = rows.find(symbols[a]);
    if (row == rows.end()) throw Error(ErrorCode::ParseError, std::string("missing row for '") + symbols[a] + "'");
    for (std::size_t b = 0; b < k; ++b) {
      double v = row->second[keep[b]];
      table[a * k + b] = v;
      if (first || v < lowest) lowest = v;
      first = false;
    }
  }
  return ScoreMatrix(std::move(alphabet), std::move(table), lowest);
}

ScoreMatrix load_score_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open matrix file " + path.string());
  return parse_score_matrix(in);
}

double ProfileColumn::residue_mass() const noexcept {
  double m = 0.0;
  for (double f : residue_freq) m += f;
  return m;
}

double psp_score_unchecked(std::span<const double> fx, std::span<const double> fy, const ScoreMatrix& matrix) {
  const std::size_t k = matrix.size();
  auto s = matrix.residue_scores();
  double total = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    if (fx[i] == 0.0) continue;
    double row = 0.0;
    for (std::size_t j = 0; j < k; ++j) row += fy[j] * s[i * k + j];
    total += fx[i] * row;
  }
  return total;
}

double psp_score(const ProfileColumn& x, const ProfileColumn& y, const ScoreMatrix& matrix) {
  const std::size_t k = matrix.size();
  for (const ProfileColumn* col : {&x, &y}) {
    if (col->residue_freq.size() != k)
      throw Error(ErrorCode::UnnormalizedColumn, "column has " + std::to_string(col->residue_freq.size()) +
                                                     " residue frequencies, alphabet has " + std::to_string(k));
    double total = col->residue_mass() + col->gap_freq;
    if (std::abs(total - 1.0) > kNormTolerance)
      throw Error(ErrorCode::UnnormalizedColumn, "column frequencies sum to " + std::to_string(total));
  }
  return psp_score_unchecked(x.residue_freq, y.residue_freq, matrix);
}

double psp_score(const ProfileColumn& x, const ProfileColumn& y, const SubstitutionModel& model) {
  return psp_score(x, y, model.log_odds());
}

}  // namespace pyralign
