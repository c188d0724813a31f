// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls into the DP kernels it is used to check.
#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "pyralign/scoring.hpp"

namespace pyralign::oracle {

enum class Column { Diag, XGap, YGap };

struct Enumerated {
  double overlap = 0.0;
  double local = 0.0;
  std::size_t alignments = 0;
};

/// Walks every global alignment of x and y (every monotone lattice path).
/// For each path: the overlap score leaves gap columns free when the gapped
/// sequence has consumed none or all of its residues; the local score is the
/// best contiguous run of columns (Kadane), empty run scoring zero. Gap runs
/// cost open + (len - 1) * extend.
class AlignmentEnumerator {
 public:
  AlignmentEnumerator(const std::string& x, const std::string& y, const ScoringScheme& scheme)
      : m_(x.size()), n_(y.size()), affine_(scheme.gap_model == GapModel::Affine),
        open_(scheme.gap_open), extend_(scheme.gap_extend), sub_(m_ * n_) {
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < n_; ++j) sub_[i * n_ + j] = scheme.matrix(x[i], y[j]);
  }

  Enumerated run() {
    result_ = Enumerated{-INFINITY, 0.0, 0};
    walk(0, 0, Column::Diag, false, 0.0, 0.0, 0.0);
    return result_;
  }

 private:
  double gap_cost(Column prev, bool have_prev, Column now) const {
    if (!affine_) return open_;
    return (have_prev && prev == now) ? extend_ : open_;
  }

  void walk(std::size_t i, std::size_t j, Column prev, bool have_prev, double overlap, double run, double best) {
    if (i == m_ && j == n_) {
      ++result_.alignments;
      if (overlap > result_.overlap) result_.overlap = overlap;
      if (best > result_.local) result_.local = best;
      return;
    }
    const double carried = run > 0.0 ? run : 0.0;
    if (i < m_ && j < n_) {
      const double r = carried + sub_[i * n_ + j];
      walk(i + 1, j + 1, Column::Diag, true, overlap + sub_[i * n_ + j], r, r > best ? r : best);
    }
    if (i < m_) {
      const double cost = gap_cost(prev, have_prev, Column::YGap);
      const double r = carried + cost;
      const bool free = j == 0 || j == n_;
      walk(i + 1, j, Column::YGap, true, free ? overlap : overlap + cost, r, r > best ? r : best);
    }
    if (j < n_) {
      const double cost = gap_cost(prev, have_prev, Column::XGap);
      const double r = carried + cost;
      const bool free = i == 0 || i == m_;
      walk(i, j + 1, Column::XGap, true, free ? overlap : overlap + cost, r, r > best ? r : best);
    }
  }

  std::size_t m_, n_;
  bool affine_;
  double open_, extend_;
  std::vector<double> sub_;
  Enumerated result_;
};

inline Enumerated enumerate(const std::string& x, const std::string& y, const ScoringScheme& scheme) {
  return AlignmentEnumerator(x, y, scheme).run();
}

/// Scores two equal-length rows column by column. With free_end_gaps, gap
/// columns before the gapped row's first residue or after its last are free.
inline double score_rows(const std::string& a, const std::string& b, const ScoringScheme& scheme,
                         bool free_end_gaps, std::size_t first = 0, std::size_t last = std::string::npos) {
  last = std::min(last, a.size());
  auto residues_before = [](const std::string& row, std::size_t c) {
    return std::count_if(row.begin(), row.begin() + static_cast<long>(c), [](char ch) { return ch != '-'; });
  };
  const auto total_a = residues_before(a, a.size()), total_b = residues_before(b, b.size());
  double score = 0.0;
  int prev = -1;  // 0 diag, 1 gap in b, 2 gap in a
  for (std::size_t c = first; c < last; ++c) {
    if (a[c] == '-' && b[c] == '-') return NAN;
    int kind = a[c] == '-' ? 2 : (b[c] == '-' ? 1 : 0);
    if (kind == 0) {
      score += scheme.matrix(a[c], b[c]);
    } else {
      const std::string& gapped = kind == 1 ? b : a;
      const auto seen = residues_before(gapped, c);
      const auto total = kind == 1 ? total_b : total_a;
      bool free = free_end_gaps && (seen == 0 || seen == total);
      double cost = (scheme.gap_model == GapModel::Affine && prev == kind) ? scheme.gap_extend : scheme.gap_open;
      if (!free) score += cost;
    }
    prev = kind;
  }
  return score;
}

/// Global alignment score with a linear gap, filled as a textbook recurrence.
inline double global_score(const std::string& x, const std::string& y, const ScoringScheme& scheme) {
  const double g = scheme.linear_gap();
  std::vector<std::vector<double>> t(x.size() + 1, std::vector<double>(y.size() + 1, 0.0));
  for (std::size_t i = 1; i <= x.size(); ++i) t[i][0] = g * static_cast<double>(i);
  for (std::size_t j = 1; j <= y.size(); ++j) t[0][j] = g * static_cast<double>(j);
  for (std::size_t i = 1; i <= x.size(); ++i)
    for (std::size_t j = 1; j <= y.size(); ++j)
      t[i][j] = std::max({t[i - 1][j - 1] + scheme.matrix(x[i - 1], y[j - 1]), t[i - 1][j] + g, t[i][j - 1] + g});
  return t[x.size()][y.size()];
}

/// Profile sum-of-pairs as a plain double sum over residue pairs, with the
/// log-odds recomputed from the probabilities.
inline double psp_double_sum(const std::vector<double>& fx, const std::vector<double>& fy,
                             const std::vector<double>& background, const std::vector<double>& joint) {
  const std::size_t k = background.size();
  double total = 0.0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      total += fx[i] * fy[j] * std::log(joint[i * k + j] / (background[i] * background[j]));
  return total;
}

/// Every string over `symbols` with length in [1, max_len].
inline std::vector<std::string> all_strings(const std::string& symbols, std::size_t max_len) {
  std::vector<std::string> out;
  std::vector<std::string> layer{""};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    for (const auto& s : layer)
      for (char c : symbols) next.push_back(s + c);
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

inline std::string random_string(std::mt19937_64& rng, const std::string& symbols, std::size_t min_len,
                                  std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, symbols.size() - 1);
  std::string s(len(rng), ' ');
  for (auto& c : s) c = symbols[pick(rng)];
  return s;
}

}  // namespace pyralign::oracle
