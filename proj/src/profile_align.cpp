#include "pyralign/profile_align.hpp"

#include <algorithm>

#include "pyralign/error.hpp"

namespace pyralign {

Profile::Profile(Alphabet alphabet, std::vector<AlignedSequence> members, std::vector<std::uint32_t> counts)
    : alphabet_(std::move(alphabet)), members_(std::move(members)), counts_(std::move(counts)) {
  width_ = members_.empty() ? 0 : members_.front().size();
}

ProfileColumn Profile::column(std::size_t c) const {
  const std::size_t k = alphabet_.size();
  auto n = counts(c);
  std::uint64_t counted = n[k];
  for (std::size_t r = 0; r < k; ++r) counted += n[r];
  ProfileColumn col;
  col.residue_freq.assign(k, 0.0);
  if (counted == 0) {
    col.gap_freq = 1.0;
    return col;
  }
  const double total = static_cast<double>(counted);
  for (std::size_t r = 0; r < k; ++r) col.residue_freq[r] = n[r] / total;
  col.gap_freq = n[k] / total;
  return col;
}

std::vector<ProfileColumn> Profile::columns() const {
  std::vector<ProfileColumn> cols;
  cols.reserve(width_);
  for (std::size_t c = 0; c < width_; ++c) cols.push_back(column(c));
  return cols;
}

Profile build_profile(std::vector<AlignedSequence> rows, const Alphabet& alphabet) {
  if (rows.empty()) throw Error(ErrorCode::EmptyProfile, "profile needs at least one row");
  const std::size_t width = rows.front().size();
  const std::size_t k = alphabet.size();
  const std::size_t stride = k + 2;
  std::vector<std::uint32_t> counts(width * stride, 0);
  for (const auto& row : rows) {
    if (row.size() != width)
      throw Error(ErrorCode::RaggedRows, "row '" + row.id + "' has width " + std::to_string(row.size()) +
                                             ", expected " + std::to_string(width));
    for (std::size_t c = 0; c < width; ++c) {
      char cell = row.cells[c];
      std::size_t slot;
      if (cell == alphabet.gap_symbol()) {
        slot = k;
      } else {
        int code = alphabet.code(cell);
        if (code == Alphabet::kNotInAlphabet)
          throw Error(ErrorCode::IllegalSymbol, "column " + std::to_string(c) + " character '" + cell + "' in '" +
                                                    row.id + "'");
        slot = static_cast<std::size_t>(code) == k ? k + 1 : static_cast<std::size_t>(code);
      }
      ++counts[c * stride + slot];
    }
  }
  return Profile(alphabet, std::move(rows), std::move(counts));
}

Profile profile_of_pairwise(const PairwiseAlignment& pa, const Alphabet& alphabet) {
  return build_profile({pa.row_a, pa.row_b}, alphabet);
}

Profile pad_left(const Profile& p, std::size_t columns) {
  std::vector<AlignedSequence> members = p.members();
  for (auto& m : members) m.cells.insert(0, columns, kGap);
  const std::size_t stride = p.stride();
  std::vector<std::uint32_t> counts(columns * stride, 0);
  for (std::size_t c = 0; c < columns; ++c) counts[c * stride + p.alphabet().size()] = static_cast<std::uint32_t>(p.weight());
  counts.insert(counts.end(), p.counts_.begin(), p.counts_.end());
  return Profile(p.alphabet(), std::move(members), std::move(counts));
}

namespace {

enum class Step : std::uint8_t { Diag, Up, Left };

/// Frequencies laid out for the DP inner loop.
struct ColumnTable {
  std::size_t k = 0;
  std::vector<double> freq;      // width * k residue frequencies
  std::vector<double> weighted;  // width * k rows of S * f
  std::vector<double> gap_scale; // 1 - gap frequency
};

ColumnTable tabulate(const Profile& p, const ScoreMatrix& matrix, bool weight_by_matrix) {
  ColumnTable t;
  t.k = matrix.size();
  const std::size_t w = p.width();
  t.freq.resize(w * t.k);
  t.gap_scale.resize(w);
  auto s = matrix.residue_scores();
  if (weight_by_matrix) t.weighted.assign(w * t.k, 0.0);
  for (std::size_t c = 0; c < w; ++c) {
    ProfileColumn col = p.column(c);
    std::copy(col.residue_freq.begin(), col.residue_freq.end(), t.freq.begin() + c * t.k);
    t.gap_scale[c] = 1.0 - col.gap_freq;
    if (weight_by_matrix) {
      double* out = &t.weighted[c * t.k];
      for (std::size_t i = 0; i < t.k; ++i) {
        double f = col.residue_freq[i];
        if (f == 0.0) continue;
        for (std::size_t j = 0; j < t.k; ++j) out[j] += f * s[i * t.k + j];
      }
    }
  }
  return t;
}

}  // namespace

struct ProfileMerger {
  static Profile assemble(const Profile& x, const Profile& y, const std::vector<Step>& steps) {
    const std::size_t width = steps.size();
    const std::size_t stride = x.stride();
    const std::size_t k = x.alphabet().size();
    std::vector<AlignedSequence> members;
    members.reserve(x.weight() + y.weight());
    for (const auto& row : x.members()) {
      AlignedSequence out{row.id, {}};
      out.cells.reserve(width);
      std::size_t c = 0;
      for (Step s : steps) out.cells.push_back(s == Step::Left ? kGap : row.cells[c++]);
      members.push_back(std::move(out));
    }
    for (const auto& row : y.members()) {
      AlignedSequence out{row.id, {}};
      out.cells.reserve(width);
      std::size_t c = 0;
      for (Step s : steps) out.cells.push_back(s == Step::Up ? kGap : row.cells[c++]);
      members.push_back(std::move(out));
    }

    std::vector<std::uint32_t> counts(width * stride, 0);
    std::size_t cx = 0, cy = 0;
    for (std::size_t z = 0; z < width; ++z) {
      std::uint32_t* out = &counts[z * stride];
      if (steps[z] != Step::Left) {
        auto src = x.counts(cx++);
        for (std::size_t r = 0; r < stride; ++r) out[r] += src[r];
      } else {
        out[k] += static_cast<std::uint32_t>(x.weight());
      }
      if (steps[z] != Step::Up) {
        auto src = y.counts(cy++);
        for (std::size_t r = 0; r < stride; ++r) out[r] += src[r];
      } else {
        out[k] += static_cast<std::uint32_t>(y.weight());
      }
    }
    return Profile(x.alphabet(), std::move(members), std::move(counts));
  }
};

ProfileAlignment align_profiles_scored(const Profile& x, const Profile& y, const ScoringScheme& scheme) {
  if (x.weight() == 0 || y.weight() == 0 || x.width() == 0 || y.width() == 0)
    throw Error(ErrorCode::EmptyProfile, "cannot align an empty profile");
  if (!(x.alphabet() == scheme.matrix.alphabet()) || !(y.alphabet() == scheme.matrix.alphabet()))
    throw Error(ErrorCode::InvalidAlphabet, "profile alphabet differs from the scoring alphabet");

  const ColumnTable tx = tabulate(x, scheme.matrix, true);
  const ColumnTable ty = tabulate(y, scheme.matrix, false);
  const std::size_t k = tx.k;
  const std::size_t wx = x.width();
  const std::size_t wy = y.width();
  const std::size_t cols = wy + 1;
  const double gap = scheme.linear_gap();

  std::vector<Step> moves((wx + 1) * cols, Step::Diag);
  std::vector<double> prev(cols), cur(cols);
  prev[0] = 0.0;
  for (std::size_t j = 1; j <= wy; ++j) {
    prev[j] = prev[j - 1] + gap * ty.gap_scale[j - 1];
    moves[j] = Step::Left;
  }
  for (std::size_t i = 1; i <= wx; ++i) {
    const double up_cost = gap * tx.gap_scale[i - 1];
    const double* vx = &tx.weighted[(i - 1) * k];
    Step* mv = &moves[i * cols];
    cur[0] = prev[0] + up_cost;
    mv[0] = Step::Up;
    for (std::size_t j = 1; j <= wy; ++j) {
      const double* fy = &ty.freq[(j - 1) * k];
      double psp = 0.0;
      for (std::size_t r = 0; r < k; ++r) psp += vx[r] * fy[r];
      double v = prev[j - 1] + psp;
      Step s = Step::Diag;
      double u = prev[j] + up_cost;
      if (u > v) {
        v = u;
        s = Step::Up;
      }
      double l = cur[j - 1] + gap * ty.gap_scale[j - 1];
      if (l > v) {
        v = l;
        s = Step::Left;
      }
      cur[j] = v;
      mv[j] = s;
    }
    std::swap(prev, cur);
  }

  std::vector<Step> steps;
  steps.reserve(wx + wy);
  for (std::size_t i = wx, j = wy; i > 0 || j > 0;) {
    Step s = moves[i * cols + j];
    steps.push_back(s);
    if (s != Step::Left) --i;
    if (s != Step::Up) --j;
  }
  std::reverse(steps.begin(), steps.end());

  ProfileAlignment out{ProfileMerger::assemble(x, y, steps), prev[wy], {}, {}};
  out.x_columns.reserve(steps.size());
  out.y_columns.reserve(steps.size());
  std::size_t cx = 0, cy = 0;
  for (Step s : steps) {
    out.x_columns.push_back(s == Step::Left ? std::nullopt : std::optional<std::size_t>(cx++));
    out.y_columns.push_back(s == Step::Up ? std::nullopt : std::optional<std::size_t>(cy++));
  }
  return out;
}

Profile align_profiles(const Profile& x, const Profile& y, const ScoringScheme& scheme) {
  return align_profiles_scored(x, y, scheme).merged;
}

}  // namespace pyralign
