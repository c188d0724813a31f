#include "pyralign/pairwise_dp.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

#include "pyralign/error.hpp"
#include "pyralign/worker_pool.hpp"

namespace pyralign {

namespace {

constexpr double kMinusInf = -std::numeric_limits<double>::infinity();
constexpr std::uint8_t kUpExtended = 1;
constexpr std::uint8_t kLeftExtended = 2;

std::vector<int> encode(const Sequence& s, const Alphabet& alphabet) {
  std::vector<int> codes(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    int c = alphabet.code(s[i]);
    if (c == Alphabet::kNotInAlphabet)
      throw Error(ErrorCode::IllegalSymbol, "position " + std::to_string(i) + " character '" + s[i] + "' in '" +
                                                s.id() + "' is not in the scoring alphabet");
    codes[i] = c;
  }
  return codes;
}

void fill_linear(DpMatrix& dp, const std::vector<int>& x, const std::vector<int>& y, const ScoringScheme& scheme,
                 DpMode mode) {
  const double gap = scheme.linear_gap();
  const std::size_t cols = dp.cols;
  const bool local = mode == DpMode::Local;
  for (std::size_t i = 1; i < dp.rows; ++i) {
    const double* prev = &dp.best[(i - 1) * cols];
    double* cur = &dp.best[i * cols];
    Move* mv = &dp.moves[i * cols];
    const int xi = x[i - 1];
    for (std::size_t j = 1; j < cols; ++j) {
      double v = prev[j - 1] + scheme.matrix.by_code(xi, y[j - 1]);
      Move m = Move::Diag;
      double u = prev[j] + gap;
      if (u > v) {
        v = u;
        m = Move::Up;
      }
      double l = cur[j - 1] + gap;
      if (l > v) {
        v = l;
        m = Move::Left;
      }
      if (local && v <= 0) {
        v = 0;
        m = Move::Stop;
      }
      cur[j] = v;
      mv[j] = m;
    }
  }
}

void fill_affine(DpMatrix& dp, const std::vector<int>& x, const std::vector<int>& y, const ScoringScheme& scheme,
                 DpMode mode) {
  const double open = scheme.gap_open;
  const double extend = scheme.gap_extend;
  const std::size_t cols = dp.cols;
  const bool local = mode == DpMode::Local;
  dp.up.assign(dp.best.size(), kMinusInf);
  dp.left.assign(dp.best.size(), kMinusInf);
  dp.flags.assign(dp.best.size(), 0);
  for (std::size_t i = 1; i < dp.rows; ++i) {
    const int xi = x[i - 1];
    for (std::size_t j = 1; j < cols; ++j) {
      const std::size_t c = i * cols + j;
      const std::size_t above = c - cols;
      const std::size_t before = c - 1;
      std::uint8_t flag = 0;

      double up = dp.best[above] + open;
      double up_ext = dp.up[above] + extend;
      if (up_ext > up) {
        up = up_ext;
        flag |= kUpExtended;
      }
      double left = dp.best[before] + open;
      double left_ext = dp.left[before] + extend;
      if (left_ext > left) {
        left = left_ext;
        flag |= kLeftExtended;
      }

      double v = dp.best[above - 1] + scheme.matrix.by_code(xi, y[j - 1]);
      Move m = Move::Diag;
      if (up > v) {
        v = up;
        m = Move::Up;
      }
      if (left > v) {
        v = left;
        m = Move::Left;
      }
      if (local && v <= 0) {
        v = 0;
        m = Move::Stop;
      }
      dp.best[c] = v;
      dp.moves[c] = m;
      dp.up[c] = up;
      dp.left[c] = left;
      dp.flags[c] = flag;
    }
  }
}

/// Aligned columns between the traceback start (i0, j0) and end (i1, j1).
struct Path {
  std::size_t i0 = 0, j0 = 0, i1 = 0, j1 = 0;
  std::string x_cells;
  std::string y_cells;
};

Path trace(const DpMatrix& dp, const Sequence& x, const Sequence& y, std::size_t i, std::size_t j, DpMode mode) {
  const bool affine = !dp.flags.empty();
  enum class State { Best, Up, Left } state = State::Best;
  Path path;
  path.i1 = i;
  path.j1 = j;
  auto stops = [&] {
    if (mode == DpMode::Overlap) return i == 0 || j == 0;
    return state == State::Best && dp.move(i, j) == Move::Stop;
  };
  while (!stops()) {
    switch (state) {
      case State::Best:
        switch (dp.move(i, j)) {
          case Move::Diag:
            path.x_cells.push_back(x[i - 1]);
            path.y_cells.push_back(y[j - 1]);
            --i;
            --j;
            break;
          case Move::Up:
            if (affine) {
              state = State::Up;
            } else {
              path.x_cells.push_back(x[i - 1]);
              path.y_cells.push_back(kGap);
              --i;
            }
            break;
          case Move::Left:
            if (affine) {
              state = State::Left;
            } else {
              path.x_cells.push_back(kGap);
              path.y_cells.push_back(y[j - 1]);
              --j;
            }
            break;
          case Move::Stop:
            throw Error(ErrorCode::EmptyInput, "traceback reached an interior stop cell");
        }
        break;
      case State::Up: {
        bool extended = dp.flags[dp.at(i, j)] & kUpExtended;
        path.x_cells.push_back(x[i - 1]);
        path.y_cells.push_back(kGap);
        --i;
        if (!extended) state = State::Best;
        break;
      }
      case State::Left: {
        bool extended = dp.flags[dp.at(i, j)] & kLeftExtended;
        path.x_cells.push_back(kGap);
        path.y_cells.push_back(y[j - 1]);
        --j;
        if (!extended) state = State::Best;
        break;
      }
    }
  }
  path.i0 = i;
  path.j0 = j;
  std::reverse(path.x_cells.begin(), path.x_cells.end());
  std::reverse(path.y_cells.begin(), path.y_cells.end());
  return path;
}

void require_non_empty(const Sequence& a, const Sequence& b) {
  // Sequence construction already forbids empty residues; this guards
  // against moved-from values.
  if (a.size() == 0 || b.size() == 0) throw Error(ErrorCode::EmptyInput, "cannot align an empty sequence");
}

}  // namespace

DpMatrix fill_dp_matrix(const Sequence& x, const Sequence& y, const ScoringScheme& scheme, DpMode mode) {
  require_non_empty(x, y);
  const Alphabet& alphabet = scheme.matrix.alphabet();
  auto xc = encode(x, alphabet);
  auto yc = encode(y, alphabet);
  DpMatrix dp;
  dp.rows = x.size() + 1;
  dp.cols = y.size() + 1;
  dp.best.assign(dp.rows * dp.cols, 0.0);
  dp.moves.assign(dp.rows * dp.cols, Move::Stop);
  if (scheme.gap_model == GapModel::Affine) {
    fill_affine(dp, xc, yc, scheme, mode);
  } else {
    fill_linear(dp, xc, yc, scheme, mode);
  }
  return dp;
}

OverlapRecord overlap_align(const Sequence& read, const Sequence& reference, const ScoringScheme& scheme) {
  DpMatrix dp = fill_dp_matrix(read, reference, scheme, DpMode::Overlap);
  const std::size_t m = read.size();
  const std::size_t n = reference.size();

  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  candidates.reserve(m + n + 1);
  for (std::size_t j = 0; j <= n; ++j) candidates.emplace_back(m, j);
  for (std::size_t i = 0; i < m; ++i) candidates.emplace_back(i, n);

  double best = kMinusInf;
  for (auto [i, j] : candidates) best = std::max(best, dp.score(i, j));

  Path chosen;
  bool have = false;
  for (auto [i, j] : candidates) {
    if (dp.score(i, j) != best) continue;
    Path p = trace(dp, read, reference, i, j, DpMode::Overlap);
    // smallest start, then smallest end, then most read consumed
    auto key = [m](const Path& q) { return std::make_tuple(q.j0, q.j1, m - q.i1); };
    if (!have || key(p) < key(chosen)) {
      chosen = std::move(p);
      have = true;
    }
  }

  OverlapRecord rec;
  rec.read_id = read.id();
  rec.score = best;
  rec.start = std::min(chosen.j0, n - 1);
  rec.end = std::max(chosen.j1, rec.start + 1);
  rec.leading_gaps = rec.start;
  rec.trailing_gaps = n - rec.end;

  const std::string& x = read.residues();
  const std::string& y = reference.residues();
  std::string& rrow = rec.aligned_read.cells;
  std::string& yrow = rec.aligned_reference.cells;
  rrow.reserve(n + m);
  yrow.reserve(n + m);

  rrow.append(x, 0, chosen.i0);
  yrow.append(chosen.i0, kGap);
  rrow.append(chosen.j0, kGap);
  yrow.append(y, 0, chosen.j0);
  rrow += chosen.x_cells;
  yrow += chosen.y_cells;
  rrow.append(n - chosen.j1, kGap);
  yrow.append(y, chosen.j1);
  rrow.append(x, chosen.i1);
  yrow.append(m - chosen.i1, kGap);

  rec.aligned_read.id = read.id();
  rec.aligned_reference.id = reference.id();
  return rec;
}

PairwiseAlignment local_align(const Sequence& a, const Sequence& b, const ScoringScheme& scheme) {
  DpMatrix dp = fill_dp_matrix(a, b, scheme, DpMode::Local);
  std::size_t bi = 0, bj = 0;
  double best = 0.0;
  for (std::size_t i = 1; i < dp.rows; ++i)
    for (std::size_t j = 1; j < dp.cols; ++j)
      if (dp.score(i, j) > best) {
        best = dp.score(i, j);
        bi = i;
        bj = j;
      }

  Path core = trace(dp, a, b, bi, bj, DpMode::Local);
  const std::string& x = a.residues();
  const std::string& y = b.residues();

  PairwiseAlignment pa;
  pa.score = best;
  std::string& ra = pa.row_a.cells;
  std::string& rb = pa.row_b.cells;
  ra.append(x, 0, core.i0);
  rb.append(core.i0, kGap);
  ra.append(core.j0, kGap);
  rb.append(y, 0, core.j0);
  pa.core_begin = ra.size();
  ra += core.x_cells;
  rb += core.y_cells;
  pa.core_end = ra.size();
  ra.append(x, core.i1);
  rb.append(x.size() - core.i1, kGap);
  ra.append(y.size() - core.j1, kGap);
  rb.append(y, core.j1);
  pa.row_a.id = a.id();
  pa.row_b.id = b.id();
  return pa;
}

OverlapIndex build_overlap_index(std::span<const Read> reads, const Sequence& reference, const ScoringScheme& scheme,
                                 WorkerPool* pool) {
  if (reads.empty()) throw Error(ErrorCode::EmptyInput, "no reads to place");
  std::vector<OverlapRecord> records(reads.size());
  for_each_index(pool, reads.size(), [&](std::size_t k) {
    try {
      records[k] = overlap_align(reads[k].sequence, reference, scheme);
      records[k].source_index = reads[k].source_index;
    } catch (const Error& e) {
      throw Error(e.code(), "read '" + reads[k].id() + "': " + e.what());
    }
  });

  OverlapIndex index;
  for (auto& rec : records) {
    std::string id = rec.read_id;
    if (!index.emplace(id, std::move(rec)).second) throw Error(ErrorCode::DuplicateId, "read id '" + id + "'");
  }
  return index;
}

}  // namespace pyralign
