#include <random>

#include "oracles.hpp"
#include "pyralign/pairwise_dp.hpp"
#include "pyralign/worker_pool.hpp"
#include "test_support.hpp"

using namespace pyralign;
using testing::error_code;

namespace {

ScoringScheme unit_scheme() { return simple_dna_model(1, -1).with_linear_gap(-2); }

Sequence seq(const std::string& residues, const std::string& id = "s") { return Sequence(id, residues); }

}  // namespace

TEST_CASE("overlap_align examples") {
  const ScoringScheme s = unit_scheme();

  SUBCASE("identical") {
    auto rec = overlap_align(seq("ACGT"), seq("ACGT"), s);
    CHECK(rec.score == 4);
    CHECK(rec.start == 0);
    CHECK(rec.end == 4);
    CHECK(rec.leading_gaps == 0);
    CHECK(rec.trailing_gaps == 0);
    CHECK(rec.aligned_read.cells == "ACGT");
  }
  SUBCASE("read inside the reference") {
    auto rec = overlap_align(seq("CGT"), seq("AAACGTAAA"), s);
    CHECK(oracle::enumerate("CGT", "AAACGTAAA", s).overlap == 3);
    CHECK(rec.score == 3);
    CHECK(rec.start == 3);
    CHECK(rec.end == 6);
    CHECK(rec.leading_gaps == 3);
    CHECK(rec.trailing_gaps == 3);
    CHECK(rec.aligned_read.cells == "---CGT---");
  }
  SUBCASE("read hanging off the reference end") {
    auto rec = overlap_align(seq("TTTT"), seq("ACGT"), s);
    CHECK(oracle::enumerate("TTTT", "ACGT", s).overlap == 1);
    CHECK(rec.score == 1);
    CHECK(rec.start == 3);
    CHECK(rec.end == 4);
    CHECK(rec.aligned_read.cells == "---TTTT");
    CHECK(rec.aligned_reference.cells == "ACGT---");
  }
  SUBCASE("read hanging off the reference start") {
    auto rec = overlap_align(seq("GGAC"), seq("ACTTTT"), s);
    CHECK(rec.score == 2);
    CHECK(rec.start == 0);
    CHECK(rec.end == 2);
    CHECK(rec.aligned_read.cells == "GGAC----");
    CHECK(rec.aligned_reference.cells == "--ACTTTT");
  }
  SUBCASE("no credible placement") {
    auto rec = overlap_align(seq("A"), seq("C"), s);
    CHECK(rec.score == 0);
    CHECK(rec.start < rec.end);
    CHECK(rec.end <= 1);
  }
}

TEST_CASE("overlap_align prefers the leftmost of equal placements") {
  const ScoringScheme s = unit_scheme();
  auto rec = overlap_align(seq("ACG"), seq("TACGTTACGT"), s);
  CHECK(rec.score == 3);
  CHECK(rec.start == 1);
  CHECK(rec.end == 4);
}

TEST_CASE("local_align examples") {
  const ScoringScheme s = unit_scheme();

  SUBCASE("identical") {
    auto pa = local_align(seq("ACGT", "a"), seq("ACGT", "b"), s);
    CHECK(pa.score == 4);
    CHECK(pa.row_a.cells == "ACGT");
    CHECK(pa.row_b.cells == "ACGT");
    CHECK(pa.core_begin == 0);
    CHECK(pa.core_end == 4);
    CHECK(pa.row_a.id == "a");
    CHECK(pa.row_b.id == "b");
  }
  SUBCASE("shared suffix/prefix") {
    auto pa = local_align(seq("AAATTT"), seq("TTTGGG"), s);
    CHECK(oracle::enumerate("AAATTT", "TTTGGG", s).local == 3);
    CHECK(pa.score == 3);
    CHECK(pa.row_a.cells.substr(pa.core_begin, pa.core_end - pa.core_begin) == "TTT");
    CHECK(pa.row_b.cells.substr(pa.core_begin, pa.core_end - pa.core_begin) == "TTT");
    CHECK(pa.row_a.cells == "AAATTT---");
    CHECK(pa.row_b.cells == "---TTTGGG");
  }
  SUBCASE("nothing in common") {
    auto pa = local_align(seq("AAA"), seq("GGG"), s);
    CHECK(pa.score == 0);
    CHECK(pa.core_begin == pa.core_end);
    CHECK(pa.row_a.cells == "AAA---");
    CHECK(pa.row_b.cells == "---GGG");
  }
}

TEST_CASE("dp matrix boundary invariants") {
  const ScoringScheme s = unit_scheme();
  std::mt19937_64 rng(3);
  for (auto scheme : {s, s.with_affine_gaps(-3, -1)}) {
    for (int t = 0; t < 50; ++t) {
      auto x = oracle::random_string(rng, "ACGT", 1, 12);
      auto y = oracle::random_string(rng, "ACGT", 1, 12);
      DpMatrix ov = fill_dp_matrix(seq(x), seq(y), scheme, DpMode::Overlap);
      for (std::size_t j = 0; j < ov.cols; ++j) CHECK(ov.score(0, j) == 0);
      for (std::size_t i = 0; i < ov.rows; ++i) CHECK(ov.score(i, 0) == 0);
      DpMatrix lo = fill_dp_matrix(seq(x), seq(y), scheme, DpMode::Local);
      for (double v : lo.best) CHECK(v >= 0);
    }
  }
}

TEST_CASE("kernels agree with exhaustive enumeration") {
  const ScoringScheme linear = unit_scheme();
  const ScoringScheme dna = simple_dna_model(2, -3).with_linear_gap(-5);
  const ScoringScheme affine = simple_dna_model(2, -3).with_affine_gaps(-5, -2);
  const ScoringScheme cheap_open = simple_dna_model(1, -1).with_affine_gaps(-2, -1);

  auto check_pair = [](const std::string& x, const std::string& y, const ScoringScheme& scheme) {
    auto want = oracle::enumerate(x, y, scheme);
    auto ov = overlap_align(seq(x), seq(y), scheme);
    auto lo = local_align(seq(x), seq(y), scheme);
    INFO(x, " / ", y);
    CHECK(ov.score == want.overlap);
    CHECK(lo.score == want.local);
  };

  SUBCASE("exhaustive up to length 3") {
    auto strings = oracle::all_strings("ACGT", 3);
    for (const auto& x : strings)
      for (const auto& y : strings) {
        check_pair(x, y, linear);
        check_pair(x, y, affine);
      }
  }
  SUBCASE("random pairs up to length 7") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 400; ++t) {
      auto x = oracle::random_string(rng, "ACGT", 1, 7);
      auto y = oracle::random_string(rng, "ACGT", 1, 7);
      for (const auto* scheme : {&linear, &dna, &affine, &cheap_open}) check_pair(x, y, *scheme);
    }
  }
}

TEST_CASE("returned rows rescore to the reported score and round-trip") {
  std::mt19937_64 rng(5);
  const ScoringScheme schemes[] = {unit_scheme(), simple_dna_model(2, -3).with_linear_gap(-5),
                                   simple_dna_model(2, -3).with_affine_gaps(-5, -2)};
  for (const auto& scheme : schemes) {
    for (int t = 0; t < 300; ++t) {
      auto x = oracle::random_string(rng, "ACGT", 1, 20);
      auto y = oracle::random_string(rng, "ACGT", 1, 30);
      auto ov = overlap_align(seq(x, "r"), seq(y, "ref"), scheme);
      REQUIRE(ov.aligned_read.size() == ov.aligned_reference.size());
      CHECK(oracle::score_rows(ov.aligned_read.cells, ov.aligned_reference.cells, scheme, true) == ov.score);
      CHECK(strip_gaps(ov.aligned_read).residues() == x);
      CHECK(strip_gaps(ov.aligned_reference).residues() == y);
      CHECK(ov.start < ov.end);
      CHECK(ov.end <= y.size());

      auto lo = local_align(seq(x, "a"), seq(y, "b"), scheme);
      REQUIRE(lo.row_a.size() == lo.row_b.size());
      CHECK(oracle::score_rows(lo.row_a.cells, lo.row_b.cells, scheme, false, lo.core_begin, lo.core_end) ==
            lo.score);
      CHECK(strip_gaps(lo.row_a).residues() == x);
      CHECK(strip_gaps(lo.row_b).residues() == y);
      for (std::size_t c = 0; c < lo.row_a.size(); ++c)
        CHECK_FALSE((lo.row_a.cells[c] == '-' && lo.row_b.cells[c] == '-'));
    }
  }
}

TEST_CASE("appending to the reference never lowers a fully consumed overlap") {
  std::mt19937_64 rng(9);
  const ScoringScheme s = simple_dna_model(2, -3).with_linear_gap(-5);
  std::size_t checked = 0;
  for (int t = 0; t < 500; ++t) {
    auto read = oracle::random_string(rng, "ACGT", 1, 10);
    auto ref = oracle::random_string(rng, "ACGT", 1, 15);
    DpMatrix dp = fill_dp_matrix(seq(read), seq(ref), s, DpMode::Overlap);
    double last_row = 0;
    for (std::size_t j = 0; j < dp.cols; ++j) last_row = std::max(last_row, dp.score(dp.rows - 1, j));
    double before = overlap_align(seq(read), seq(ref), s).score;
    if (last_row < before) continue;  // optimum needs the read to run off the reference end
    ++checked;
    for (char c : std::string("ACGT")) CHECK(overlap_align(seq(read), seq(ref + c), s).score >= before);
  }
  CHECK(checked > 100);
}

TEST_CASE("an overhanging read can lose score when the reference grows") {
  const ScoringScheme s = simple_dna_model(2, -3).with_linear_gap(-5);
  CHECK(overlap_align(seq("CA"), seq("C"), s).score == 2);
  CHECK(oracle::enumerate("CA", "CG", s).overlap == 0);
  CHECK(overlap_align(seq("CA"), seq("CG"), s).score == 0);
}

TEST_CASE("tracebacks are deterministic") {
  std::mt19937_64 rng(13);
  const ScoringScheme s = unit_scheme();
  for (int t = 0; t < 100; ++t) {
    auto x = oracle::random_string(rng, "AC", 1, 15);
    auto y = oracle::random_string(rng, "AC", 1, 15);
    auto a = overlap_align(seq(x), seq(y), s);
    auto b = overlap_align(seq(x), seq(y), s);
    CHECK(a.aligned_read == b.aligned_read);
    CHECK(a.start == b.start);
    CHECK(local_align(seq(x), seq(y), s).row_a == local_align(seq(x), seq(y), s).row_a);
  }
}

TEST_CASE("ambiguity symbols score as mismatches in the kernels") {
  const ScoringScheme s = unit_scheme();
  auto rec = overlap_align(seq("ANGT"), seq("ACGT"), s);
  CHECK(rec.score == 2);
  CHECK(rec.start == 0);
}

TEST_CASE("build_overlap_index") {
  const ScoringScheme s = simple_dna_model(2, -3).with_linear_gap(-5);
  const Sequence ref("ref", "GATTACACCGGTTAGCATGCAAGTCCGATCGA");

  SUBCASE("single identical read") {
    std::vector<Read> reads{{Sequence("r0", ref.residues()), 0}};
    auto index = build_overlap_index(reads, ref, s);
    REQUIRE(index.size() == 1);
    CHECK(index.at("r0").start == 0);
  }
  SUBCASE("disjoint substrings recover their offsets") {
    std::vector<std::size_t> offsets{0, 11, 22};
    std::vector<Read> reads;
    for (std::size_t k = 0; k < offsets.size(); ++k)
      reads.push_back({Sequence("r" + std::to_string(k), ref.residues().substr(offsets[k], 9)), k});
    for (std::size_t workers : {1, 3}) {
      WorkerPool pool(workers);
      auto index = build_overlap_index(reads, ref, s, &pool);
      REQUIRE(index.size() == 3);
      for (std::size_t k = 0; k < offsets.size(); ++k) {
        const auto& rec = index.at("r" + std::to_string(k));
        CHECK(rec.start == offsets[k]);
        CHECK(rec.end == offsets[k] + 9);
        CHECK(rec.source_index == k);
      }
    }
  }
  SUBCASE("errors") {
    std::vector<Read> none;
    CHECK(error_code([&] { build_overlap_index(none, ref, s); }) == ErrorCode::EmptyInput);
    std::vector<Read> bad{{Sequence("ok", "ACGT"), 0}, {Sequence("bad", "ACXT"), 1}};
    try {
      build_overlap_index(bad, ref, s);
      FAIL("illegal symbol accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::IllegalSymbol);
      CHECK(std::string(e.what()).find("'bad'") != std::string::npos);
    }
  }
}
