#include <random>

#include "oracles.hpp"
#include "pyralign/placement.hpp"
#include "pyralign/simulate.hpp"
#include "pyralign/worker_pool.hpp"
#include "test_support.hpp"

using namespace pyralign;
using testing::error_code;

namespace {

OverlapRecord record(const std::string& id, std::size_t start, std::size_t end, std::size_t source) {
  OverlapRecord r;
  r.read_id = id;
  r.start = start;
  r.end = end;
  r.source_index = source;
  return r;
}

OverlapIndex index_of(std::initializer_list<OverlapRecord> records) {
  OverlapIndex index;
  for (const auto& r : records) index.emplace(r.read_id, r);
  return index;
}

using Ids = std::vector<std::string>;

}  // namespace

TEST_CASE("order_reads examples") {
  CHECK(order_reads(index_of({record("r0", 5, 10, 0), record("r1", 0, 4, 1), record("r2", 9, 12, 2)}))
            .ordered_read_ids == Ids{"r1", "r0", "r2"});
  CHECK(order_reads(index_of({record("r0", 3, 10, 0), record("r1", 3, 8, 1)})).ordered_read_ids == Ids{"r1", "r0"});
  // ids sort the other way round in the map; source_index decides
  CHECK(order_reads(index_of({record("z", 2, 6, 0), record("a", 2, 6, 1)})).ordered_read_ids == Ids{"z", "a"});
  CHECK(error_code([] { order_reads(OverlapIndex{}); }) == ErrorCode::EmptyIndex);
}

TEST_CASE("pair_adjacent examples") {
  auto even = pair_adjacent({{"a", "b", "c", "d"}});
  CHECK(even.pairs == std::vector<std::pair<std::string, std::string>>{{"a", "b"}, {"c", "d"}});
  CHECK_FALSE(even.singleton.has_value());

  auto odd = pair_adjacent({{"a", "b", "c", "d", "e"}});
  CHECK(odd.pairs.size() == 2);
  CHECK(odd.singleton == "e");

  auto one = pair_adjacent({{"a"}});
  CHECK(one.pairs.empty());
  CHECK(one.singleton == "a");

  CHECK(error_code([] { pair_adjacent(GuideOrder{}); }) == ErrorCode::EmptyIndex);
}

TEST_CASE("pairing covers every id exactly once") {
  for (std::size_t n = 1; n <= 9; ++n) {
    GuideOrder order;
    for (std::size_t k = 0; k < n; ++k) order.ordered_read_ids.push_back("r" + std::to_string(k));
    auto pairing = pair_adjacent(order);
    CHECK(pairing.pairs.size() == n / 2);
    CHECK(pairing.singleton.has_value() == (n % 2 == 1));
    Ids seen;
    for (const auto& [a, b] : pairing.pairs) {
      seen.push_back(a);
      seen.push_back(b);
    }
    if (pairing.singleton) seen.push_back(*pairing.singleton);
    CHECK(seen == order.ordered_read_ids);
  }
}

TEST_CASE("align_pairs") {
  const ScoringScheme s = simple_dna_model(2, -3).with_linear_gap(-5);
  std::map<std::string, Sequence> reads{{"a", Sequence("a", "ACGT")}, {"b", Sequence("b", "ACGT")},
                                        {"c", Sequence("c", "GGTTA")}, {"d", Sequence("d", "GTTAC")},
                                        {"e", Sequence("e", "CATG")}};

  SUBCASE("identical pair is gap-free") {
    auto seeds = align_pairs({{{"a", "b"}}, std::nullopt}, reads, s);
    REQUIRE(seeds.alignments.size() == 1);
    CHECK(seeds.alignments[0].row_a.cells == "ACGT");
    CHECK(seeds.alignments[0].row_b.cells == "ACGT");
    CHECK_FALSE(seeds.singleton.has_value());
  }
  SUBCASE("five reads give two alignments and a seed") {
    auto pairing = pair_adjacent({{"a", "b", "c", "d", "e"}});
    WorkerPool pool(2);
    auto seeds = align_pairs(pairing, reads, s, &pool);
    REQUIRE(seeds.alignments.size() == 2);
    CHECK(seeds.alignments[1].row_a.id == "c");
    CHECK(seeds.alignments[1].row_b.id == "d");
    REQUIRE(seeds.singleton.has_value());
    CHECK(seeds.singleton->id == "e");
    CHECK(seeds.singleton->cells == "CATG");
  }
  SUBCASE("unknown id") {
    CHECK(error_code([&] { align_pairs({{{"a", "zz"}}, std::nullopt}, reads, s); }) == ErrorCode::UnknownReadId);
    CHECK(error_code([&] { align_pairs({{}, std::string("zz")}, reads, s); }) == ErrorCode::UnknownReadId);
  }
}

TEST_CASE("error-free reads are ordered by their true offset") {
  const ScoringScheme s = simple_dna_model(2, -3).with_linear_gap(-5);
  const Sequence ref = random_reference(600, 21);
  SimulationParams params;
  params.count = 120;
  params.read_length = 40;
  params.seed = 4;
  auto corpus = simulate_reads(ref, params);
  auto index = build_overlap_index(corpus.reads, ref, s);
  auto order = order_reads(index);

  std::map<std::string, std::size_t> truth;
  for (const auto& t : corpus.truth) truth[t.read_id] = t.true_start;
  REQUIRE(order.ordered_read_ids.size() == corpus.reads.size());
  for (std::size_t k = 1; k < order.ordered_read_ids.size(); ++k)
    CHECK(truth.at(order.ordered_read_ids[k - 1]) <= truth.at(order.ordered_read_ids[k]));
  for (const auto& [id, rec] : index) CHECK(rec.start == truth.at(id));
}

TEST_CASE("ordering and pairing depend only on the index") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> pos(0, 6);
  OverlapIndex index;
  for (std::size_t k = 0; k < 40; ++k) {
    std::size_t start = pos(rng);
    index.emplace("r" + std::to_string(k), record("r" + std::to_string(k), start, start + 1 + pos(rng), k));
  }
  auto first = pair_adjacent(order_reads(index));
  OverlapIndex copy(index.rbegin(), index.rend());
  auto second = pair_adjacent(order_reads(copy));
  CHECK(first.pairs == second.pairs);
  CHECK(first.singleton == second.singleton);
}
