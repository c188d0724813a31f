#include "pyralign/placement.hpp"

#include <algorithm>
#include <tuple>

#include "pyralign/error.hpp"
#include "pyralign/worker_pool.hpp"

namespace pyralign {

GuideOrder order_reads(const OverlapIndex& index) {
  if (index.empty()) throw Error(ErrorCode::EmptyIndex, "overlap index has no records");
  std::vector<const OverlapRecord*> recs;
  recs.reserve(index.size());
  for (const auto& [id, rec] : index) recs.push_back(&rec);
  std::sort(recs.begin(), recs.end(), [](const OverlapRecord* a, const OverlapRecord* b) {
    return std::tie(a->start, a->end, a->source_index) < std::tie(b->start, b->end, b->source_index);
  });
  GuideOrder order;
  order.ordered_read_ids.reserve(recs.size());
  for (const auto* rec : recs) order.ordered_read_ids.push_back(rec->read_id);
  return order;
}

ReadPairing pair_adjacent(const GuideOrder& order) {
  const auto& ids = order.ordered_read_ids;
  if (ids.empty()) throw Error(ErrorCode::EmptyIndex, "guide order is empty");
  ReadPairing pairing;
  pairing.pairs.reserve(ids.size() / 2);
  for (std::size_t k = 0; k + 1 < ids.size(); k += 2) pairing.pairs.emplace_back(ids[k], ids[k + 1]);
  if (ids.size() % 2 == 1) pairing.singleton = ids.back();
  return pairing;
}

PairedSeeds align_pairs(const ReadPairing& pairing, const std::map<std::string, Sequence>& reads,
                        const ScoringScheme& scheme, WorkerPool* pool) {
  auto lookup = [&](const std::string& id) -> const Sequence& {
    auto it = reads.find(id);
    if (it == reads.end()) throw Error(ErrorCode::UnknownReadId, "read '" + id + "'");
    return it->second;
  };
  // Resolve every id before any alignment runs so the error is independent
  // of scheduling.
  std::vector<std::pair<const Sequence*, const Sequence*>> operands;
  operands.reserve(pairing.pairs.size());
  for (const auto& [a, b] : pairing.pairs) operands.emplace_back(&lookup(a), &lookup(b));

  PairedSeeds seeds;
  if (pairing.singleton) {
    const Sequence& s = lookup(*pairing.singleton);
    seeds.singleton = AlignedSequence{s.id(), s.residues()};
  }
  seeds.alignments.resize(operands.size());
  for_each_index(pool, operands.size(), [&](std::size_t k) {
    seeds.alignments[k] = local_align(*operands[k].first, *operands[k].second, scheme);
  });
  return seeds;
}

}  // namespace pyralign
