#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pyralign/pairwise_dp.hpp"

namespace pyralign {

/// Read ids in progressive-alignment order: by reference start, then end,
/// then input position.
struct GuideOrder {
  std::vector<std::string> ordered_read_ids;
};

struct ReadPairing {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::optional<std::string> singleton;
};

/// Output of the pairwise stage, in pairing order. The singleton, when
/// present, comes through as a one-row seed.
struct PairedSeeds {
  std::vector<PairwiseAlignment> alignments;
  std::optional<AlignedSequence> singleton;
};

GuideOrder order_reads(const OverlapIndex& index);

/// Pairs neighbours (0,1), (2,3), ...; an odd last id becomes the singleton.
ReadPairing pair_adjacent(const GuideOrder& order);

PairedSeeds align_pairs(const ReadPairing& pairing, const std::map<std::string, Sequence>& reads,
                        const ScoringScheme& scheme, WorkerPool* pool = nullptr);

}  // namespace pyralign
