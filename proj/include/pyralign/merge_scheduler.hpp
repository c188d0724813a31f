#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pyralign/profile_align.hpp"

namespace pyralign {

class WorkerPool;

/// Node of a block's merge tree. Leaves carry a profile index (position in
/// guide order); internal nodes carry their two children.
struct MergeNode {
  std::optional<std::size_t> profile;
  std::size_t left = 0;
  std::size_t right = 0;
};

struct MergeBlock {
  std::vector<std::size_t> leaves;
  std::vector<MergeNode> nodes;
  std::size_t root = 0;

  std::size_t depth() const;
  /// Depth of every leaf, in leaf order.
  std::vector<std::size_t> leaf_depths() const;
};

/// Guide-ordered profiles cut into blocks of at most block_size leaves. Each
/// block is merged along a balanced binary tree; block results are then
/// folded left to right.
struct MergePlan {
  std::size_t block_size = 100;
  std::vector<MergeBlock> blocks;

  std::size_t leaf_count() const;
};

MergePlan plan_merge(std::size_t num_profiles, std::size_t block_size = 100);

struct MergeStats {
  std::size_t profile_alignments = 0;
  double total_score = 0.0;
};

/// Runs the plan. Sibling subtrees may be merged concurrently on the pool;
/// every operand pair is fixed by the plan, so the result does not depend on
/// the schedule.
Profile execute_merge(const MergePlan& plan, std::vector<Profile> profiles, const ScoringScheme& scheme,
                      WorkerPool* pool = nullptr, MergeStats* stats = nullptr);

}  // namespace pyralign
