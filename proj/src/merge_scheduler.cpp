#include "pyralign/merge_scheduler.hpp"

#include <algorithm>

#include "pyralign/error.hpp"
#include "pyralign/worker_pool.hpp"

namespace pyralign {

namespace {

std::size_t build_tree(MergeBlock& block, std::size_t first, std::size_t count) {
  if (count == 1) {
    block.nodes.push_back(MergeNode{block.leaves[first], 0, 0});
    return block.nodes.size() - 1;
  }
  const std::size_t left_count = (count + 1) / 2;
  std::size_t left = build_tree(block, first, left_count);
  std::size_t right = build_tree(block, first + left_count, count - left_count);
  block.nodes.push_back(MergeNode{std::nullopt, left, right});
  return block.nodes.size() - 1;
}

void collect_depths(const MergeBlock& block, std::size_t node, std::size_t depth, std::vector<std::size_t>& out) {
  const MergeNode& n = block.nodes[node];
  if (n.profile) {
    out.push_back(depth);
    return;
  }
  collect_depths(block, n.left, depth + 1, out);
  collect_depths(block, n.right, depth + 1, out);
}

}  // namespace

std::size_t MergeBlock::depth() const {
  auto d = leaf_depths();
  return *std::max_element(d.begin(), d.end());
}

std::vector<std::size_t> MergeBlock::leaf_depths() const {
  std::vector<std::size_t> depths;
  depths.reserve(leaves.size());
  collect_depths(*this, root, 0, depths);
  return depths;
}

std::size_t MergePlan::leaf_count() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.leaves.size();
  return n;
}

MergePlan plan_merge(std::size_t num_profiles, std::size_t block_size) {
  if (num_profiles == 0) throw Error(ErrorCode::ZeroProfiles, "nothing to merge");
  if (block_size == 0) throw Error(ErrorCode::InvalidConfig, "block size must be at least 1");
  MergePlan plan;
  plan.block_size = block_size;
  for (std::size_t first = 0; first < num_profiles; first += block_size) {
    MergeBlock block;
    const std::size_t count = std::min(block_size, num_profiles - first);
    for (std::size_t p = first; p < first + count; ++p) block.leaves.push_back(p);
    block.nodes.reserve(2 * count - 1);
    block.root = build_tree(block, 0, count);
    plan.blocks.push_back(std::move(block));
  }
  return plan;
}

Profile execute_merge(const MergePlan& plan, std::vector<Profile> profiles, const ScoringScheme& scheme,
                      WorkerPool* pool, MergeStats* stats) {
  if (plan.blocks.empty()) throw Error(ErrorCode::ZeroProfiles, "empty merge plan");
  if (plan.leaf_count() != profiles.size())
    throw Error(ErrorCode::PlanMismatch, "plan has " + std::to_string(plan.leaf_count()) + " leaves but " +
                                             std::to_string(profiles.size()) + " profiles were given");

  struct Task {
    std::size_t block;
    std::size_t node;
  };
  // Height of a node = longest path to a leaf; all nodes of one height are
  // independent of each other across every block.
  std::vector<std::vector<std::size_t>> heights(plan.blocks.size());
  std::vector<std::vector<Task>> levels;
  std::vector<std::vector<std::optional<Profile>>> results(plan.blocks.size());
  for (std::size_t b = 0; b < plan.blocks.size(); ++b) {
    const MergeBlock& block = plan.blocks[b];
    heights[b].assign(block.nodes.size(), 0);
    results[b].resize(block.nodes.size());
    // build_tree emits children before parents
    for (std::size_t n = 0; n < block.nodes.size(); ++n) {
      const MergeNode& node = block.nodes[n];
      if (node.profile) {
        if (*node.profile >= profiles.size())
          throw Error(ErrorCode::PlanMismatch, "leaf refers to profile " + std::to_string(*node.profile));
        results[b][n] = std::move(profiles[*node.profile]);
        continue;
      }
      const std::size_t h = std::max(heights[b][node.left], heights[b][node.right]) + 1;
      heights[b][n] = h;
      if (levels.size() < h) levels.resize(h);
      levels[h - 1].push_back(Task{b, n});
    }
  }

  std::vector<double> scores;
  for (const auto& level : levels) {
    scores.assign(level.size(), 0.0);
    for_each_index(pool, level.size(), [&](std::size_t t) {
      const Task& task = level[t];
      const MergeNode& node = plan.blocks[task.block].nodes[task.node];
      auto& slots = results[task.block];
      ProfileAlignment pa = align_profiles_scored(*slots[node.left], *slots[node.right], scheme);
      scores[t] = pa.score;
      slots[task.node] = std::move(pa.merged);
      slots[node.left].reset();
      slots[node.right].reset();
    });
    if (stats) {
      stats->profile_alignments += level.size();
      for (double s : scores) stats->total_score += s;
    }
  }

  Profile merged = std::move(*results[0][plan.blocks[0].root]);
  for (std::size_t b = 1; b < plan.blocks.size(); ++b) {
    ProfileAlignment pa = align_profiles_scored(merged, *results[b][plan.blocks[b].root], scheme);
    merged = std::move(pa.merged);
    results[b][plan.blocks[b].root].reset();
    if (stats) {
      ++stats->profile_alignments;
      stats->total_score += pa.score;
    }
  }
  return merged;
}

}  // namespace pyralign
