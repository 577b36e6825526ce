#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gsopt/dense.hpp"

namespace gsopt {

/// Checks that `groups` are pairwise disjoint, in range, and cover {0..n-1}.
/// Returns std::nullopt on success, otherwise a description of the first
/// violation found (duplicated, out-of-range, or uncovered index).
std::optional<std::string> validate_partition(int n, const std::vector<std::vector<int>>& groups);

/// Disjoint index groups covering {0..n-1}. Indices are 0-based.
/// Immutable after construction; safe to share across threads.
class GroupPartition {
 public:
  GroupPartition(int n, std::vector<std::vector<int>> groups);

  /// n/block_size contiguous blocks of equal size.
  static GroupPartition contiguous_blocks(int n, int block_size);
  static GroupPartition singletons(int n);

  int n() const { return n_; }
  int num_groups() const { return static_cast<int>(offsets_.size()) - 1; }
  const std::vector<std::vector<int>>& groups() const { return groups_; }

  std::span<const int> indices(int g) const {
    return {flat_.data() + offsets_[g], static_cast<size_t>(offsets_[g + 1] - offsets_[g])};
  }
  int group_size(int g) const { return offsets_[g + 1] - offsets_[g]; }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> groups_;
  std::vector<int> flat_;     // concatenated group indices
  std::vector<int> offsets_;  // group g occupies flat_[offsets_[g]..offsets_[g+1])
};

}  // namespace gsopt
