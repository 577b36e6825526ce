#include "gsopt/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace gsopt {

std::optional<std::string> validate_partition(int n, const std::vector<std::vector<int>>& groups) {
  if (n <= 0) return "dimension must be positive";
  if (groups.empty()) return "partition must contain at least one group";
  std::vector<char> seen(n, 0);
  for (size_t g = 0; g < groups.size(); ++g) {
    if (groups[g].empty()) return "group " + std::to_string(g) + " is empty";
    for (int idx : groups[g]) {
      if (idx < 0 || idx >= n)
        return "index " + std::to_string(idx) + " in group " + std::to_string(g) +
               " is out of range [0, " + std::to_string(n) + ")";
      if (seen[idx]) return "index " + std::to_string(idx) + " appears in more than one group";
      seen[idx] = 1;
    }
  }
  for (int i = 0; i < n; ++i)
    if (!seen[i]) return "index " + std::to_string(i) + " is not covered by any group";
  return std::nullopt;
}

GroupPartition::GroupPartition(int n, std::vector<std::vector<int>> groups)
    : n_(n), groups_(std::move(groups)) {
  if (auto err = validate_partition(n, groups_)) throw std::invalid_argument(*err);
  offsets_.reserve(groups_.size() + 1);
  offsets_.push_back(0);
  flat_.reserve(n);
  for (const auto& g : groups_) {
    flat_.insert(flat_.end(), g.begin(), g.end());
    offsets_.push_back(static_cast<int>(flat_.size()));
  }
}

GroupPartition GroupPartition::contiguous_blocks(int n, int block_size) {
  if (block_size <= 0 || n % block_size != 0)
    throw std::invalid_argument("block size must divide the dimension");
  std::vector<std::vector<int>> groups(n / block_size);
  for (int g = 0; g < n / block_size; ++g) {
    groups[g].resize(block_size);
    std::iota(groups[g].begin(), groups[g].end(), g * block_size);
  }
  return GroupPartition(n, std::move(groups));
}

GroupPartition GroupPartition::singletons(int n) { return contiguous_blocks(n, 1); }

}  // namespace gsopt
