#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qcp/permutation.hpp"

namespace qcp {

inline constexpr int kDefaultPartitionCap = 12;

// Blocks of [n]; each block sorted increasingly, blocks sorted by minimum.
struct SetPartition {
  std::vector<std::vector<int>> blocks;

  int n() const;
  int blk() const { return static_cast<int>(blocks.size()); }
  int sing() const;
  void normalize();

  bool operator==(const SetPartition&) const = default;
};

SetPartition parse_partition(std::string_view text);  // "135/2/4689/7"
std::string format_partition(const SetPartition& p);

void for_each_partition(int n, const std::function<void(const SetPartition&)>& fn,
                        int cap = kDefaultPartitionCap);
std::vector<SetPartition> partitions(int n, int cap = kDefaultPartitionCap);

// Block-end-with-minimum writing: image avoids (32)1 and
// des(image) = blk - sing.
Perm phi_I(const SetPartition& p);
SetPartition phi_I_inverse(const Perm& pi);

// Blocks increasing, ordered by decreasing maximum: image avoids (21)3 and
// des(image) = blk - 1.
Perm phi_II(const SetPartition& p);
SetPartition phi_II_inverse(const Perm& pi);

}  // namespace qcp
