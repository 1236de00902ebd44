#pragma once

#include <vector>

#include "braids/partition.hpp"

namespace braids::testutil {

/// All set partitions of [n] via restricted growth strings. Independent of
/// the library's noncrossing enumerator; used as a brute-force oracle.
inline std::vector<std::vector<std::vector<int>>> all_set_partitions(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> rgs(n, 0);
  auto rec = [&](auto&& self, int i, int max_used) -> void {
    if (i == n) {
      std::vector<std::vector<int>> blocks(max_used + 1);
      for (int j = 0; j < n; ++j) blocks[rgs[j]].push_back(j + 1);
      out.push_back(std::move(blocks));
      return;
    }
    for (int b = 0; b <= max_used + 1; ++b) {
      rgs[i] = b;
      self(self, i + 1, std::max(max_used, b));
    }
  };
  rec(rec, 0, -1);
  return out;
}

/// Brute-force NC_n: filter all set partitions through is_noncrossing.
inline std::vector<NoncrossingPartition> brute_force_nc(int n) {
  std::vector<NoncrossingPartition> out;
  for (const auto& blocks : all_set_partitions(n))
    if (is_noncrossing(n, blocks)) out.emplace_back(n, blocks);
  std::sort(out.begin(), out.end());
  return out;
}

inline NoncrossingPartition nc(int n, std::vector<std::vector<int>> blocks) {
  return NoncrossingPartition(n, std::move(blocks));
}

}  // namespace braids::testutil
