#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace bpos {

// Visits every k-subset of {1..s} in lexicographic order as a sorted int vector.
// f returns false to stop early; the function returns false iff stopped.
template <class F>
bool for_each_combination(int s, int k, F&& f) {
  if (k < 0 || k > s) return true;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i + 1;
  while (true) {
    if (!f(static_cast<const std::vector<int>&>(c))) return false;
    int i = k - 1;
    while (i >= 0 && c[i] == s - (k - 1 - i)) --i;
    if (i < 0) return true;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

// Partition of {1..mm} into exactly four unordered nonempty blocks, stored as
// bitmasks (bit i-1 = mark i).  Blocks are listed in restricted-growth order:
// block 0 contains mark 1, and each later block starts with the smallest mark
// not in any earlier block.
struct FourPartition {
  std::array<std::uint16_t, 4> blocks{};
};

std::vector<FourPartition> all_four_partitions(int mm);

std::vector<int> mask_to_set(std::uint16_t mask);
std::uint16_t set_to_mask(const std::vector<int>& elems);

}  // namespace bpos
