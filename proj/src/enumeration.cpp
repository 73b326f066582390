#include "bpos/enumeration.hpp"

#include <stdexcept>

namespace bpos {

namespace {

void visit(int mm, int pos, int used, std::array<std::uint16_t, 4>& blocks,
           std::vector<FourPartition>& out) {
  if (pos > mm) {
    if (used == 4) out.push_back(FourPartition{blocks});
    return;
  }
  int remaining = mm - pos + 1;
  if (used + remaining < 4) return;  // cannot reach four blocks
  int limit = used < 4 ? used + 1 : 4;
  for (int b = 0; b < limit; ++b) {
    blocks[b] |= static_cast<std::uint16_t>(1u << (pos - 1));
    visit(mm, pos + 1, b == used ? used + 1 : used, blocks, out);
    blocks[b] &= static_cast<std::uint16_t>(~(1u << (pos - 1)));
  }
}

}  // namespace

std::vector<FourPartition> all_four_partitions(int mm) {
  if (mm < 4) return {};
  if (mm > 12) throw std::invalid_argument("all_four_partitions: more than 12 marks");
  std::vector<FourPartition> out;
  std::array<std::uint16_t, 4> blocks{};
  visit(mm, 1, 0, blocks, out);
  return out;
}

std::vector<int> mask_to_set(std::uint16_t mask) {
  std::vector<int> out;
  for (int i = 1; i <= 16; ++i)
    if (mask & (1u << (i - 1))) out.push_back(i);
  return out;
}

std::uint16_t set_to_mask(const std::vector<int>& elems) {
  std::uint16_t m = 0;
  for (int e : elems) {
    if (e < 1 || e > 16) throw std::invalid_argument("set_to_mask: mark out of range");
    m |= static_cast<std::uint16_t>(1u << (e - 1));
  }
  return m;
}

}  // namespace bpos
