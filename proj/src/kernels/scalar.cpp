// Reference kernels. The AVX2 variants must agree with these bit for bit.

#include "tropmat/kernels.hpp"

namespace tropmat::detail {

namespace {

// Rows past table.size() are zero padding; clear their bits.
void clear_tail(const TypeTable& table, std::uint16_t* out) {
  const std::size_t words = table.words();
  if (words == 0) return;
  const std::size_t used = table.size() - (words - 1) * TypeTable::kLanes;
  if (used < TypeTable::kLanes) out[words - 1] &= static_cast<std::uint16_t>((1u << used) - 1u);
}

}  // namespace

void scalar_hull(const TypeTable& table, const Mask* a, const Mask* b, std::uint16_t* out) {
  for (std::size_t w = 0; w < table.words(); ++w) {
    std::uint16_t word = 0xFFFF;
    for (int i = 0; i < table.n(); ++i) {
      const Mask* col = table.column(i) + w * TypeTable::kLanes;
      const Mask u = static_cast<Mask>(a[i] | b[i]);
      for (std::size_t lane = 0; lane < TypeTable::kLanes; ++lane) {
        const Mask c = col[lane];
        if (c != a[i] && c != b[i] && c != u) word &= static_cast<std::uint16_t>(~(1u << lane));
      }
    }
    out[w] = word;
  }
  clear_tail(table, out);
}

void scalar_equal_at(const TypeTable& table, int index, Mask value, std::uint16_t* out) {
  const Mask* col = table.column(index);
  for (std::size_t w = 0; w < table.words(); ++w) {
    std::uint16_t word = 0;
    for (std::size_t lane = 0; lane < TypeTable::kLanes; ++lane) {
      if (col[w * TypeTable::kLanes + lane] == value) word |= static_cast<std::uint16_t>(1u << lane);
    }
    out[w] = word;
  }
  clear_tail(table, out);
}

void scalar_subset(const TypeTable& table, const Mask* bound, std::uint16_t* out) {
  for (std::size_t w = 0; w < table.words(); ++w) {
    std::uint16_t word = 0xFFFF;
    for (int i = 0; i < table.n(); ++i) {
      const Mask* col = table.column(i) + w * TypeTable::kLanes;
      for (std::size_t lane = 0; lane < TypeTable::kLanes; ++lane) {
        if ((col[lane] & ~bound[i]) != 0) word &= static_cast<std::uint16_t>(~(1u << lane));
      }
    }
    out[w] = word;
  }
  clear_tail(table, out);
}

void scalar_meets(const TypeTable& table, int index, Mask block, std::uint16_t* out) {
  const Mask* col = table.column(index);
  for (std::size_t w = 0; w < table.words(); ++w) {
    std::uint16_t word = 0;
    for (std::size_t lane = 0; lane < TypeTable::kLanes; ++lane) {
      if ((col[w * TypeTable::kLanes + lane] & block) != 0) word |= static_cast<std::uint16_t>(1u << lane);
    }
    out[w] = word;
  }
  clear_tail(table, out);
}

}  // namespace tropmat::detail
