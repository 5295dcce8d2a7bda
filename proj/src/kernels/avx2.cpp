// AVX2 filter kernels: 16 rows of 16-bit masks per register.

#include "tropmat/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define TROPMAT_HAVE_X86 1
#endif

namespace tropmat::detail {

#ifdef TROPMAT_HAVE_X86

namespace {

__attribute__((target("avx2"))) inline std::uint16_t lane_bits(__m256i all_or_none) {
  const __m256i packed = _mm256_packs_epi16(all_or_none, all_or_none);
  const auto m = static_cast<std::uint32_t>(_mm256_movemask_epi8(packed));
  return static_cast<std::uint16_t>((m & 0xFFu) | ((m >> 8) & 0xFF00u));
}

__attribute__((target("avx2"))) inline __m256i load_rows(const Mask* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

__attribute__((target("avx2"))) inline __m256i splat(Mask m) {
  return _mm256_set1_epi16(static_cast<short>(m));
}

void clear_tail(const TypeTable& table, std::uint16_t* out) {
  const std::size_t words = table.words();
  if (words == 0) return;
  const std::size_t used = table.size() - (words - 1) * TypeTable::kLanes;
  if (used < TypeTable::kLanes) out[words - 1] &= static_cast<std::uint16_t>((1u << used) - 1u);
}

}  // namespace

__attribute__((target("avx2"))) void avx2_hull(const TypeTable& table, const Mask* a, const Mask* b,
                                               std::uint16_t* out) {
  for (std::size_t w = 0; w < table.words(); ++w) {
    __m256i keep = _mm256_set1_epi16(-1);
    for (int i = 0; i < table.n(); ++i) {
      const __m256i c = load_rows(table.column(i) + w * TypeTable::kLanes);
      const __m256i hit = _mm256_or_si256(
          _mm256_or_si256(_mm256_cmpeq_epi16(c, splat(a[i])), _mm256_cmpeq_epi16(c, splat(b[i]))),
          _mm256_cmpeq_epi16(c, splat(static_cast<Mask>(a[i] | b[i]))));
      keep = _mm256_and_si256(keep, hit);
    }
    out[w] = lane_bits(keep);
  }
  clear_tail(table, out);
}

__attribute__((target("avx2"))) void avx2_equal_at(const TypeTable& table, int index, Mask value,
                                                   std::uint16_t* out) {
  const Mask* col = table.column(index);
  const __m256i v = splat(value);
  for (std::size_t w = 0; w < table.words(); ++w) {
    out[w] = lane_bits(_mm256_cmpeq_epi16(load_rows(col + w * TypeTable::kLanes), v));
  }
  clear_tail(table, out);
}

__attribute__((target("avx2"))) void avx2_subset(const TypeTable& table, const Mask* bound,
                                                 std::uint16_t* out) {
  const __m256i zero = _mm256_setzero_si256();
  for (std::size_t w = 0; w < table.words(); ++w) {
    __m256i outside = zero;
    for (int i = 0; i < table.n(); ++i) {
      const __m256i c = load_rows(table.column(i) + w * TypeTable::kLanes);
      outside = _mm256_or_si256(outside, _mm256_andnot_si256(splat(bound[i]), c));
    }
    out[w] = lane_bits(_mm256_cmpeq_epi16(outside, zero));
  }
  clear_tail(table, out);
}

__attribute__((target("avx2"))) void avx2_meets(const TypeTable& table, int index, Mask block,
                                                std::uint16_t* out) {
  const Mask* col = table.column(index);
  const __m256i zero = _mm256_setzero_si256();
  const __m256i blk = splat(block);
  for (std::size_t w = 0; w < table.words(); ++w) {
    const __m256i hit = _mm256_and_si256(load_rows(col + w * TypeTable::kLanes), blk);
    out[w] = static_cast<std::uint16_t>(~lane_bits(_mm256_cmpeq_epi16(hit, zero)));
  }
  clear_tail(table, out);
}

#else

// Never selected off x86 (simd_supported reports false); kept linkable.
void avx2_hull(const TypeTable& t, const Mask* a, const Mask* b, std::uint16_t* out) { scalar_hull(t, a, b, out); }
void avx2_equal_at(const TypeTable& t, int i, Mask v, std::uint16_t* out) { scalar_equal_at(t, i, v, out); }
void avx2_subset(const TypeTable& t, const Mask* bound, std::uint16_t* out) { scalar_subset(t, bound, out); }
void avx2_meets(const TypeTable& t, int i, Mask blk, std::uint16_t* out) { scalar_meets(t, i, blk, out); }

#endif

}  // namespace tropmat::detail
