#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "tropmat/kernels.hpp"

namespace tropmat {

TypeTable::TypeTable(const std::vector<NdType>& types)
    : n_(types.empty() ? 0 : types.front().n()),
      count_(types.size()),
      stride_((types.size() + kLanes - 1) / kLanes * kLanes),
      data_(static_cast<std::size_t>(n_) * stride_, 0) {
  for (std::size_t t = 0; t < types.size(); ++t) {
    if (types[t].n() != n_) throw std::invalid_argument("type table needs a common n");
    for (int i = 0; i < n_; ++i) data_[static_cast<std::size_t>(i) * stride_ + t] = types[t][i];
  }
}

bool any(const Selection& s) {
  for (std::uint16_t w : s) {
    if (w != 0) return true;
  }
  return false;
}

std::size_t count(const Selection& s) {
  std::size_t total = 0;
  for (std::uint16_t w : s) total += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(w)));
  return total;
}

std::vector<std::size_t> indices(const Selection& s) {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < s.size(); ++w) {
    for (unsigned bits = s[w]; bits != 0; bits &= bits - 1) {
      out.push_back(w * TypeTable::kLanes + static_cast<std::size_t>(std::countr_zero(bits)));
    }
  }
  return out;
}

void intersect(Selection& into, const Selection& other) {
  for (std::size_t w = 0; w < into.size(); ++w) into[w] &= other[w];
}

std::string_view simd_level_name(SimdLevel level) {
  return level == SimdLevel::kAvx2 ? "avx2" : "scalar";
}

bool simd_supported(SimdLevel level) {
  if (level == SimdLevel::kScalar) return true;
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

std::optional<KernelSet> kernels_for(SimdLevel level) {
  if (!simd_supported(level)) return std::nullopt;
  if (level == SimdLevel::kAvx2) {
    return KernelSet{level, detail::avx2_hull, detail::avx2_equal_at, detail::avx2_subset, detail::avx2_meets};
  }
  return KernelSet{level, detail::scalar_hull, detail::scalar_equal_at, detail::scalar_subset,
                   detail::scalar_meets};
}

namespace {

KernelSet pick_kernels() {
  SimdLevel wanted = simd_supported(SimdLevel::kAvx2) ? SimdLevel::kAvx2 : SimdLevel::kScalar;
  if (const char* env = std::getenv("TROPMAT_SIMD")) {
    const std::string value = env;
    if (value == "scalar") {
      wanted = SimdLevel::kScalar;
    } else if (value == "avx2") {
      if (!simd_supported(SimdLevel::kAvx2)) throw std::runtime_error("TROPMAT_SIMD=avx2 but the CPU lacks AVX2");
      wanted = SimdLevel::kAvx2;
    } else {
      throw std::runtime_error("TROPMAT_SIMD must be scalar or avx2, got " + value);
    }
  }
  return *kernels_for(wanted);
}

}  // namespace

const KernelSet& kernels() {
  static const KernelSet active = pick_kernels();
  return active;
}

Selection select_hull(const TypeTable& table, const NdType& a, const NdType& b) {
  Selection out(table.words());
  kernels().hull(table, a.entries().data(), b.entries().data(), out.data());
  return out;
}

Selection select_equal(const TypeTable& table, int index, Mask value) {
  Selection out(table.words());
  kernels().equal_at(table, index, value, out.data());
  return out;
}

Selection select_subset(const TypeTable& table, const NdType& bound) {
  Selection out(table.words());
  kernels().subset(table, bound.entries().data(), out.data());
  return out;
}

Selection select_meets(const TypeTable& table, int index, Mask block) {
  Selection out(table.words());
  kernels().meets(table, index, block, out.data());
  return out;
}

}  // namespace tropmat
