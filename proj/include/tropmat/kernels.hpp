#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "tropmat/mask.hpp"
#include "tropmat/nd_type.hpp"

namespace tropmat {

/// Structure-of-arrays copy of a type list: entry i of type t lives at
/// data[i * stride + t]. Padding slots hold 0 and never select.
class TypeTable {
 public:
  static constexpr std::size_t kLanes = 16;

  TypeTable() = default;
  explicit TypeTable(const std::vector<NdType>& types);

  int n() const { return n_; }
  std::size_t size() const { return count_; }
  std::size_t stride() const { return stride_; }
  std::size_t words() const { return stride_ / kLanes; }
  const Mask* column(int index) const { return data_.data() + static_cast<std::size_t>(index) * stride_; }

 private:
  int n_ = 0;
  std::size_t count_ = 0;
  std::size_t stride_ = 0;
  std::vector<Mask> data_;
};

/// One bit per table row, 16 rows per word.
using Selection = std::vector<std::uint16_t>;

bool any(const Selection& s);
std::size_t count(const Selection& s);
std::vector<std::size_t> indices(const Selection& s);
void intersect(Selection& into, const Selection& other);

enum class SimdLevel { kScalar, kAvx2 };

std::string_view simd_level_name(SimdLevel level);

/// Filter kernels over a TypeTable. Each writes table.words() words.
struct KernelSet {
  SimdLevel level;
  /// Rows C with C_i ∈ {A_i, B_i, A_i ∪ B_i} for every position.
  void (*hull)(const TypeTable& table, const Mask* a, const Mask* b, std::uint16_t* out);
  /// Rows with C_index == value (index 0-based).
  void (*equal_at)(const TypeTable& table, int index, Mask value, std::uint16_t* out);
  /// Rows with C_i ⊆ bound_i for every position.
  void (*subset)(const TypeTable& table, const Mask* bound, std::uint16_t* out);
  /// Rows with C_index ∩ block nonempty.
  void (*meets)(const TypeTable& table, int index, Mask block, std::uint16_t* out);
};

/// True when the CPU runs the given level.
bool simd_supported(SimdLevel level);

/// Kernel set for a level, or nullopt when unsupported here.
std::optional<KernelSet> kernels_for(SimdLevel level);

/// Best supported level, overridable by TROPMAT_SIMD=scalar|avx2.
const KernelSet& kernels();

// Convenience wrappers on the active kernel set.
Selection select_hull(const TypeTable& table, const NdType& a, const NdType& b);
Selection select_equal(const TypeTable& table, int index, Mask value);
Selection select_subset(const TypeTable& table, const NdType& bound);
Selection select_meets(const TypeTable& table, int index, Mask block);

namespace detail {
void scalar_hull(const TypeTable&, const Mask*, const Mask*, std::uint16_t*);
void scalar_equal_at(const TypeTable&, int, Mask, std::uint16_t*);
void scalar_subset(const TypeTable&, const Mask*, std::uint16_t*);
void scalar_meets(const TypeTable&, int, Mask, std::uint16_t*);
void avx2_hull(const TypeTable&, const Mask*, const Mask*, std::uint16_t*);
void avx2_equal_at(const TypeTable&, int, Mask, std::uint16_t*);
void avx2_subset(const TypeTable&, const Mask*, std::uint16_t*);
void avx2_meets(const TypeTable&, int, Mask, std::uint16_t*);
}  // namespace detail

}  // namespace tropmat
