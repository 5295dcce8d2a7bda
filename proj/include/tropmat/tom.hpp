#pragma once

#include <vector>

#include "tropmat/nd_type.hpp"

namespace tropmat {

/// A finite set of (n,d)-types, kept sorted and deduplicated.
class Tom {
 public:
  Tom() = default;
  /// Throws std::invalid_argument when a type has the wrong shape.
  Tom(int n, int d, std::vector<NdType> types);

  int n() const { return n_; }
  int d() const { return d_; }
  std::size_t size() const { return types_.size(); }
  bool empty() const { return types_.empty(); }
  const std::vector<NdType>& types() const { return types_; }
  auto begin() const { return types_.begin(); }
  auto end() const { return types_.end(); }

  bool contains(const NdType& t) const;

  /// Original coordinate label of each coordinate 1..d. Identity unless
  /// the set came out of a contraction.
  const std::vector<int>& coordinate_labels() const { return labels_; }
  void set_coordinate_labels(std::vector<int> labels);

  /// Same (n,d) and the same types; coordinate labels are metadata.
  friend bool operator==(const Tom& a, const Tom& b) {
    return a.n_ == b.n_ && a.d_ == b.d_ && a.types_ == b.types_;
  }

 private:
  int n_ = 0;
  int d_ = 0;
  std::vector<NdType> types_;
  std::vector<int> labels_;
};

/// Sorts and removes duplicates in place.
void normalize(std::vector<NdType>& types);

}  // namespace tropmat
