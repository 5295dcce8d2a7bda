#include "tropmat/tom.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tropmat {

void normalize(std::vector<NdType>& types) {
  std::sort(types.begin(), types.end());
  types.erase(std::unique(types.begin(), types.end()), types.end());
}

Tom::Tom(int n, int d, std::vector<NdType> types) : n_(n), d_(d), types_(std::move(types)) {
  if (n < 1 || d < 1 || d > kMaxLabels) {
    throw std::invalid_argument("bad parameters n=" + std::to_string(n) + " d=" + std::to_string(d));
  }
  for (const NdType& t : types_) {
    if (t.n() != n || t.d() != d) {
      throw std::invalid_argument("type " + t.str() + " does not have parameters (" + std::to_string(n) + "," +
                                  std::to_string(d) + ")");
    }
  }
  normalize(types_);
  labels_.resize(static_cast<std::size_t>(d));
  std::iota(labels_.begin(), labels_.end(), 1);
}

bool Tom::contains(const NdType& t) const { return std::binary_search(types_.begin(), types_.end(), t); }

void Tom::set_coordinate_labels(std::vector<int> labels) {
  if (static_cast<int>(labels.size()) != d_) throw std::invalid_argument("need one label per coordinate");
  labels_ = std::move(labels);
}

}  // namespace tropmat
