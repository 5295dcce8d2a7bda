#include "tropmat/ops.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tropmat/axioms.hpp"
#include "tropmat/partition.hpp"

namespace tropmat {

NdType drop_positions(const NdType& a, const std::vector<int>& positions) {
  std::vector<Mask> entries;
  for (int i = 1; i <= a.n(); ++i) {
    if (std::find(positions.begin(), positions.end(), i) == positions.end()) entries.push_back(a.at(i));
  }
  return NdType(a.d(), std::move(entries));
}

Tom deletion(const Tom& m, const std::vector<int>& positions) {
  for (int i : positions) {
    if (i < 1 || i > m.n()) throw std::invalid_argument("position " + std::to_string(i) + " out of range");
  }
  std::vector<int> unique = positions;
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  if (static_cast<int>(unique.size()) >= m.n()) throw std::invalid_argument("deletion would empty the tuple");
  std::vector<NdType> out;
  out.reserve(m.size());
  for (const NdType& a : m.types()) out.push_back(drop_positions(a, unique));
  Tom result(m.n() - static_cast<int>(unique.size()), m.d(), std::move(out));
  result.set_coordinate_labels(m.coordinate_labels());
  return result;
}

Tom deletion(const Tom& m, int i) { return deletion(m, std::vector<int>{i}); }

std::vector<NdType> avoiding(const std::vector<NdType>& types, Mask coords) {
  std::vector<NdType> out;
  for (const NdType& a : types) {
    if ((a.support() & coords) == 0) out.push_back(a);
  }
  return out;
}

Tom contraction(const Tom& m, int j) {
  if (m.d() == 1) throw std::invalid_argument("contraction needs d >= 2");
  if (j < 1 || j > m.d()) throw std::invalid_argument("coordinate " + std::to_string(j) + " out of range");
  const Mask low = full_mask(j - 1);
  std::vector<NdType> out;
  for (const NdType& a : avoiding(m.types(), bit(j))) {
    std::vector<Mask> entries;
    for (Mask e : a.entries()) entries.push_back(static_cast<Mask>((e & low) | ((e >> 1) & ~low)));
    out.emplace_back(m.d() - 1, std::move(entries));
  }
  Tom result(m.n(), m.d() - 1, std::move(out));
  std::vector<int> labels = m.coordinate_labels();
  labels.erase(labels.begin() + (j - 1));
  result.set_coordinate_labels(std::move(labels));
  return result;
}

NdType transpose(const NdType& a) {
  std::vector<Mask> entries(static_cast<std::size_t>(a.d()), 0);
  for (int i = 1; i <= a.n(); ++i) {
    for (int j : labels(a.at(i))) entries[j - 1] |= bit(i);
  }
  for (int j = 1; j <= a.d(); ++j) {
    if (entries[j - 1] == 0) {
      throw std::invalid_argument("cannot transpose " + a.str() + ": coordinate " + std::to_string(j) +
                                  " is not housed in any entry");
    }
  }
  return NdType(a.n(), std::move(entries));
}

Tom dual_tom(const Tom& m) {
  std::vector<NdType> transposed;
  for (const NdType& v : vertices(m)) transposed.push_back(transpose(v));
  return Tom(m.d(), m.n(), face_closure(transposed));
}

MixedSubdivision dual_subdivision(const MixedSubdivision& s) {
  const Tom dual = dual_tom(to_tom(s));
  return MixedSubdivision(dual.n(), dual.d(), vertices(dual));
}

}  // namespace tropmat
