#include "tropmat/placing.hpp"

#include <algorithm>
#include <stdexcept>

#include "tropmat/ops.hpp"

namespace tropmat {

namespace {

// Components of K_A after discarding the coordinate nodes in `coords`.
bool connected_without(const NdType& a, Mask coords) {
  const Mask keep = static_cast<Mask>(full_mask(a.d()) & ~coords);
  Mask reached = a[0];
  std::vector<bool> used(static_cast<std::size_t>(a.n()), false);
  used[0] = true;
  for (bool grew = true; grew;) {
    grew = false;
    for (int i = 0; i < a.n(); ++i) {
      if (!used[i] && (a[i] & reached) != 0) {
        used[i] = true;
        reached |= a[i];
        grew = true;
      }
    }
  }
  return reached == keep && std::all_of(used.begin(), used.end(), [](bool u) { return u; });
}

NdType append(const NdType& a, Mask entry, int d) {
  std::vector<Mask> entries(a.entries().begin(), a.entries().end());
  entries.push_back(entry);
  return NdType(d, std::move(entries));
}

}  // namespace

MixedSubdivision trivial_subdivision(int n, int d) {
  return MixedSubdivision(n, d, {NdType(d, std::vector<Mask>(static_cast<std::size_t>(n), full_mask(d)))});
}

std::vector<NdType> contraction_vertices(const std::vector<NdType>& cells, Mask coords) {
  std::vector<NdType> out;
  for (const NdType& a : avoiding(cells, coords)) {
    if (connected_without(a, coords)) out.push_back(a);
  }
  return out;
}

MixedSubdivision n_placing(const MixedSubdivision& s, const Permutation& sigma) {
  if (!is_permutation_of(sigma, s.d())) throw std::invalid_argument("sigma is not a permutation of [d]");
  const std::vector<NdType> cells = s.all_cells();
  std::vector<NdType> out;
  Mask placed = 0;
  for (int k = 0; k < s.d(); ++k) {
    const Mask earlier = placed;
    placed |= bit(sigma[k]);
    for (const NdType& v : contraction_vertices(cells, earlier)) out.push_back(append(v, placed, s.d()));
  }
  return MixedSubdivision(s.n() + 1, s.d(), std::move(out));
}

MixedSubdivision d_placing(const MixedSubdivision& s, const Permutation& tau) {
  if (!is_permutation_of(tau, s.n())) throw std::invalid_argument("tau is not a permutation of [n]");
  const int d = s.d() + 1;
  const Mask fresh = bit(d);
  const Tom whole = to_tom(s);
  std::vector<NdType> out;
  for (int k = 0; k < s.n(); ++k) {
    const std::vector<int> earlier(tau.begin(), tau.begin() + k);
    std::vector<NdType> base;
    if (earlier.empty()) {
      base = s.maximal_cells();
    } else {
      for (const NdType& v : contraction_vertices(deletion(whole, earlier).types(), 0)) base.push_back(v);
    }
    for (const NdType& cell : base) {
      std::vector<Mask> entries(static_cast<std::size_t>(s.n()));
      for (int i = 1, src = 0; i <= s.n(); ++i) {
        if (std::find(earlier.begin(), earlier.end(), i) != earlier.end()) {
          entries[i - 1] = fresh;
        } else {
          entries[i - 1] = cell[src++];
        }
      }
      entries[tau[k] - 1] |= fresh;
      out.emplace_back(d, std::move(entries));
    }
  }
  return MixedSubdivision(s.n(), d, std::move(out));
}

}  // namespace tropmat
