#include "tropmat/blowup.hpp"

#include <stdexcept>
#include <string>

#include "tropmat/feasibility.hpp"
#include "tropmat/ops.hpp"
#include "tropmat/placing.hpp"

namespace tropmat {

MixedSubdivision blow_up(const MixedSubdivision& s, int i, const MixedSubdivision& s2) {
  if (i < 1 || i > s.n()) throw std::invalid_argument("position " + std::to_string(i) + " out of range");
  if (s.d() != s2.d()) throw std::invalid_argument("blow-up needs equal d");
  if (!is_fine(s)) throw std::invalid_argument("blow_up needs a fine subdivision; use blow_up_nonfine");
  if (!is_fine(s2)) throw std::invalid_argument("the inserted subdivision must be fine");
  const std::vector<NdType> inserted = s2.all_cells();
  std::vector<NdType> out;
  for (const NdType& c : s.maximal_cells()) {
    const Mask outside = static_cast<Mask>(full_mask(s.d()) & ~c.at(i));
    for (const NdType& x : contraction_vertices(inserted, outside)) {
      std::vector<Mask> entries;
      for (int k = 1; k <= s.n(); ++k) {
        if (k != i) entries.push_back(c.at(k));
      }
      entries.insert(entries.end(), x.entries().begin(), x.entries().end());
      out.emplace_back(s.d(), std::move(entries));
    }
  }
  return MixedSubdivision(s.n() + s2.n() - 1, s.d(), std::move(out));
}

namespace {

// Is there u ∈ R^d ordered by P (ties inside blocks, strictly increasing
// across blocks) and c with u_j - δ_j = c on Y and > c on A_i \ Y?
bool local_cell_feasible(const OrderedPartition& p, Mask ai, Mask y, const std::vector<int>& delta, int d) {
  std::vector<DifferenceConstraint> cs;
  const int c = d;  // index of the extra variable
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    const std::vector<int> block = labels(p.blocks[b]);
    for (std::size_t k = 1; k < block.size(); ++k) {
      cs.push_back({block[k] - 1, block[0] - 1, Rational(0), false});
      cs.push_back({block[0] - 1, block[k] - 1, Rational(0), false});
    }
    if (b + 1 < p.blocks.size()) cs.push_back({lowest(p.blocks[b + 1]) - 1, block[0] - 1, Rational(0), true});
  }
  for (int j : labels(ai)) {
    if (contains(y, j)) {
      cs.push_back({j - 1, c, Rational(delta[j - 1]), false});
      cs.push_back({c, j - 1, Rational(-delta[j - 1]), false});
    } else {
      cs.push_back({j - 1, c, Rational(delta[j - 1]), true});
    }
  }
  return solve_differences(d + 1, cs).has_value();
}

}  // namespace

MixedSubdivision blow_up_nonfine(const MixedSubdivision& s, int i, const Permutation& pi) {
  if (i < 1 || i > s.n()) throw std::invalid_argument("position " + std::to_string(i) + " out of range");
  if (!is_permutation_of(pi, s.d())) throw std::invalid_argument("pi is not a permutation of [d]");
  const int d = s.d();
  // Shift δ_{π_k} = k: the copy's weights are w_i - εδ.
  std::vector<int> delta(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) delta[pi[k] - 1] = k + 1;
  std::vector<NdType> out;
  for (const NdType& a : s.maximal_cells()) {
    const Mask ai = a.at(i);
    if (popcount(ai) == 1) {
      std::vector<Mask> entries(a.entries().begin(), a.entries().end());
      entries.push_back(ai);
      out.emplace_back(d, std::move(entries));
      continue;
    }
    for (const OrderedPartition& p : ordered_partitions(d)) {
      const NdType b = refine(a, p);
      for (Mask y : nonempty_subsets(ai)) {
        std::vector<Mask> entries(b.entries().begin(), b.entries().end());
        entries.push_back(y);
        NdType cell(d, std::move(entries));
        if (cell_dimension(cell) != d - 1) continue;
        if (local_cell_feasible(p, ai, y, delta, d)) out.push_back(std::move(cell));
      }
    }
  }
  return MixedSubdivision(s.n() + 1, d, std::move(out));
}

MixedSubdivision blow_up_layout(const MixedSubdivision& blown, int i) {
  const int n = blown.n() - 1;
  if (n < 1 || i < 1 || i > n) throw std::invalid_argument("layout position out of range");
  std::vector<NdType> out;
  for (const NdType& c : blown.maximal_cells()) {
    std::vector<Mask> entries(c.entries().begin(), c.entries().end() - 2);
    entries.insert(entries.begin() + (i - 1), c[c.n() - 2]);
    entries.push_back(c[c.n() - 1]);
    out.emplace_back(blown.d(), std::move(entries));
  }
  return MixedSubdivision(blown.n(), blown.d(), std::move(out));
}

}  // namespace tropmat
