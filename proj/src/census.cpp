#include "tropmat/census.hpp"

#include <algorithm>
#include <functional>

#include "tropmat/comparability.hpp"

namespace tropmat {

std::vector<NdType> full_dimensional_types(int n, int d) {
  const std::vector<Mask> choices = nonempty_subsets(full_mask(d));
  std::vector<NdType> out;
  std::vector<Mask> entries(static_cast<std::size_t>(n));
  std::function<void(int)> fill = [&](int i) {
    if (i == n) {
      NdType t(d, entries);
      if (cell_dimension(t) == d - 1) out.push_back(std::move(t));
      return;
    }
    for (Mask m : choices) {
      entries[i] = m;
      fill(i + 1);
    }
  };
  fill(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MixedSubdivision> census(int n, int d) {
  const std::vector<NdType> cells = full_dimensional_types(n, d);
  const std::size_t count = cells.size();
  std::vector<Rational> volume;
  for (const NdType& c : cells) volume.push_back(cell_volume(c));
  std::vector<std::vector<bool>> compatible(count, std::vector<bool>(count));
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) compatible[a][b] = a == b || comparable(cells[a], cells[b]);
  }
  Rational target = 1;
  for (int k = 1; k < d; ++k) target *= n;

  std::vector<MixedSubdivision> out;
  std::vector<std::size_t> chosen;
  // Include/exclude search in index order, pruned by volume and by the
  // volume still reachable from compatible later cells.
  std::function<void(std::size_t, const Rational&)> search = [&](std::size_t next, const Rational& used) {
    if (used == target) {
      std::vector<NdType> picked;
      for (std::size_t k : chosen) picked.push_back(cells[k]);
      out.emplace_back(n, d, std::move(picked));
      return;
    }
    Rational reachable = used;
    for (std::size_t k = next; k < count; ++k) {
      bool ok = true;
      for (std::size_t c : chosen) ok = ok && compatible[c][k];
      if (ok) reachable += volume[k];
    }
    if (reachable < target) return;
    for (std::size_t k = next; k < count; ++k) {
      bool ok = used + volume[k] <= target;
      for (std::size_t c : chosen) ok = ok && compatible[c][k];
      if (!ok) continue;
      chosen.push_back(k);
      search(k + 1, used + volume[k]);
      chosen.pop_back();
    }
  };
  search(0, Rational(0));
  std::sort(out.begin(), out.end(),
            [](const MixedSubdivision& a, const MixedSubdivision& b) { return a.maximal_cells() < b.maximal_cells(); });
  return out;
}

}  // namespace tropmat
