#include "tropmat/halfspace.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tropmat {

char sector_sign(Mask c, Mask i) {
  if (is_subset(c, i)) return '+';
  if ((c & i) == 0) return '-';
  return '0';
}

std::vector<SignVector> halfspace_covectors(const Tom& m, const std::vector<int>& positions,
                                            const HalfspaceSystem& i) {
  validate_halfspace_system(i, m.n(), m.d(), false);
  for (int p : positions) {
    if (p < 1 || p > m.n()) throw std::invalid_argument("position " + std::to_string(p) + " out of range");
  }
  std::set<SignVector> out;
  for (const NdType& c : m) {
    SignVector v;
    for (int p : positions) v.push_back(sector_sign(c.at(p), i[p - 1]));
    out.insert(v);
  }
  return {out.begin(), out.end()};
}

bool covectors_complete(const std::vector<SignVector>& covectors, std::size_t length) {
  const SignVector zero(length, '0');
  if (std::find(covectors.begin(), covectors.end(), zero) == covectors.end()) return true;
  std::size_t full = 1;
  for (std::size_t k = 0; k < length; ++k) full *= 3;
  return std::set<SignVector>(covectors.begin(), covectors.end()).size() == full;
}

std::vector<Mask> approximated_types(Mask i, const Permutation& pi) {
  std::set<Mask> out;
  Mask before = 0;
  for (int x : pi) {
    if (contains(i, x)) {
      for (Mask extra = before;; extra = static_cast<Mask>((extra - 1) & before)) {
        out.insert(static_cast<Mask>(extra | bit(x)));
        if (extra == 0) break;
      }
    }
    before |= bit(x);
  }
  return {out.begin(), out.end()};
}

bool separates(const SeparatingHalfspace& h, Mask i, Mask j, Mask k) {
  const std::vector<Mask> t = approximated_types(h.l, h.pi);
  const auto has = [&](Mask x) { return std::binary_search(t.begin(), t.end(), x); };
  return has(i) && has(j) && has(static_cast<Mask>(i | j)) && !has(k);
}

namespace {

// Labels of `first` ascending, then the given singles, then the rest of
// [d] ascending, with `last` (if nonzero) at the very end.
Permutation arrange(int d, Mask first, const std::vector<int>& singles, int last) {
  Permutation pi = labels(first);
  Mask used = first;
  for (int x : singles) {
    pi.push_back(x);
    used |= bit(x);
  }
  for (int x = 1; x <= d; ++x) {
    if (!contains(used, x) && x != last) pi.push_back(x);
  }
  if (last != 0) pi.push_back(last);
  return pi;
}

}  // namespace

SeparatingHalfspace separating_recipe(int d, Mask i, Mask j, Mask k) {
  const Mask both = static_cast<Mask>(i | j);
  if (!is_subset(k, both)) {
    const int x = lowest(static_cast<Mask>(k & ~both));
    const int a = lowest(i);
    const Mask others = static_cast<Mask>(j & ~bit(a));
    const int b = others != 0 ? lowest(others) : a;
    const Mask l = static_cast<Mask>(bit(a) | bit(b));
    return {l, arrange(d, static_cast<Mask>(both & ~l), {a, b}, x), 1};
  }
  if (is_subset(k, static_cast<Mask>(i & j))) {
    const int a = lowest(static_cast<Mask>(i & ~k));
    const int b = lowest(static_cast<Mask>(j & ~k));
    const Mask l = static_cast<Mask>(bit(a) | bit(b));
    return {l, arrange(d, static_cast<Mask>(both & ~l), {a, b}, 0), 2};
  }
  const int a = lowest(static_cast<Mask>(both & ~k));
  return {bit(a), arrange(d, static_cast<Mask>(both & ~bit(a)), {a}, 0), 3};
}

std::optional<SeparatingHalfspace> separating_halfspace(int d, Mask i, Mask j, Mask k) {
  const Mask full = full_mask(d);
  const auto proper = [&](Mask x) { return x != 0 && is_subset(x, full) && x != full; };
  if (!proper(i) || !proper(j)) throw std::invalid_argument("I and J must be nonempty proper subsets of [d]");
  if (k == 0 || !is_subset(k, full)) throw std::invalid_argument("K must be a nonempty subset of [d]");
  if (k == i || k == j || k == static_cast<Mask>(i | j)) throw std::invalid_argument("K must differ from I, J and I∪J");

  // The recipe's choices always exist under these preconditions.
  if (SeparatingHalfspace h = separating_recipe(d, i, j, k); separates(h, i, j, k)) return h;
  for (const Permutation& pi : all_permutations(d)) {
    for (Mask l = 1; l < full; ++l) {
      SeparatingHalfspace h{l, pi, 0};
      if (separates(h, i, j, k)) return h;
    }
  }
  return std::nullopt;
}

}  // namespace tropmat
