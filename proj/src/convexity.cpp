#include "tropmat/convexity.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "tropmat/axioms.hpp"
#include "tropmat/kernels.hpp"
#include "tropmat/partition.hpp"

namespace tropmat {

namespace {

void require_member(const std::vector<NdType>& types, const NdType& t) {
  if (std::find(types.begin(), types.end(), t) == types.end()) {
    throw std::invalid_argument(t.str() + " is not a member of the type set");
  }
}

}  // namespace

std::vector<NdType> convex_hull(const std::vector<NdType>& types, const NdType& a, const NdType& b) {
  require_member(types, a);
  require_member(types, b);
  const TypeTable table(types);
  std::vector<NdType> out;
  for (std::size_t k : indices(select_hull(table, a, b))) out.push_back(types[k]);
  return out;
}

std::vector<int> dist(const NdType& a, const NdType& b) {
  std::vector<int> out;
  for (int i = 0; i < a.n(); ++i) {
    if (!is_subset(a[i], b[i]) && !is_subset(b[i], a[i])) out.push_back(i + 1);
  }
  return out;
}

bool is_connected_subcomplex(const std::vector<NdType>& universe, const std::vector<NdType>& cells) {
  if (cells.size() <= 1) return true;
  std::vector<std::size_t> parent(cells.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const NdType& e : universe) {
    std::size_t first = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (!is_face(cells[c], e)) continue;
      if (first == cells.size()) {
        first = c;
      } else {
        parent[find(c)] = find(first);
      }
    }
  }
  const std::size_t root = find(0);
  for (std::size_t c = 1; c < cells.size(); ++c) {
    if (find(c) != root) return false;
  }
  return true;
}

bool is_connected_subcomplex(const MixedSubdivision& s, const std::vector<NdType>& cells) {
  return is_connected_subcomplex(s.all_cells(), cells);
}

std::optional<NdType> eliminate_via_connectivity(const std::vector<NdType>& types, const NdType& a, const NdType& b,
                                                 int j) {
  const std::vector<NdType> hull = convex_hull(types, a, b);
  const auto index_of = [&](const NdType& t) {
    return static_cast<std::size_t>(std::find(hull.begin(), hull.end(), t) - hull.begin());
  };
  const std::size_t start = index_of(a);
  const std::size_t goal = index_of(b);
  std::vector<std::size_t> from(hull.size(), hull.size());
  from[start] = start;
  std::deque<std::size_t> queue{start};
  while (!queue.empty() && from[goal] == hull.size()) {
    const std::size_t c = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < hull.size(); ++k) {
      if (from[k] != hull.size()) continue;
      if (is_face(hull[c], hull[k]) || is_face(hull[k], hull[c])) {
        from[k] = c;
        queue.push_back(k);
      }
    }
  }
  if (from[goal] == hull.size()) {
    throw std::runtime_error("convex hull of " + a.str() + " and " + b.str() + " is disconnected");
  }
  std::vector<std::size_t> path{goal};
  while (path.back() != start) path.push_back(from[path.back()]);
  std::reverse(path.begin(), path.end());
  const Mask target = static_cast<Mask>(a.at(j) | b.at(j));
  for (std::size_t k : path) {
    if (hull[k].at(j) == target) return hull[k];
  }
  return std::nullopt;
}

bool elimination_chain_holds(const Tom& m, const NdType& a, const NdType& b) {
  const std::vector<int> gap = dist(a, b);
  if (gap.empty()) return true;
  const std::optional<NdType> c = find_elimination(m, a, b, gap.front());
  if (!c) return false;
  if (dist(a, *c).size() + 1 > gap.size() || dist(b, *c).size() + 1 > gap.size()) return false;
  return elimination_chain_holds(m, a, *c) && elimination_chain_holds(m, *c, b);
}

std::vector<NdType> star(const std::vector<NdType>& types, const NdType& t) {
  require_member(types, t);
  const TypeTable table(types);
  std::vector<NdType> out;
  for (std::size_t k : indices(select_subset(table, t))) out.push_back(types[k]);
  return out;
}

}  // namespace tropmat
