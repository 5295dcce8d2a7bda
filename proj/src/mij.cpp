#include "tropmat/mij.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tropmat/axioms.hpp"
#include "tropmat/convexity.hpp"
#include "tropmat/kernels.hpp"
#include "tropmat/partition.hpp"

namespace tropmat {

void validate_halfspace_system(const HalfspaceSystem& i, int n, int d, bool allow_full) {
  if (static_cast<int>(i.size()) != n) {
    throw std::invalid_argument("I has " + std::to_string(i.size()) + " entries, expected " + std::to_string(n));
  }
  for (std::size_t k = 0; k < i.size(); ++k) {
    const bool full = i[k] == full_mask(d);
    if (i[k] == 0 || !is_subset(i[k], full_mask(d)) || (full && !allow_full)) {
      throw std::invalid_argument("I_" + std::to_string(k + 1) + " must be a nonempty " +
                                  (allow_full ? "" : "proper ") + "subset of [" + std::to_string(d) + "]");
    }
  }
}

void validate_partition_tuple(const PartitionTuple& j, int n, int d) {
  if (static_cast<int>(j.size()) != n) {
    throw std::invalid_argument("J has " + std::to_string(j.size()) + " entries, expected " + std::to_string(n));
  }
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (!OrderedPartition{j[k]}.is_partition_of(d)) {
      throw std::invalid_argument("J_" + std::to_string(k + 1) + " is not a partition of [" + std::to_string(d) + "]");
    }
  }
}

std::vector<NdType> m_of(const std::vector<NdType>& types, const HalfspaceSystem& i, const PartitionTuple& j) {
  if (types.empty()) return {};
  const int n = types.front().n();
  const int d = types.front().d();
  validate_halfspace_system(i, n, d, true);
  validate_partition_tuple(j, n, d);
  const TypeTable table(types);
  Selection keep = select_subset(table, NdType(d, i));
  for (int p = 0; p < n; ++p) {
    for (Mask block : j[p]) intersect(keep, select_meets(table, p, block));
  }
  std::vector<NdType> out;
  for (std::size_t k : indices(keep)) out.push_back(types[k]);
  return out;
}

std::vector<NdType> m_of(const Tom& m, const HalfspaceSystem& i, const PartitionTuple& j) {
  return m_of(m.types(), i, j);
}

std::vector<NdType> maximal_members(const std::vector<NdType>& cells) {
  std::vector<NdType> out;
  for (const NdType& c : cells) {
    const bool below = std::any_of(cells.begin(), cells.end(),
                                   [&](const NdType& other) { return other != c && is_face(other, c); });
    if (!below) out.push_back(c);
  }
  return out;
}

std::vector<NdType> closure(const std::vector<NdType>& universe, const std::vector<NdType>& cells) {
  std::vector<NdType> out;
  for (const NdType& t : universe) {
    if (std::any_of(cells.begin(), cells.end(), [&](const NdType& c) { return is_face(c, t); })) out.push_back(t);
  }
  return out;
}

int expected_dimension(int n, int d, const PartitionTuple& j) {
  int blocks = 0;
  for (const auto& part : j) blocks += static_cast<int>(part.size());
  return d + n - 1 - blocks;
}

MijReport mij_report(const Tom& m, const HalfspaceSystem& i, const PartitionTuple& j) {
  MijReport r;
  r.members = m_of(m, i, j);
  r.maximal = maximal_members(r.members);
  r.expected_dimension = expected_dimension(m.n(), m.d(), j);
  for (const NdType& c : r.maximal) {
    if (dimension(c) != r.expected_dimension) r.pure = false;
  }
  for (const NdType& t : r.members) {
    if (std::none_of(r.maximal.begin(), r.maximal.end(), [&](const NdType& c) { return is_face(c, t); })) {
      r.extends = false;
    }
  }
  r.connected = is_connected_subcomplex(r.members, r.maximal);
  return r;
}

namespace {

std::vector<MijSplit> split_candidates(const HalfspaceSystem& i, const PartitionTuple& j, const NdType& a,
                                       const NdType& b) {
  std::vector<MijSplit> out;
  for (int k = 1; k <= a.n(); ++k) {
    if (a.at(k) == b.at(k)) continue;
    const std::vector<Mask>& blocks = j[k - 1];
    for (std::size_t l = 0; l < blocks.size(); ++l) {
      const Mask block = blocks[l];
      const Mask in_a = a.at(k) & block;
      const Mask in_b = b.at(k) & block;
      if (in_a == in_b) continue;
      // Labels of A only first, then shared ones.
      std::vector<int> picks = labels(static_cast<Mask>(in_a & ~in_b));
      for (int x : labels(static_cast<Mask>(in_a & in_b))) picks.push_back(x);
      for (int pa : picks) {
        const Mask rest = static_cast<Mask>(block & ~bit(pa));
        Mask b_side = static_cast<Mask>(in_b & ~in_a);
        if (b_side == 0) b_side = static_cast<Mask>(in_b & ~bit(pa));
        if (b_side == 0) continue;
        MijSplit s;
        s.k = k;
        s.l = static_cast<int>(l) + 1;
        s.a = pa;
        s.b = lowest(b_side);
        s.i1 = static_cast<Mask>(i[k - 1] & ~bit(pa));
        s.i2 = static_cast<Mask>(i[k - 1] & ~rest);
        s.j0 = j;
        std::vector<Mask>& parts = s.j0[k - 1];
        parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(l));
        parts.insert(parts.begin() + static_cast<std::ptrdiff_t>(l), {bit(pa), rest});
        out.push_back(std::move(s));
      }
    }
  }
  return out;
}

HalfspaceSystem with_entry(HalfspaceSystem i, int k, Mask value) {
  i[k - 1] = value;
  return i;
}

std::vector<NdType> sorted_union(std::vector<NdType> x, const std::vector<NdType>& y) {
  x.insert(x.end(), y.begin(), y.end());
  normalize(x);
  return x;
}

std::vector<NdType> sorted_intersection(const std::vector<NdType>& x, const std::vector<NdType>& y) {
  std::vector<NdType> out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

bool healthy(const std::vector<NdType>& members, const std::vector<NdType>& maximal, int dim) {
  if (members.empty()) return false;
  for (const NdType& c : maximal) {
    if (dimension(c) != dim) return false;
  }
  return is_connected_subcomplex(members, maximal);
}

class Builder {
 public:
  explicit Builder(const Tom& m) : m_(m) {}

  bool build(ConstructibilityNode& node, std::string& failure) {
    const std::vector<NdType> members = m_of(m_, node.i, node.j);
    node.maximal = maximal_members(members);
    node.dimension = expected_dimension(m_.n(), m_.d(), node.j);
    if (!healthy(members, node.maximal, node.dimension)) {
      failure = "M(I,J) is empty, impure or disconnected";
      return false;
    }
    if (node.maximal.size() == 1) return true;
    const std::vector<NdType> whole = closure(m_.types(), members);
    for (std::size_t x = 0; x < node.maximal.size(); ++x) {
      for (std::size_t y = x + 1; y < node.maximal.size(); ++y) {
        for (const MijSplit& s : split_candidates(node.i, node.j, node.maximal[x], node.maximal[y])) {
          if (try_split(node, s, members.size(), whole, failure)) return true;
          if (!failure.empty()) return false;
        }
      }
    }
    failure = "no valid split of M(I,J)";
    return false;
  }

 private:
  // False with empty failure: rejected candidate. False with failure set:
  // a descendant could not be split.
  bool try_split(ConstructibilityNode& node, const MijSplit& s, std::size_t size, const std::vector<NdType>& whole,
                 std::string& failure) {
    if (s.i1 == 0 || s.i2 == 0) return false;
    const HalfspaceSystem i1 = with_entry(node.i, s.k, s.i1);
    const HalfspaceSystem i2 = with_entry(node.i, s.k, s.i2);
    const std::vector<NdType> left = m_of(m_, i1, node.j);
    const std::vector<NdType> right = m_of(m_, i2, node.j);
    const std::vector<NdType> meet = m_of(m_, node.i, s.j0);
    if (left.empty() || right.empty() || meet.empty()) return false;
    if (left.size() >= size || right.size() >= size) return false;
    if (!healthy(left, maximal_members(left), node.dimension)) return false;
    if (!healthy(right, maximal_members(right), node.dimension)) return false;
    if (!healthy(meet, maximal_members(meet), node.dimension - 1)) return false;
    const std::vector<NdType> cl_left = closure(m_.types(), left);
    const std::vector<NdType> cl_right = closure(m_.types(), right);
    if (sorted_union(cl_left, cl_right) != whole) return false;
    if (sorted_intersection(cl_left, cl_right) != closure(m_.types(), meet)) return false;

    node.split = s;
    node.children.assign(3, ConstructibilityNode{});
    node.children[0].i = i1;
    node.children[0].j = node.j;
    node.children[1].i = i2;
    node.children[1].j = node.j;
    node.children[2].i = node.i;
    node.children[2].j = s.j0;
    for (ConstructibilityNode& child : node.children) {
      if (!build(child, failure)) return false;
    }
    return true;
  }

  const Tom& m_;
};

}  // namespace

std::optional<MijSplit> constructible_split(const HalfspaceSystem& i, const PartitionTuple& j, const NdType& a,
                                            const NdType& b) {
  const std::vector<MijSplit> all = split_candidates(i, j, a, b);
  if (all.empty()) return std::nullopt;
  return all.front();
}

ConstructibilityResult constructibility_witness(const Tom& m, const HalfspaceSystem& i, const PartitionTuple& j) {
  if (!is_general_position(m)) throw std::invalid_argument("constructibility needs a TOM in general position");
  if (m_of(m, i, j).empty()) throw std::invalid_argument("M(I,J) is empty");
  ConstructibilityResult r;
  r.root.i = i;
  r.root.j = j;
  r.ok = Builder(m).build(r.root, r.failure);
  return r;
}

std::size_t node_count(const ConstructibilityNode& node) {
  std::size_t total = 1;
  for (const ConstructibilityNode& c : node.children) total += node_count(c);
  return total;
}

}  // namespace tropmat
