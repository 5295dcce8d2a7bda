#include "tropmat/partition.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tropmat/comparability.hpp"

namespace tropmat {

namespace {

constexpr int kDefaultPartitionLimit = 6;
std::atomic<int> g_partition_limit{kDefaultPartitionLimit};

void extend_ordered(Mask remaining, std::vector<Mask>& prefix, std::vector<OrderedPartition>& out) {
  if (remaining == 0) {
    out.push_back(OrderedPartition{prefix});
    return;
  }
  for (Mask block : nonempty_subsets(remaining)) {
    prefix.push_back(block);
    extend_ordered(static_cast<Mask>(remaining & ~block), prefix, out);
    prefix.pop_back();
  }
}

void extend_unordered(Mask remaining, std::vector<Mask>& prefix, std::vector<std::vector<Mask>>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  // The lowest remaining label anchors the next block, so each partition
  // is produced once.
  const Mask anchor = bit(lowest(remaining));
  const Mask rest = static_cast<Mask>(remaining & ~anchor);
  std::vector<Mask> tails = nonempty_subsets(rest);
  tails.insert(tails.begin(), 0);
  for (Mask tail : tails) {
    prefix.push_back(static_cast<Mask>(anchor | tail));
    extend_unordered(static_cast<Mask>(rest & ~tail), prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

bool OrderedPartition::is_partition_of(int count) const {
  Mask seen = 0;
  for (Mask b : blocks) {
    if (b == 0 || (seen & b) != 0) return false;
    seen |= b;
  }
  return seen == full_mask(count);
}

bool is_permutation_of(const Permutation& p, int count) {
  if (static_cast<int>(p.size()) != count) return false;
  std::vector<bool> seen(static_cast<std::size_t>(count) + 1, false);
  for (int v : p) {
    if (v < 1 || v > count || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::vector<Permutation> all_permutations(int count) {
  Permutation p(static_cast<std::size_t>(count));
  std::iota(p.begin(), p.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Permutation reversed(const Permutation& p) { return {p.rbegin(), p.rend()}; }

OrderedPartition as_partition(const Permutation& p) {
  OrderedPartition out;
  for (int v : p) out.blocks.push_back(bit(v));
  return out;
}

int partition_limit() { return g_partition_limit.load(); }

void set_partition_limit(int limit) {
  if (limit <= 0) limit = kDefaultPartitionLimit;
  g_partition_limit.store(std::min(limit, kMaxLabels));
}

const std::vector<OrderedPartition>& ordered_partitions(int count) {
  if (count < 1 || count > partition_limit()) {
    throw std::length_error("ordered partition enumeration of " + std::to_string(count) +
                            " labels exceeds the limit " + std::to_string(partition_limit()) +
                            " (TROPMAT_MAX_D)");
  }
  static std::array<std::vector<OrderedPartition>, kMaxLabels + 1> cache;
  static std::array<std::once_flag, kMaxLabels + 1> ready;
  std::call_once(ready[count], [count] { cache[count] = ordered_partitions_of(full_mask(count)); });
  return cache[count];
}

std::vector<OrderedPartition> ordered_partitions_of(Mask set) {
  std::vector<OrderedPartition> out;
  std::vector<Mask> prefix;
  extend_ordered(set, prefix, out);
  return out;
}

std::vector<std::vector<Mask>> set_partitions(Mask set) {
  std::vector<std::vector<Mask>> out;
  std::vector<Mask> prefix;
  extend_unordered(set, prefix, out);
  for (auto& blocks : out) std::sort(blocks.begin(), blocks.end());
  return out;
}

NdType refine(const NdType& a, const OrderedPartition& p) {
  std::vector<Mask> entries(static_cast<std::size_t>(a.n()));
  for (int i = 0; i < a.n(); ++i) {
    for (Mask block : p.blocks) {
      if ((a[i] & block) != 0) {
        entries[i] = static_cast<Mask>(a[i] & block);
        break;
      }
    }
    if (entries[i] == 0) throw std::invalid_argument("partition does not cover entry " + std::to_string(i + 1));
  }
  return NdType(a.d(), std::move(entries));
}

std::vector<NdType> faces(const NdType& a) {
  std::vector<NdType> out;
  for (const OrderedPartition& p : ordered_partitions(a.d())) out.push_back(refine(a, p));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_face(const NdType& b, const NdType& a) {
  if (a.n() != b.n() || a.d() != b.d()) return false;
  if (!b.entrywise_subset_of(a)) return false;
  // B refines A iff some weak order on [d] puts each B_i strictly below
  // A_i \ B_i with B_i tied: the comparability graph of (B, A).
  return comparable(b, a);
}

std::vector<NdType> face_closure(const std::vector<NdType>& cells) {
  std::vector<NdType> out;
  for (const NdType& c : cells) {
    std::vector<NdType> f = faces(c);
    out.insert(out.end(), f.begin(), f.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace tropmat
