#include "tropmat/comparability.hpp"

#include <array>
#include <numeric>
#include <sstream>

namespace tropmat {

namespace {

// Mixed graph on labels 1..d as bitmasks: `tied` holds undirected
// adjacency, `succ` directed successors.
struct MixedGraph {
  int d = 0;
  std::array<Mask, kMaxLabels + 1> tied{};
  std::array<Mask, kMaxLabels + 1> succ{};
};

bool mixed_graph_acyclic(const MixedGraph& g) {
  // Contract undirected components.
  std::array<int, kMaxLabels + 1> comp{};
  std::array<Mask, kMaxLabels + 1> members{};
  int count = 0;
  Mask unassigned = full_mask(g.d);
  while (unassigned != 0) {
    Mask frontier = bit(lowest(unassigned));
    Mask seen = frontier;
    while (frontier != 0) {
      const int v = lowest(frontier);
      frontier &= static_cast<Mask>(~bit(v));
      const Mask next = static_cast<Mask>(g.tied[v] & ~seen);
      seen |= next;
      frontier |= next;
    }
    for (int v : labels(seen)) comp[v] = count;
    members[count] = seen;
    ++count;
    unassigned &= static_cast<Mask>(~seen);
  }

  // Directed edge inside a component closes a cycle immediately.
  std::array<Mask, kMaxLabels + 1> out{};  // component -> component bitmask
  for (int v = 1; v <= g.d; ++v) {
    if ((g.succ[v] & members[comp[v]]) != 0) return false;
    for (int w : labels(g.succ[v])) out[comp[v]] |= bit(comp[w] + 1);
  }

  // Transitive closure over at most 16 components.
  std::array<Mask, kMaxLabels + 1> reach = out;
  for (int k = 0; k < count; ++k) {
    for (int c = 0; c < count; ++c) {
      if ((reach[c] & bit(k + 1)) != 0) reach[c] |= reach[k];
    }
  }
  for (int c = 0; c < count; ++c) {
    if ((reach[c] & bit(c + 1)) != 0) return false;
  }
  return true;
}

}  // namespace

ComparabilityGraph comparability_graph(const NdType& a, const NdType& b) {
  ComparabilityGraph g{a.d(), {}};
  for (int i = 0; i < a.n(); ++i) {
    const Mask both = static_cast<Mask>(a[i] & b[i]);
    for (int j : labels(a[i])) {
      for (int k : labels(b[i])) {
        if (j == k) continue;
        const bool undirected = contains(both, j) && contains(both, k);
        if (undirected && j > k) continue;
        g.edges.push_back({j, k, !undirected, i + 1});
      }
    }
  }
  return g;
}

bool is_acyclic(const ComparabilityGraph& g) {
  MixedGraph m;
  m.d = g.d;
  for (const ComparabilityEdge& e : g.edges) {
    if (e.directed) {
      m.succ[e.from] |= bit(e.to);
    } else {
      m.tied[e.from] |= bit(e.to);
      m.tied[e.to] |= bit(e.from);
    }
  }
  return mixed_graph_acyclic(m);
}

bool comparable(const NdType& a, const NdType& b) {
  MixedGraph m;
  m.d = a.d();
  for (int i = 0; i < a.n(); ++i) {
    const Mask both = static_cast<Mask>(a[i] & b[i]);
    if (popcount(both) >= 2) {
      for (int j : labels(both)) m.tied[j] |= static_cast<Mask>(both & ~bit(j));
    }
    for (int j : labels(a[i])) {
      const Mask targets = contains(both, j) ? static_cast<Mask>(b[i] & ~both)
                                             : static_cast<Mask>(b[i] & ~bit(j));
      m.succ[j] |= targets;
    }
  }
  return mixed_graph_acyclic(m);
}

ComparabilityGraph reversed(const ComparabilityGraph& g) {
  ComparabilityGraph r = g;
  for (ComparabilityEdge& e : r.edges) {
    if (e.directed) std::swap(e.from, e.to);
  }
  return r;
}

std::string comparability_dot(const ComparabilityGraph& g) {
  std::ostringstream out;
  out << "digraph CG {\n";
  for (int j = 1; j <= g.d; ++j) out << "  " << j << ";\n";
  for (const ComparabilityEdge& e : g.edges) {
    out << "  " << e.from << " -> " << e.to << " [label=\"" << e.position << "\"";
    if (!e.directed) out << ", dir=none";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace tropmat
