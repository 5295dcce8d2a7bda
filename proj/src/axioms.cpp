#include "tropmat/axioms.hpp"

#include <algorithm>

#include "tropmat/comparability.hpp"
#include "tropmat/kernels.hpp"

namespace tropmat {

namespace {

AxiomReport passed(const char* name) { return AxiomReport{name, true, std::nullopt}; }

AxiomReport failed(const char* name, AxiomWitness w) { return AxiomReport{name, false, std::move(w)}; }

NdType constant_type(int n, int d, int j) { return NdType(d, std::vector<Mask>(static_cast<std::size_t>(n), bit(j))); }

bool incomparable_at(const NdType& a, const NdType& b, int i) {
  return !is_subset(a[i], b[i]) && !is_subset(b[i], a[i]);
}

// Elimination for one pair against a prebuilt table; returns the first
// failing position (1-based) or 0.
int first_failed_position(const TypeTable& table, const NdType& a, const NdType& b) {
  Selection hull;
  for (int i = 0; i < a.n(); ++i) {
    // When one entry contains the other, A or B itself eliminates.
    if (!incomparable_at(a, b, i)) continue;
    if (hull.empty()) hull = select_hull(table, a, b);
    Selection hit = select_equal(table, i, static_cast<Mask>(a[i] | b[i]));
    intersect(hit, hull);
    if (!any(hit)) return i + 1;
  }
  return 0;
}

}  // namespace

std::string AxiomWitness::describe() const {
  std::string s;
  for (std::size_t k = 0; k < types.size(); ++k) {
    if (k > 0) s += " ";
    s += types[k].str();
  }
  if (index != 0) s += (s.empty() ? "" : " ") + std::string("j=") + std::to_string(index);
  if (partition) {
    s += " P=(";
    for (std::size_t k = 0; k < partition->blocks.size(); ++k) {
      if (k > 0) s += ",";
      s += mask_to_string(partition->blocks[k]);
    }
    s += ")";
  }
  return s;
}

AxiomReport check_boundary(const Tom& m) {
  for (int j = 1; j <= m.d(); ++j) {
    if (!m.contains(constant_type(m.n(), m.d(), j))) return failed("boundary", AxiomWitness{{}, j, std::nullopt});
  }
  return passed("boundary");
}

AxiomReport check_comparability(const Tom& m) {
  const auto& t = m.types();
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t b = a + 1; b < t.size(); ++b) {
      if (!comparable(t[a], t[b])) return failed("comparability", AxiomWitness{{t[a], t[b]}, 0, std::nullopt});
    }
  }
  return passed("comparability");
}

AxiomReport check_elimination(const Tom& m) {
  const auto& t = m.types();
  const TypeTable table(t);
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t b = a + 1; b < t.size(); ++b) {
      if (int j = first_failed_position(table, t[a], t[b]); j != 0) {
        return failed("elimination", AxiomWitness{{t[a], t[b]}, j, std::nullopt});
      }
    }
  }
  return passed("elimination");
}

AxiomReport check_surrounding(const Tom& m) {
  for (const NdType& a : m.types()) {
    for (const OrderedPartition& p : ordered_partitions(m.d())) {
      if (!m.contains(refine(a, p))) return failed("surrounding", AxiomWitness{{a}, 0, p});
    }
  }
  return passed("surrounding");
}

std::vector<AxiomReport> check_all(const Tom& m) {
  return {check_boundary(m), check_comparability(m), check_elimination(m), check_surrounding(m)};
}

bool all_pass(const std::vector<AxiomReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const AxiomReport& r) { return r.pass; });
}

std::optional<NdType> find_elimination(const Tom& m, const NdType& a, const NdType& b, int j) {
  const Mask target = static_cast<Mask>(a.at(j) | b.at(j));
  for (const NdType& c : m.types()) {
    if (c.at(j) != target) continue;
    bool inside = true;
    for (int i = 0; i < c.n() && inside; ++i) {
      inside = c[i] == a[i] || c[i] == b[i] || c[i] == static_cast<Mask>(a[i] | b[i]);
    }
    if (inside) return c;
  }
  return std::nullopt;
}

bool is_general_position(const Tom& m) {
  return std::all_of(m.begin(), m.end(), [](const NdType& a) { return type_graph_acyclic(a); });
}

std::vector<NdType> vertices(const Tom& m) {
  std::vector<NdType> out;
  for (const NdType& a : m.types()) {
    if (dimension(a) == 0) out.push_back(a);
  }
  return out;
}

std::vector<NdType> topes(const Tom& m) {
  std::vector<NdType> out;
  for (const NdType& a : m.types()) {
    if (a.is_total()) out.push_back(a);
  }
  return out;
}

}  // namespace tropmat
