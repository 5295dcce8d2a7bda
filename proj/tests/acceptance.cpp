// Property checks over exhaustive and randomized corpora; one line per criterion.
#include <chrono>
#include <cstdio>
#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>

#include "oracles.hpp"
#include "tropmat/axioms.hpp"
#include "tropmat/blowup.hpp"
#include "tropmat/census.hpp"
#include "tropmat/convexity.hpp"
#include "tropmat/halfspace.hpp"
#include "tropmat/mij.hpp"
#include "tropmat/ops.hpp"
#include "tropmat/placing.hpp"
#include "tropmat/realize.hpp"

using namespace tropmat;

namespace {

struct Tally {
  long checks = 0;
  long failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      if (failures == 0) first = what;
      ++failures;
    }
  }
};

bool report(int id, const std::string& title, const Tally& t, double seconds, const std::string& extra = "") {
  const bool pass = t.failures == 0 && t.checks > 0;
  std::printf("[%s] %d. %s: %ld checks, %ld failures (%.1fs)%s%s\n", pass ? "PASS" : "FAIL", id, title.c_str(),
              t.checks, t.failures, seconds, extra.empty() ? "" : "; ", extra.c_str());
  if (!pass && !t.first.empty()) std::printf("       first failure: %s\n", t.first.c_str());
  std::fflush(stdout);
  return pass;
}

double since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

WeightMatrix parse_weights(std::vector<std::vector<const char*>> rows) {
  std::vector<std::vector<Rational>> out;
  for (const auto& row : rows) {
    std::vector<Rational> r;
    for (const char* x : row) r.push_back(parse_rational(x));
    out.push_back(r);
  }
  return WeightMatrix(out);
}

std::vector<WeightMatrix> weight_corpus() {
  std::mt19937_64 rng(20240601);
  std::vector<WeightMatrix> out;
  for (auto [n, d] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 3}, {3, 4}}) {
    for (int k = 0; k < 34; ++k) out.push_back(random_generic_weights(n, d, rng));
  }
  return out;
}

const std::vector<std::pair<int, int>> kCensusShapes{{2, 2}, {3, 2}, {2, 3}};

std::string shape(int n, int d) { return "(" + std::to_string(n) + "," + std::to_string(d) + ")"; }

bool criterion_realizable(const std::vector<WeightMatrix>& corpus) {
  const auto start = std::chrono::steady_clock::now();
  Tally t;
  for (const WeightMatrix& w : corpus) {
    const Tom m = realize_tom(w);
    for (const AxiomReport& r : check_all(m)) {
      t.expect(r.pass, r.axiom + " fails for a " + shape(w.n(), w.d()) + " arrangement");
    }
  }
  return report(1, "realizable axiom suite over " + std::to_string(corpus.size()) + " generic arrangements", t,
                since(start));
}

bool criterion_oracles(const std::vector<WeightMatrix>& corpus) {
  const auto start = std::chrono::steady_clock::now();
  Tally t;
  for (const WeightMatrix& w : corpus) {
    const int n = w.n();
    const int d = w.d();
    const Tom fast = realize_tom(w);
    const Tom sweep = realize_tom_sweep(w);
    t.expect(fast == sweep, "vertex path and feasibility sweep differ for " + shape(n, d));
    std::vector<NdType> lattice;
    for (const LatticePoint& q : lattice_points(n, d)) {
      const auto here = lattice_tope(w, q);
      lattice.insert(lattice.end(), here.begin(), here.end());
    }
    normalize(lattice);
    t.expect(lattice == topes(sweep), "lattice topes differ from realized topes for " + shape(n, d));
    t.expect(static_cast<long long>(vertices(sweep).size()) == oracle::choose(n + d - 2, d - 1),
             "vertex count for " + shape(n, d));
    t.expect(static_cast<long long>(topes(sweep).size()) == oracle::choose(n + d - 1, d - 1),
             "tope count for " + shape(n, d));
  }
  return report(2, "oracle agreement (sweep, lattice topes, vertex and tope counts)", t, since(start));
}

bool criterion_bijection(const std::map<std::pair<int, int>, std::vector<MixedSubdivision>>& all) {
  const auto start = std::chrono::steady_clock::now();
  Tally t;
  std::string counts;
  for (const auto& [nd, subs] : all) {
    std::set<std::vector<NdType>> type_sets;
    std::set<TopeMap> tope_maps;
    int fine = 0;
    for (const MixedSubdivision& s : subs) {
      const SubdivisionReport v = verify_subdivision(s);
      t.expect(v.pass, "census member fails verification");
      const Tom m = to_tom(s);
      for (const AxiomReport& r : check_all(m)) t.expect(r.pass, r.axiom + " fails on a censused subdivision");
      t.expect(from_tom(m) == s, "from_tom(to_tom(S)) != S");
      type_sets.insert(m.types());
      tope_maps.insert(topes_of(s));
      fine += is_fine(s) ? 1 : 0;
    }
    t.expect(type_sets.size() == subs.size(), "two subdivisions share a type set");
    t.expect(tope_maps.size() == subs.size(), "two subdivisions share a tope map");
    counts += (counts.empty() ? "" : ", ") + shape(nd.first, nd.second) + ": " + std::to_string(subs.size()) +
              " subdivisions (" + std::to_string(fine) + " fine)";
  }
  return report(3, "census bijection", t, since(start), counts);
}

bool criterion_connectivity(const std::map<std::pair<int, int>, std::vector<MixedSubdivision>>& all) {
  const auto start = std::chrono::steady_clock::now();
  Tally t;
  for (const auto& [nd, subs] : all) {
    for (const MixedSubdivision& s : subs) {
      const Tom m = to_tom(s);
      for (const NdType& a : m) {
        for (const NdType& b : m) {
          const auto hull = convex_hull(m.types(), a, b);
          const bool connected = is_connected_subcomplex(s, hull);
          bool all_j = true;
          for (int j = 1; j <= m.n(); ++j) {
            const bool brute = find_elimination(m, a, b, j).has_value();
            all_j = all_j && brute;
            if (connected) {
              const auto walked = eliminate_via_connectivity(m.types(), a, b, j);
              t.expect(walked.has_value() == brute, "path walk and brute-force elimination disagree");
              if (walked) t.expect(walked->at(j) == (a.at(j) | b.at(j)), "path walk returned a wrong cell");
            }
          }
          t.expect(all_j == connected, "elimination for " + a.str() + "," + b.str() + " vs hull connectivity");
          t.expect(elimination_chain_holds(m, a, b), "dist does not shrink along the chain for " + a.str() + "," +
                                                         b.str());
        }
      }
    }
  }
  return report(4, "elimination iff connected hull, dist-decrease chains", t, since(start));
}

bool criterion_duality(const std::map<std::pair<int, int>, std::vector<MixedSubdivision>>& all) {
  const auto start = std::chrono::steady_clock::now();
  Tally t;
  for (const auto& [nd, subs] : all) {
    for (const MixedSubdivision& s : subs) {
      const Tom m = to_tom(s);
      const Tom dual = dual_tom(m);
      t.expect(dual.n() == m.d() && dual.d() == m.n(), "dual parameters");
      t.expect(all_pass(check_all(dual)), "dual fails an axiom");
      t.expect(vertices(dual_tom(dual)) == vertices(m), "double dual changes the vertex set");
      std::vector<NdType> moved;
      for (const NdType& v : vertices(m)) moved.push_back(transpose(v));
      normalize(moved);
      t.expect(vertices(dual) == moved, "dual vertices are not the transposed vertices");
    }
  }
  return report(5, "duality", t, since(start));
}

bool criterion_constructions(const std::map<std::pair<int, int>, std::vector<MixedSubdivision>>& all) {
  const auto start = std::chrono::steady_clock::now();
  Tally t;
  long outputs = 0;
  const auto check = [&](const MixedSubdivision& out, const std::string& what) {
    ++outputs;
    Rational target = 1;
    for (int k = 1; k < out.d(); ++k) target *= out.n();
    const SubdivisionReport r = verify_subdivision(out);
    t.expect(r.pass, what + " output fails verification");
    t.expect(r.volume == target, what + " output has the wrong volume");
  };
  for (const auto& [nd, subs] : all) {
    const auto [n, d] = nd;
    for (const MixedSubdivision& s : subs) {
      for (const Permutation& sigma : all_permutations(d)) check(n_placing(s, sigma), "n-placing");
      for (const Permutation& tau : all_permutations(n)) check(d_placing(s, tau), "d-placing");
      for (int i = 1; i <= n; ++i) {
        for (const Permutation& pi : all_permutations(d)) {
          const MixedSubdivision nonfine = blow_up_nonfine(s, i, pi);
          check(nonfine, "non-fine blow-up");
          if (!is_fine(s)) continue;
          const MixedSubdivision placed = n_placing(trivial_subdivision(1, d), reversed(pi));
          const MixedSubdivision fine = blow_up(s, i, placed);
          check(fine, "blow-up");
          t.expect(blow_up_layout(fine, i) == nonfine, "fine and non-fine blow-ups disagree");
        }
      }
    }
  }
  return report(6, "constructions preserve validity", t, since(start), std::to_string(outputs) + " outputs");
}

// Every I (nonempty subsets, [d] allowed) and J (set partitions) per position.
void for_each_system(int n, int d, const std::function<void(const HalfspaceSystem&, const PartitionTuple&)>& f) {
  const std::vector<Mask> subsets = nonempty_subsets(full_mask(d));
  const std::vector<std::vector<Mask>> parts = set_partitions(full_mask(d));
  HalfspaceSystem i(static_cast<std::size_t>(n));
  PartitionTuple j(static_cast<std::size_t>(n));
  std::function<void(int)> fill = [&](int p) {
    if (p == n) {
      f(i, j);
      return;
    }
    for (Mask s : subsets) {
      i[p] = s;
      for (const auto& part : parts) {
        j[p] = part;
        fill(p + 1);
      }
    }
  };
  fill(0);
}

bool criterion_machinery(const std::map<std::pair<int, int>, std::vector<MixedSubdivision>>& all) {
  const auto start = std::chrono::steady_clock::now();
  Tally t;
  std::vector<Tom> corpus;
  for (const auto& [nd, subs] : all) {
    for (const MixedSubdivision& s : subs) {
      if (is_fine(s)) corpus.push_back(to_tom(s));
    }
  }
  std::mt19937_64 rng(77);
  for (int k = 0; k < 4; ++k) corpus.push_back(realize_tom(random_generic_weights(3, 3, rng)));
  for (int k = 0; k < 2; ++k) corpus.push_back(realize_tom(random_generic_weights(2, 4, rng)));
  corpus.push_back(realize_tom(random_generic_weights(4, 2, rng)));

  long complexes = 0;
  long witnesses = 0;
  long covector_sets = 0;
  for (const Tom& m : corpus) {
    t.expect(is_general_position(m), "corpus member not in general position");
    for_each_system(m.n(), m.d(), [&](const HalfspaceSystem& i, const PartitionTuple& j) {
      const MijReport r = mij_report(m, i, j);
      if (r.members.empty()) return;
      ++complexes;
      t.expect(r.pure && r.extends, "M(I,J) is not pure of the expected dimension");
      t.expect(r.connected, "M(I,J) is disconnected");
      ++witnesses;
      const ConstructibilityResult w = constructibility_witness(m, i, j);
      t.expect(w.ok, "no constructibility witness: " + w.failure);
    });
    for (int mask = 1; mask < (1 << m.n()); ++mask) {
      std::vector<int> positions;
      for (int p = 1; p <= m.n(); ++p) {
        if (mask & (1 << (p - 1))) positions.push_back(p);
      }
      HalfspaceSystem i(static_cast<std::size_t>(m.n()));
      std::function<void(int)> fill = [&](int p) {
        if (p == m.n()) {
          ++covector_sets;
          t.expect(covectors_complete(halfspace_covectors(m, positions, i), positions.size()),
                   "covectors miss a sign vector although zero is present");
          return;
        }
        for (Mask s = 1; s < full_mask(m.d()); ++s) {
          i[p] = s;
          fill(p + 1);
        }
      };
      fill(0);
    }
  }
  long triples = 0;
  long searched = 0;
  for (int d : {3, 4}) {
    const Mask full = full_mask(d);
    for (Mask i = 1; i < full; ++i) {
      for (Mask j = 1; j < full; ++j) {
        for (Mask k = 1; k <= full; ++k) {
          if (k == i || k == j || k == (i | j)) continue;
          ++triples;
          const auto h = separating_halfspace(d, i, j, k);
          t.expect(h.has_value() && separates(*h, i, j, k), "no separating halfspace");
          if (h && h->recipe == 0) ++searched;
        }
      }
    }
  }
  return report(7, "M(I,J), constructibility, covectors, separating halfspaces", t, since(start),
                std::to_string(complexes) + " complexes, " + std::to_string(witnesses) + " witnesses, " +
                    std::to_string(covector_sets) + " covector sets, " + std::to_string(triples) + " triples (" +
                    std::to_string(searched) + " needed search)");
}

bool criterion_fixtures() {
  const auto start = std::chrono::steady_clock::now();
  Tally t;
  // A generic arrangement with the combinatorics of the convex hull figure.
  const WeightMatrix w = parse_weights({{"-2", "0", "0"}, {"2", "-2", "0"}, {"4", "3", "0"}});
  const Tom m = realize_tom(w);
  const NdType a = NdType::parse("(2,2,3)", 3);
  const NdType b = NdType::parse("(1,1,1)", 3);
  const NdType c = NdType::parse("(1,1,3)", 3);
  t.expect(is_generic(w), "figure weights are not generic");
  t.expect(m.contains(a) && m.contains(b), "figure topes missing");
  const auto hull = convex_hull(m.types(), a, b);
  t.expect(std::find(hull.begin(), hull.end(), c) != hull.end(), "(1,1,3) not in the hull");
  const auto e = find_elimination(m, a, b, 3);
  t.expect(e.has_value() && e->at(3) == parse_mask("13"), "no elimination with C_3 = 13");

  const auto split = constructible_split({full_mask(4)}, {{parse_mask("14"), parse_mask("23")}},
                                         NdType::parse("(13)", 4), NdType::parse("(24)", 4));
  t.expect(split.has_value(), "no split for the constructibility figure");
  if (split) {
    t.expect(split->a == 1 && split->b == 4, "split labels");
    t.expect(split->j0 == PartitionTuple{{parse_mask("1"), parse_mask("4"), parse_mask("23")}}, "split J_0");
    t.expect(split->i1 == parse_mask("234") && split->i2 == parse_mask("123"), "split I_1, I_2");
  }
  std::vector<NdType> line;
  for (Mask s : nonempty_subsets(full_mask(4))) line.emplace_back(4, std::vector{s});
  const MijReport r = mij_report(Tom(1, 4, line), {full_mask(4)}, {{parse_mask("14"), parse_mask("23")}});
  t.expect(r.ok() && r.expected_dimension == 2 && r.maximal.size() == 4, "figure complex");

  const MixedSubdivision placed = n_placing(trivial_subdivision(1, 3), {1, 2, 3});
  std::vector<NdType> stair;
  for (const char* x : {"(123,1)", "(23,12)", "(3,123)"}) stair.push_back(NdType::parse(x, 3));
  normalize(stair);
  t.expect(placed.maximal_cells() == stair, "placing example");
  t.expect(verify_subdivision(placed).volume == 4, "placing example volume");
  return report(8, "worked figure fixtures", t, since(start));
}

}  // namespace

int main() {
  const std::vector<WeightMatrix> corpus = weight_corpus();
  std::map<std::pair<int, int>, std::vector<MixedSubdivision>> all;
  for (auto nd : kCensusShapes) all[nd] = census(nd.first, nd.second);

  int passed = 0;
  passed += criterion_realizable(corpus);
  passed += criterion_oracles(corpus);
  passed += criterion_bijection(all);
  passed += criterion_connectivity(all);
  passed += criterion_duality(all);
  passed += criterion_constructions(all);
  passed += criterion_machinery(all);
  passed += criterion_fixtures();
  std::printf("%d/8 criteria passed\n", passed);
  return passed == 8 ? 0 : 1;
}
