// tropmat: command-line front end for the tropmat library.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tropmat/axioms.hpp"
#include "tropmat/blowup.hpp"
#include "tropmat/census.hpp"
#include "tropmat/comparability.hpp"
#include "tropmat/convexity.hpp"
#include "tropmat/halfspace.hpp"
#include "tropmat/io.hpp"
#include "tropmat/mij.hpp"
#include "tropmat/ops.hpp"
#include "tropmat/partition.hpp"
#include "tropmat/placing.hpp"
#include "tropmat/realize.hpp"
#include "tropmat/render.hpp"

using namespace tropmat;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

struct Options {
  std::string format = "json";
  std::string out;
  std::string tom;
  std::string subdivision;
  std::string weights;
  std::string with;
  std::string a;
  std::string b;
  std::vector<int> positions;
  std::vector<int> perm;
  std::vector<std::string> halfspaces;
  std::vector<std::string> partitions;
  int coordinate = 0;
  int n = 0;
  int d = 0;
  bool dot = false;
  bool labels = false;
  bool witness = false;
};

void write(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw InputError("--out", "cannot write " + o.out);
  file << text;
}

void emit(const Options& o, const Json& j, const std::function<std::string()>& text) {
  write(o, o.format == "text" ? text() : j.dump(2) + "\n");
}

std::string lines(const std::vector<NdType>& types) {
  std::string out;
  for (const NdType& t : types) out += t.str() + "\n";
  return out;
}

Json types_json(const std::vector<NdType>& types) {
  Json out = Json::array();
  for (const NdType& t : types) out.push_back(type_to_json(t));
  return out;
}

Tom load_tom(const Options& o) {
  if (!o.tom.empty()) return tom_from_json(read_json_file(o.tom));
  if (!o.subdivision.empty()) return to_tom(subdivision_from_json(read_json_file(o.subdivision)));
  throw InputError("--tom", "a TOM (--tom) or subdivision (--subdivision) input is required");
}

MixedSubdivision load_subdivision(const Options& o) {
  if (!o.subdivision.empty()) return subdivision_from_json(read_json_file(o.subdivision));
  if (!o.tom.empty()) return from_tom(tom_from_json(read_json_file(o.tom)));
  throw InputError("--subdivision", "a subdivision (--subdivision) or TOM (--tom) input is required");
}

NdType parse_type(const std::string& text, const std::string& field, int n, int d) {
  if (text.empty()) throw InputError(field, "missing type");
  try {
    NdType t = NdType::parse(text, d);
    if (t.n() != n) throw InputError(field, "expected " + std::to_string(n) + " entries");
    return t;
  } catch (const std::invalid_argument& e) {
    throw InputError(field, e.what());
  }
}

Mask parse_set(const std::string& text, const std::string& field, int d) {
  try {
    const Mask m = parse_mask(text);
    if (m == 0 || !is_subset(m, full_mask(d))) throw InputError(field, "not a nonempty subset of [" + std::to_string(d) + "]");
    return m;
  } catch (const std::invalid_argument& e) {
    throw InputError(field, e.what());
  }
}

Json axiom_json(const Tom& m, const std::vector<AxiomReport>& reports) {
  return Json{{"n", m.n()},
              {"d", m.d()},
              {"size", m.size()},
              {"valid", all_pass(reports)},
              {"axioms", axiom_reports_to_json(reports)},
              {"general_position", is_general_position(m)},
              {"vertices", vertices(m).size()},
              {"topes", topes(m).size()}};
}

int run_check(const Options& o) {
  if (o.tom.empty() && !o.subdivision.empty()) {
    const MixedSubdivision s = load_subdivision(o);
    const SubdivisionReport r = verify_subdivision(s);
    emit(o, subdivision_report_to_json(r), [&] {
      std::string t = std::string(r.pass ? "valid" : "invalid") + " subdivision, volume " + to_string(r.volume) + "\n";
      for (const auto& f : r.failures) t += f.kind + ": " + f.detail + "\n";
      return t;
    });
    return r.pass ? kOk : kCheckFailed;
  }
  const Tom m = load_tom(o);
  if (o.dot) {
    std::string text;
    for (const NdType& v : vertices(m)) text += type_graph_dot(v);
    write(o, text);
    return kOk;
  }
  const std::vector<AxiomReport> reports = check_all(m);
  emit(o, axiom_json(m, reports), [&] {
    std::string t;
    for (const AxiomReport& r : reports) {
      t += r.axiom + ": " + (r.pass ? "pass" : "FAIL");
      if (r.witness) t += " (" + r.witness->describe() + ")";
      t += "\n";
    }
    return t;
  });
  return all_pass(reports) ? kOk : kCheckFailed;
}

int run_realize(const Options& o) {
  const WeightMatrix w = weights_from_json(read_json_file(o.weights));
  const Tom m = realize_tom(w);
  emit(o, tom_to_json(m), [&] { return lines(m.types()); });
  if (!o.out.empty() && o.format == "text") return kOk;
  if (!o.out.empty()) {
    std::cerr << m.size() << " types, " << vertices(m).size() << " vertices, " << topes(m).size() << " topes"
              << (is_generic(w) ? "" : ", weights not generic") << "\n";
  }
  return kOk;
}

int run_subdivide(const Options& o) {
  const MixedSubdivision s = o.weights.empty() ? from_tom(load_tom(o))
                                               : regular_mixed_subdivision(weights_from_json(read_json_file(o.weights)));
  emit(o, subdivision_to_json(s), [&] { return lines(s.maximal_cells()); });
  return kOk;
}

int run_dual(const Options& o) {
  if (!o.subdivision.empty()) {
    const MixedSubdivision s = dual_subdivision(load_subdivision(o));
    emit(o, subdivision_to_json(s), [&] { return lines(s.maximal_cells()); });
  } else {
    const Tom m = dual_tom(load_tom(o));
    emit(o, tom_to_json(m), [&] { return lines(m.types()); });
  }
  return kOk;
}

int run_delete(const Options& o) {
  const Tom m = load_tom(o);
  if (o.positions.empty()) throw InputError("--position", "at least one position is required");
  for (int p : o.positions) {
    if (p < 1 || p > m.n()) throw InputError("--position", "out of range 1.." + std::to_string(m.n()));
  }
  const Tom out = deletion(m, o.positions);
  emit(o, tom_to_json(out), [&] { return lines(out.types()); });
  return kOk;
}

int run_contract(const Options& o) {
  const Tom m = load_tom(o);
  if (o.coordinate < 1 || o.coordinate > m.d()) {
    throw InputError("--coordinate", "out of range 1.." + std::to_string(m.d()));
  }
  const Tom out = contraction(m, o.coordinate);
  Json j = tom_to_json(out);
  j["coordinate_labels"] = out.coordinate_labels();
  emit(o, j, [&] { return lines(out.types()); });
  return kOk;
}

int run_place(const Options& o, bool along_n) {
  const MixedSubdivision s = load_subdivision(o);
  const int count = along_n ? s.d() : s.n();
  if (!is_permutation_of(o.perm, count)) {
    throw InputError("--perm", "expected a permutation of 1.." + std::to_string(count));
  }
  const MixedSubdivision out = along_n ? n_placing(s, o.perm) : d_placing(s, o.perm);
  emit(o, subdivision_to_json(out), [&] { return lines(out.maximal_cells()); });
  return kOk;
}

int run_blowup(const Options& o) {
  const MixedSubdivision s = load_subdivision(o);
  if (o.positions.size() != 1) throw InputError("--position", "exactly one position is required");
  const int i = o.positions.front();
  if (i < 1 || i > s.n()) throw InputError("--position", "out of range 1.." + std::to_string(s.n()));
  MixedSubdivision out;
  if (!o.with.empty()) {
    if (!is_fine(s)) throw InputError("--subdivision", "blow-up with --with needs a fine subdivision");
    out = blow_up(s, i, subdivision_from_json(read_json_file(o.with)));
  } else {
    if (!is_permutation_of(o.perm, s.d())) {
      throw InputError("--perm", "expected a permutation of 1.." + std::to_string(s.d()));
    }
    out = blow_up_nonfine(s, i, o.perm);
  }
  emit(o, subdivision_to_json(out), [&] { return lines(out.maximal_cells()); });
  return kOk;
}

int run_hull(const Options& o) {
  const Tom m = load_tom(o);
  const NdType a = parse_type(o.a, "--a", m.n(), m.d());
  const NdType b = parse_type(o.b, "--b", m.n(), m.d());
  if (!m.contains(a)) throw InputError("--a", a.str() + " is not a member");
  if (!m.contains(b)) throw InputError("--b", b.str() + " is not a member");
  if (o.dot) {
    write(o, comparability_dot(comparability_graph(a, b)));
    return kOk;
  }
  const std::vector<NdType> hull = convex_hull(m.types(), a, b);
  std::vector<int> gap = dist(a, b);
  const bool connected = is_connected_subcomplex(m.types(), hull);
  emit(o, Json{{"hull", types_json(hull)}, {"dist", gap}, {"connected", connected}}, [&] { return lines(hull); });
  return kOk;
}

int run_eliminate(const Options& o) {
  const Tom m = load_tom(o);
  const NdType a = parse_type(o.a, "--a", m.n(), m.d());
  const NdType b = parse_type(o.b, "--b", m.n(), m.d());
  if (!m.contains(a)) throw InputError("--a", a.str() + " is not a member");
  if (!m.contains(b)) throw InputError("--b", b.str() + " is not a member");
  if (o.positions.size() != 1) throw InputError("--position", "exactly one position is required");
  const int j = o.positions.front();
  if (j < 1 || j > m.n()) throw InputError("--position", "out of range 1.." + std::to_string(m.n()));
  const auto brute = find_elimination(m, a, b, j);
  Json out{{"position", j}, {"found", brute.has_value()}};
  if (brute) out["brute_force"] = type_to_json(*brute);
  try {
    const auto walked = eliminate_via_connectivity(m.types(), a, b, j);
    out["hull_connected"] = true;
    if (walked) out["path"] = type_to_json(*walked);
  } catch (const std::runtime_error&) {
    out["hull_connected"] = false;
  }
  emit(o, out, [&] { return brute ? brute->str() + "\n" : std::string("no elimination\n"); });
  return brute ? kOk : kCheckFailed;
}

Json node_json(const ConstructibilityNode& node) {
  Json out{{"I", Json::array()}, {"J", partitions_to_json(node.j)}, {"maximal", types_json(node.maximal)},
           {"dimension", node.dimension}};
  for (Mask m : node.i) out["I"].push_back(mask_to_json(m));
  if (node.split) {
    const MijSplit& s = *node.split;
    out["split"] = Json{{"k", s.k},
                        {"l", s.l},
                        {"a", s.a},
                        {"b", s.b},
                        {"I1", mask_to_json(s.i1)},
                        {"I2", mask_to_json(s.i2)},
                        {"J0", partitions_to_json(s.j0)}};
    out["children"] = Json::array();
    for (const ConstructibilityNode& c : node.children) out["children"].push_back(node_json(c));
  }
  return out;
}

HalfspaceSystem system_from(const Options& o, int n, int d, bool allow_full) {
  if (static_cast<int>(o.halfspaces.size()) != n) {
    throw InputError("--I", "expected " + std::to_string(n) + " values, one per position");
  }
  HalfspaceSystem out;
  for (const std::string& text : o.halfspaces) out.push_back(parse_set(text, "--I", d));
  try {
    validate_halfspace_system(out, n, d, allow_full);
  } catch (const std::invalid_argument& e) {
    throw InputError("--I", e.what());
  }
  return out;
}

int run_mij(const Options& o) {
  const Tom m = load_tom(o);
  const HalfspaceSystem i = system_from(o, m.n(), m.d(), true);
  if (static_cast<int>(o.partitions.size()) != m.n()) {
    throw InputError("--J", "expected " + std::to_string(m.n()) + " partitions, one per position");
  }
  PartitionTuple j;
  for (const std::string& text : o.partitions) {
    std::vector<Mask> blocks;
    std::stringstream in(text);
    for (std::string part; std::getline(in, part, '/');) blocks.push_back(parse_set(part, "--J", m.d()));
    if (!OrderedPartition{blocks}.is_partition_of(m.d())) throw InputError("--J", text + " is not a partition of [d]");
    j.push_back(blocks);
  }
  const MijReport r = mij_report(m, i, j);
  Json out{{"members", types_json(r.members)},
           {"maximal", types_json(r.maximal)},
           {"expected_dimension", r.expected_dimension},
           {"pure", r.pure},
           {"extends", r.extends},
           {"connected", r.connected}};
  bool ok = r.ok();
  if (o.witness && !r.members.empty()) {
    if (!is_general_position(m)) throw InputError("--tom", "constructibility needs a TOM in general position");
    const ConstructibilityResult w = constructibility_witness(m, i, j);
    out["witness"] = Json{{"ok", w.ok}, {"nodes", node_count(w.root)}, {"tree", node_json(w.root)}};
    if (!w.ok) out["witness"]["failure"] = w.failure;
    ok = ok && w.ok;
  }
  emit(o, out, [&] {
    return lines(r.maximal) + "dimension " + std::to_string(r.expected_dimension) + (ok ? ", ok\n" : ", FAILED\n");
  });
  return ok ? kOk : kCheckFailed;
}

int run_covectors(const Options& o) {
  const Tom m = load_tom(o);
  const HalfspaceSystem i = system_from(o, m.n(), m.d(), false);
  std::vector<int> positions = o.positions;
  if (positions.empty()) {
    for (int p = 1; p <= m.n(); ++p) positions.push_back(p);
  }
  for (int p : positions) {
    if (p < 1 || p > m.n()) throw InputError("--position", "out of range 1.." + std::to_string(m.n()));
  }
  const std::vector<SignVector> l = halfspace_covectors(m, positions, i);
  const bool complete = covectors_complete(l, positions.size());
  emit(o, Json{{"positions", positions}, {"covectors", l}, {"complete", complete}}, [&] {
    std::string t;
    for (const SignVector& v : l) t += v + "\n";
    return t;
  });
  return complete ? kOk : kCheckFailed;
}

int run_census(const Options& o) {
  if (o.n < 1 || o.n > 4) throw InputError("--n", "out of range 1..4");
  if (o.d < 1 || o.d > 4) throw InputError("--d", "out of range 1..4");
  const std::vector<MixedSubdivision> all = census(o.n, o.d);
  Json items = Json::array();
  bool ok = true;
  for (const MixedSubdivision& s : all) {
    const bool verified = verify_subdivision(s).pass;
    const bool tom = all_pass(check_all(to_tom(s)));
    ok = ok && verified && tom;
    Json item = subdivision_to_json(s);
    item["fine"] = is_fine(s);
    item["verified"] = verified;
    item["tom"] = tom;
    items.push_back(std::move(item));
  }
  emit(o, Json{{"n", o.n}, {"d", o.d}, {"count", all.size()}, {"subdivisions", items}}, [&] {
    std::string t = std::to_string(all.size()) + " subdivisions\n";
    for (const MixedSubdivision& s : all) {
      for (std::size_t k = 0; k < s.maximal_cells().size(); ++k) t += (k ? " " : "") + s.maximal_cells()[k].str();
      t += is_fine(s) ? "  fine\n" : "\n";
    }
    return t;
  });
  return ok ? kOk : kCheckFailed;
}

int run_render(const Options& o) {
  const MixedSubdivision s = load_subdivision(o);
  if (s.d() != 3) throw InputError("/d", "rendering needs d = 3");
  write(o, render_svg(s, {o.labels, 120.0}));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("TROPMAT_MAX_D")) {
    char* end = nullptr;
    const long limit = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || limit < 1 || limit > kMaxLabels) {
      std::cerr << "error: TROPMAT_MAX_D: expected an integer in 1..16\n";
      return kInputError;
    }
    set_partition_limit(static_cast<int>(limit));
  }

  CLI::App app{"Tropical oriented matroids and mixed subdivisions of dilated simplices"};
  app.require_subcommand(1);
  Options o;

  const auto common = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--out", o.out, "Write output to a file");
  };
  const auto inputs = [&](CLI::App* cmd) {
    cmd->add_option("--tom", o.tom, "TOM JSON file");
    cmd->add_option("--subdivision", o.subdivision, "Subdivision JSON file");
  };

  std::vector<std::pair<CLI::App*, std::function<int()>>> verbs;
  const auto verb = [&](const char* name, const char* help, std::function<int()> run) {
    CLI::App* cmd = app.add_subcommand(name, help);
    common(cmd);
    verbs.emplace_back(cmd, std::move(run));
    return cmd;
  };

  auto* check = verb("check", "Check the axioms of a TOM or verify a subdivision", [&] { return run_check(o); });
  inputs(check);
  check->add_flag("--dot", o.dot, "Print type graphs of the vertices as DOT");

  auto* realize = verb("realize", "TOM of a tropical hyperplane arrangement", [&] { return run_realize(o); });
  realize->add_option("--weights", o.weights, "Weight matrix JSON file")->required();

  auto* subdivide = verb("subdivide", "Mixed subdivision from weights or a TOM", [&] { return run_subdivide(o); });
  subdivide->add_option("--weights", o.weights, "Weight matrix JSON file");
  subdivide->add_option("--tom", o.tom, "TOM JSON file");

  inputs(verb("dual", "Dual TOM or dual subdivision", [&] { return run_dual(o); }));

  auto* del = verb("delete", "Delete positions", [&] { return run_delete(o); });
  inputs(del);
  del->add_option("--position", o.positions, "Position to delete (repeatable)");

  auto* contract = verb("contract", "Contract a coordinate", [&] { return run_contract(o); });
  inputs(contract);
  contract->add_option("--coordinate", o.coordinate, "Coordinate to contract")->required();

  auto* place_n = verb("place-n", "Add a position by placing", [&] { return run_place(o, true); });
  place_n->add_option("--subdivision", o.subdivision, "Subdivision JSON file")->required();
  place_n->add_option("--perm", o.perm, "Permutation of 1..d")->delimiter(',')->required();

  auto* place_d = verb("place-d", "Add a coordinate by placing", [&] { return run_place(o, false); });
  place_d->add_option("--subdivision", o.subdivision, "Subdivision JSON file")->required();
  place_d->add_option("--perm", o.perm, "Permutation of 1..n")->delimiter(',')->required();

  auto* blowup = verb("blowup", "Blow up one position", [&] { return run_blowup(o); });
  blowup->add_option("--subdivision", o.subdivision, "Subdivision JSON file")->required();
  blowup->add_option("--position", o.positions, "Position to blow up")->required();
  auto* with = blowup->add_option("--with", o.with, "Fine subdivision to insert");
  blowup->add_option("--perm", o.perm, "Permutation of 1..d for the local model")->delimiter(',')->excludes(with);

  auto* hull = verb("hull", "Convex hull of two types", [&] { return run_hull(o); });
  inputs(hull);
  hull->add_option("--a", o.a, "First type, e.g. (12,3)")->required();
  hull->add_option("--b", o.b, "Second type")->required();
  hull->add_flag("--dot", o.dot, "Print the comparability graph of A and B as DOT");

  auto* eliminate = verb("eliminate", "Eliminate two types at a position", [&] { return run_eliminate(o); });
  inputs(eliminate);
  eliminate->add_option("--a", o.a, "First type")->required();
  eliminate->add_option("--b", o.b, "Second type")->required();
  eliminate->add_option("--position", o.positions, "Position j")->required();

  auto* mij = verb("mij", "Subcomplex M(I,J) and its constructibility", [&] { return run_mij(o); });
  inputs(mij);
  mij->add_option("--I", o.halfspaces, "Set I_i per position, e.g. 1234")->required();
  mij->add_option("--J", o.partitions, "Partition J_i per position, blocks split by '/', e.g. 14/23")->required();
  mij->add_flag("--witness", o.witness, "Build and check a constructibility tree");

  auto* cov = verb("covectors", "Sign vectors of a halfspace system", [&] { return run_covectors(o); });
  inputs(cov);
  cov->add_option("--I", o.halfspaces, "Proper set I_i per position")->required();
  cov->add_option("--position", o.positions, "Positions to record (default all)");

  auto* cen = verb("census", "Enumerate all mixed subdivisions", [&] { return run_census(o); });
  cen->add_option("--n", o.n, "Number of positions")->required();
  cen->add_option("--d", o.d, "Number of coordinates")->required();

  auto* render = verb("render", "Draw the dual arrangement of a subdivision of nΔ² as SVG", [&] { return run_render(o); });
  inputs(render);
  render->add_flag("--labels", o.labels, "Label vertices by their types");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    for (auto& [cmd, run] : verbs) {
      if (cmd->parsed()) return run();
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
