#include "tropmat/io.hpp"

#include <fstream>

#include "tropmat/partition.hpp"

namespace tropmat {

namespace {

const Json& field_of(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw InputError(where.empty() ? "/" : where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(where + "/" + key, "missing field");
  return *it;
}

const Json& array_of(const Json& j, const std::string& field) {
  if (!j.is_array()) throw InputError(field, "expected an array");
  return j;
}

std::string at(const std::string& field, std::size_t k) { return field + "/" + std::to_string(k); }

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path, "cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path, std::string("malformed JSON: ") + e.what());
  }
}

int read_count(const Json& j, const std::string& key, int lo, int hi) {
  const Json& v = field_of(j, key, "");
  if (!v.is_number_integer()) throw InputError("/" + key, "expected an integer");
  const long long x = v.get<long long>();
  if (x < lo || x > hi) {
    throw InputError("/" + key, "out of range " + std::to_string(lo) + ".." + std::to_string(hi));
  }
  return static_cast<int>(x);
}

Json mask_to_json(Mask m) { return labels(m); }

Mask mask_from_json(const Json& j, int d, const std::string& field) {
  array_of(j, field);
  if (j.empty()) throw InputError(field, "empty set");
  Mask m = 0;
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (!j[k].is_number_integer()) throw InputError(at(field, k), "expected an integer label");
    const long long x = j[k].get<long long>();
    if (x < 1 || x > d) throw InputError(at(field, k), "label out of range 1.." + std::to_string(d));
    if (contains(m, static_cast<int>(x))) throw InputError(at(field, k), "repeated label");
    m |= bit(static_cast<int>(x));
  }
  return m;
}

Json type_to_json(const NdType& a) {
  Json out = Json::array();
  for (Mask m : a.entries()) out.push_back(mask_to_json(m));
  return out;
}

NdType type_from_json(const Json& j, int n, int d, const std::string& field) {
  array_of(j, field);
  if (static_cast<int>(j.size()) != n) {
    throw InputError(field, "expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
  }
  std::vector<Mask> entries;
  for (std::size_t k = 0; k < j.size(); ++k) entries.push_back(mask_from_json(j[k], d, at(field, k)));
  return NdType(d, std::move(entries));
}

Json tom_to_json(const Tom& m) {
  Json types = Json::array();
  for (const NdType& t : m) types.push_back(type_to_json(t));
  return Json{{"n", m.n()}, {"d", m.d()}, {"types", std::move(types)}};
}

Tom tom_from_json(const Json& j) {
  const int n = read_count(j, "n", 1, 64);
  const int d = read_count(j, "d", 1, kMaxLabels);
  const Json& types = array_of(field_of(j, "types", ""), "/types");
  std::vector<NdType> out;
  for (std::size_t k = 0; k < types.size(); ++k) out.push_back(type_from_json(types[k], n, d, at("/types", k)));
  return Tom(n, d, std::move(out));
}

Json subdivision_to_json(const MixedSubdivision& s) {
  Json cells = Json::array();
  for (const NdType& t : s.maximal_cells()) cells.push_back(type_to_json(t));
  return Json{{"n", s.n()}, {"d", s.d()}, {"maximal_cells", std::move(cells)}};
}

MixedSubdivision subdivision_from_json(const Json& j) {
  const int n = read_count(j, "n", 1, 64);
  const int d = read_count(j, "d", 1, kMaxLabels);
  const Json& cells = array_of(field_of(j, "maximal_cells", ""), "/maximal_cells");
  std::vector<NdType> out;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    out.push_back(type_from_json(cells[k], n, d, at("/maximal_cells", k)));
  }
  return MixedSubdivision(n, d, std::move(out));
}

Json weights_to_json(const WeightMatrix& w) {
  Json rows = Json::array();
  for (int i = 1; i <= w.n(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= w.d(); ++j) row.push_back(to_string(w(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"n", w.n()}, {"d", w.d()}, {"w", std::move(rows)}};
}

WeightMatrix weights_from_json(const Json& j) {
  const int n = read_count(j, "n", 1, 64);
  const int d = read_count(j, "d", 1, kMaxLabels);
  const Json& rows = array_of(field_of(j, "w", ""), "/w");
  if (static_cast<int>(rows.size()) != n) throw InputError("/w", "expected " + std::to_string(n) + " rows");
  WeightMatrix w(n, d);
  for (int i = 1; i <= n; ++i) {
    const std::string rf = at("/w", i - 1);
    const Json& row = array_of(rows[i - 1], rf);
    if (static_cast<int>(row.size()) != d) throw InputError(rf, "expected " + std::to_string(d) + " entries");
    for (int c = 1; c <= d; ++c) {
      const Json& v = row[c - 1];
      const std::string cf = at(rf, c - 1);
      try {
        if (v.is_string()) {
          w(i, c) = parse_rational(v.get<std::string>());
        } else if (v.is_number_integer()) {
          w(i, c) = Rational(std::to_string(v.get<long long>()));
        } else {
          throw InputError(cf, "expected a rational string or an integer");
        }
      } catch (const std::invalid_argument& e) {
        throw InputError(cf, e.what());
      }
    }
  }
  return w;
}

HalfspaceSystem halfspace_from_json(const Json& j, int n, int d, const std::string& field) {
  array_of(j, field);
  if (static_cast<int>(j.size()) != n) throw InputError(field, "expected " + std::to_string(n) + " entries");
  HalfspaceSystem out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(mask_from_json(j[k], d, at(field, k)));
  return out;
}

PartitionTuple partitions_from_json(const Json& j, int n, int d, const std::string& field) {
  array_of(j, field);
  if (static_cast<int>(j.size()) != n) throw InputError(field, "expected " + std::to_string(n) + " entries");
  PartitionTuple out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string pf = at(field, k);
    array_of(j[k], pf);
    std::vector<Mask> blocks;
    for (std::size_t b = 0; b < j[k].size(); ++b) blocks.push_back(mask_from_json(j[k][b], d, at(pf, b)));
    if (!OrderedPartition{blocks}.is_partition_of(d)) throw InputError(pf, "not a partition of [" + std::to_string(d) + "]");
    out.push_back(std::move(blocks));
  }
  return out;
}

Json partitions_to_json(const PartitionTuple& j) {
  Json out = Json::array();
  for (const auto& part : j) {
    Json blocks = Json::array();
    for (Mask b : part) blocks.push_back(mask_to_json(b));
    out.push_back(std::move(blocks));
  }
  return out;
}

Json axiom_reports_to_json(const std::vector<AxiomReport>& reports) {
  Json out = Json::array();
  for (const AxiomReport& r : reports) {
    Json entry{{"axiom", r.axiom}, {"pass", r.pass}};
    if (r.witness) {
      Json types = Json::array();
      for (const NdType& t : r.witness->types) types.push_back(type_to_json(t));
      Json w{{"types", std::move(types)}, {"description", r.witness->describe()}};
      if (r.witness->index != 0) w["index"] = r.witness->index;
      if (r.witness->partition) {
        Json blocks = Json::array();
        for (Mask b : r.witness->partition->blocks) blocks.push_back(mask_to_json(b));
        w["partition"] = std::move(blocks);
      }
      entry["witness"] = std::move(w);
    }
    out.push_back(std::move(entry));
  }
  return out;
}

Json subdivision_report_to_json(const SubdivisionReport& r) {
  Json failures = Json::array();
  for (const SubdivisionFailure& f : r.failures) {
    Json witness = Json::array();
    for (const NdType& t : f.witness) witness.push_back(type_to_json(t));
    failures.push_back(Json{{"kind", f.kind}, {"witness", std::move(witness)}, {"detail", f.detail}});
  }
  return Json{{"pass", r.pass}, {"volume", to_string(r.volume)}, {"failures", std::move(failures)}};
}

}  // namespace tropmat
