#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "tropmat/axioms.hpp"
#include "tropmat/mij.hpp"
#include "tropmat/realize.hpp"
#include "tropmat/subdivision.hpp"
#include "tropmat/tom.hpp"

namespace tropmat {

using Json = nlohmann::json;

/// Malformed or out-of-range input; `field` is a JSON-pointer-like path.
class InputError : public std::runtime_error {
 public:
  InputError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

Json read_json_file(const std::string& path);

Json mask_to_json(Mask m);
Mask mask_from_json(const Json& j, int d, const std::string& field);

Json type_to_json(const NdType& a);
NdType type_from_json(const Json& j, int n, int d, const std::string& field);

/// {"n","d","types":[...]}
Json tom_to_json(const Tom& m);
Tom tom_from_json(const Json& j);

/// {"n","d","maximal_cells":[...]}
Json subdivision_to_json(const MixedSubdivision& s);
MixedSubdivision subdivision_from_json(const Json& j);

/// {"n","d","w":[["0","1/2"],...]}; entries are strings or integers.
Json weights_to_json(const WeightMatrix& w);
WeightMatrix weights_from_json(const Json& j);

/// Array of I_i as sets.
HalfspaceSystem halfspace_from_json(const Json& j, int n, int d, const std::string& field);
/// Array of partitions, each an array of blocks.
PartitionTuple partitions_from_json(const Json& j, int n, int d, const std::string& field);
Json partitions_to_json(const PartitionTuple& j);

Json axiom_reports_to_json(const std::vector<AxiomReport>& reports);
Json subdivision_report_to_json(const SubdivisionReport& r);

/// Reads "n" and "d" with range checks.
int read_count(const Json& j, const std::string& key, int lo, int hi);

}  // namespace tropmat
