#pragma once

#include <variant>

#include <json.hpp>

#include "affsel/examples.hpp"
#include "affsel/multifunction.hpp"
#include "affsel/selection.hpp"

namespace affsel::io {

using json = nlohmann::json;

// Rationals serialize as exact values only: a JSON integer when the
// denominator is 1 and the numerator fits in 64 bits, otherwise a "p/q"
// string. Decimal approximations appear solely in the clearly-labeled
// *_approx fields added by pretty mode.
json rational_json(const Rational& q);
Rational rational_from(const json& node, const std::string& field);

json vec_json(const RatVec& v);
RatVec vec_from(const json& node, const std::string& field);
json mat_json(const RatMat& m);

struct SandwichData {
  std::vector<PointValue> lower;
  std::vector<PointValue> upper;
};

using Instance =
    std::variant<GraphMultifunction, SampledMultifunction, SandwichData>;

json instance_json(const GraphMultifunction& g);
json instance_json(const SampledMultifunction& m);
json instance_json(const SandwichData& s);

/// Parses any of the three instance kinds; all type invariants are
/// re-checked on load. Throws std::invalid_argument naming the offending
/// field.
Instance parse_instance(const json& doc);

json map_json(const AffineMap& map, bool pretty = false);
AffineMap map_from(const json& doc);

json audit_json(const AuditReport& report, bool pretty = false);
json selection_json(const SelectionOutcome& outcome, bool pretty = false);
json local_selection_json(const LocalSelection& sel, bool pretty = false);
json verify_json(const VerifyReport& report);

}  // namespace affsel::io
