#include "affsel/io.hpp"

#include <limits>
#include <stdexcept>

namespace affsel::io {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& why) {
  throw std::invalid_argument(field + ": " + why);
}

json approx_vec(const RatVec& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(approx(q));
  return out;
}

json approx_mat(const RatMat& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(approx_vec(row));
  return out;
}

}  // namespace

json rational_json(const Rational& q) {
  static const Integer lo = std::numeric_limits<std::int64_t>::min();
  static const Integer hi = std::numeric_limits<std::int64_t>::max();
  if (denominator(q) == 1 && numerator(q) >= lo && numerator(q) <= hi) {
    return numerator(q).convert_to<std::int64_t>();
  }
  return format_rational(q);
}

Rational rational_from(const json& node, const std::string& field) {
  if (node.is_number_integer()) {
    return Rational(Integer(node.get<std::int64_t>()));
  }
  if (node.is_number_unsigned()) {
    return Rational(Integer(node.get<std::uint64_t>()));
  }
  if (node.is_string()) {
    try {
      return parse_rational(node.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(field, e.what());
    }
  }
  if (node.is_number_float()) {
    fail(field, "decimal numbers are not accepted; use \"p/q\"");
  }
  fail(field, "expected an integer or a \"p/q\" string");
}

json vec_json(const RatVec& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(rational_json(q));
  return out;
}

RatVec vec_from(const json& node, const std::string& field) {
  if (!node.is_array()) fail(field, "expected an array");
  RatVec out;
  out.reserve(node.size());
  for (std::size_t i = 0; i < node.size(); ++i) {
    out.push_back(rational_from(node[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

json mat_json(const RatMat& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(vec_json(row));
  return out;
}

namespace {

std::size_t size_from(const json& doc, const char* field) {
  if (!doc.contains(field)) fail(field, "missing");
  const json& node = doc[field];
  if (!node.is_number_unsigned() && !node.is_number_integer()) {
    fail(field, "expected a nonnegative integer");
  }
  const auto value = node.get<std::int64_t>();
  if (value < 0) fail(field, "expected a nonnegative integer");
  return static_cast<std::size_t>(value);
}

std::vector<RatVec> vec_list_from(const json& node, const std::string& field) {
  if (!node.is_array()) fail(field, "expected an array of vectors");
  std::vector<RatVec> out;
  out.reserve(node.size());
  for (std::size_t i = 0; i < node.size(); ++i) {
    out.push_back(vec_from(node[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<PointValue> point_values_from(const json& node,
                                          const std::string& field) {
  if (!node.is_array()) fail(field, "expected an array");
  std::vector<PointValue> out;
  out.reserve(node.size());
  for (std::size_t i = 0; i < node.size(); ++i) {
    const std::string label = field + "[" + std::to_string(i) + "]";
    const json& item = node[i];
    if (!item.is_object() || !item.contains("point") || !item.contains("value")) {
      fail(label, "expected {\"point\": [...], \"value\": p/q}");
    }
    out.push_back({vec_from(item["point"], label + ".point"),
                   rational_from(item["value"], label + ".value")});
  }
  return out;
}

}  // namespace

json instance_json(const GraphMultifunction& g) {
  json verts = json::array();
  for (const auto& v : g.graph.vertices) verts.push_back(vec_json(v));
  return json{{"kind", "graph"},
              {"n", g.n},
              {"m", g.m},
              {"graph_vertices", std::move(verts)}};
}

json instance_json(const SampledMultifunction& m) {
  json samples = json::array();
  for (const auto& s : m.samples) {
    json value = json::array();
    for (const auto& v : s.value.vertices) value.push_back(vec_json(v));
    samples.push_back(json{{"point", vec_json(s.point)},
                           {"value", std::move(value)}});
  }
  return json{{"kind", "sampled"},
              {"n", m.n},
              {"m", m.m},
              {"inner_approximation", m.values_inner_approx},
              {"samples", std::move(samples)}};
}

json instance_json(const SandwichData& s) {
  const auto encode = [](const std::vector<PointValue>& data) {
    json out = json::array();
    for (const auto& [point, value] : data) {
      out.push_back(json{{"point", vec_json(point)},
                         {"value", rational_json(value)}});
    }
    return out;
  };
  std::size_t n = s.lower.empty() ? 0 : s.lower[0].first.size();
  return json{{"kind", "sandwich"},
              {"n", n},
              {"lower", encode(s.lower)},
              {"upper", encode(s.upper)}};
}

Instance parse_instance(const json& doc) {
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) {
    fail("kind", "missing instance kind");
  }
  const std::string kind = doc["kind"].get<std::string>();
  if (kind == "graph") {
    const std::size_t n = size_from(doc, "n");
    const std::size_t m = size_from(doc, "m");
    if (!doc.contains("graph_vertices")) fail("graph_vertices", "missing");
    auto verts = vec_list_from(doc["graph_vertices"], "graph_vertices");
    return GraphMultifunction(n, m, VPolytope(n + m, std::move(verts)));
  }
  if (kind == "sampled") {
    const std::size_t n = size_from(doc, "n");
    const std::size_t m = size_from(doc, "m");
    if (!doc.contains("samples")) fail("samples", "missing");
    const json& node = doc["samples"];
    if (!node.is_array()) fail("samples", "expected an array");
    std::vector<Sample> samples;
    samples.reserve(node.size());
    for (std::size_t i = 0; i < node.size(); ++i) {
      const std::string label = "samples[" + std::to_string(i) + "]";
      const json& item = node[i];
      if (!item.is_object() || !item.contains("point") ||
          !item.contains("value")) {
        fail(label, "expected {\"point\": [...], \"value\": [[...], ...]}");
      }
      samples.push_back(
          {vec_from(item["point"], label + ".point"),
           VPolytope(m, vec_list_from(item["value"], label + ".value"))});
    }
    const bool inner = doc.value("inner_approximation", false);
    return SampledMultifunction(n, m, std::move(samples), inner);
  }
  if (kind == "sandwich") {
    if (!doc.contains("lower")) fail("lower", "missing");
    if (!doc.contains("upper")) fail("upper", "missing");
    SandwichData data{point_values_from(doc["lower"], "lower"),
                      point_values_from(doc["upper"], "upper")};
    return data;
  }
  fail("kind", "unknown instance kind \"" + kind + "\"");
}

json map_json(const AffineMap& map, bool pretty) {
  json out{{"kind", "affine-map"},
           {"n", map.n},
           {"m", map.m},
           {"matrix", mat_json(map.matrix)},
           {"offset", vec_json(map.offset)}};
  if (pretty) {
    out["matrix_approx"] = approx_mat(map.matrix);
    out["offset_approx"] = approx_vec(map.offset);
  }
  return out;
}

AffineMap map_from(const json& doc) {
  const json& node = doc.is_object() && doc.contains("map") &&
                             doc["map"].is_object()
                         ? doc["map"]
                         : doc;
  if (!node.is_object() || !node.contains("matrix") || !node.contains("offset")) {
    fail("map", "expected an affine-map document");
  }
  const std::size_t n = size_from(node, "n");
  const std::size_t m = size_from(node, "m");
  RatMat matrix;
  const json& rows = node["matrix"];
  if (!rows.is_array()) fail("matrix", "expected an array of rows");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    matrix.push_back(vec_from(rows[r], "matrix[" + std::to_string(r) + "]"));
  }
  return AffineMap(n, m, std::move(matrix), vec_from(node["offset"], "offset"));
}

json audit_json(const AuditReport& report, bool pretty) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    json item{{"i", v.i},
              {"j", v.j},
              {"k", v.k},
              {"t", rational_json(v.t)},
              {"witness", vec_json(v.witness)}};
    if (pretty) {
      item["t_approx"] = approx(v.t);
      item["witness_approx"] = approx_vec(v.witness);
    }
    violations.push_back(std::move(item));
  }
  return json{{"checked_triples", report.checked_triples},
              {"passed", report.passed()},
              {"violations", std::move(violations)}};
}

json selection_json(const SelectionOutcome& outcome, bool pretty) {
  json out{{"kind", "selection-outcome"}};
  if (outcome.status == SelectionStatus::Found) {
    out["status"] = "found";
    out["map"] = map_json(*outcome.map, pretty);
  } else {
    out["status"] = "none_exists";
    out["certificate"] = vec_json(outcome.certificate);
    if (pretty) out["certificate_approx"] = approx_vec(outcome.certificate);
  }
  json checks = json::array();
  for (const auto& check : outcome.verification) {
    checks.push_back(json{{"point", vec_json(check.point)},
                          {"value", vec_json(check.value)},
                          {"member", check.member}});
  }
  out["verification"] = std::move(checks);
  return out;
}

json local_selection_json(const LocalSelection& sel, bool pretty) {
  json simplex = json::array();
  for (const auto& v : sel.simplex.vertices) simplex.push_back(vec_json(v));
  json out{{"kind", "local-selection"},
           {"center", vec_json(sel.center)},
           {"simplex", std::move(simplex)},
           {"map", map_json(sel.map, pretty)},
           {"shrink_exponent", sel.shrink_exponent}};
  if (pretty) {
    json simplex_approx = json::array();
    for (const auto& v : sel.simplex.vertices) simplex_approx.push_back(approx_vec(v));
    out["simplex_approx"] = std::move(simplex_approx);
  }
  return out;
}

json verify_json(const VerifyReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures) {
    failures.push_back(json{{"point", vec_json(f.point)},
                            {"value", vec_json(f.value)}});
  }
  return json{{"kind", "verify-report"},
              {"trials", report.trials},
              {"passed", report.passed()},
              {"failures", std::move(failures)}};
}

}  // namespace affsel::io
