// Acceptance suite: one line per criterion, exact checks, wall-clock budgets.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "affsel/errors.hpp"
#include "affsel/examples.hpp"
#include "affsel/io.hpp"
#include "affsel/selection.hpp"
#include "lp_oracle.hpp"
#include "test_generators.hpp"

using namespace affsel;
using io::json;

namespace {

Rational r(long num, long den = 1) { return make_rational(num, den); }

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& what) {
  if (!condition) throw Failure(what);
}

std::string run_pipeline(const std::string& command) {
  FILE* pipe = popen(command.c_str(), "r");
  require(pipe != nullptr, "popen failed");
  std::string out;
  char buffer[512];
  while (fgets(buffer, sizeof buffer, pipe)) out += buffer;
  require(pclose(pipe) == 0, "pipeline exited nonzero: " + command);
  return out;
}

LpOutcome infeasible_outcome(const RatVec& farkas) {
  LpOutcome out;
  out.status = LpStatus::Infeasible;
  out.farkas = farkas;
  return out;
}

RatVec weighted_point(const std::vector<RatVec>& verts, const RatVec& w) {
  RatVec x(verts[0].size(), Rational(0));
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t d = 0; d < x.size(); ++d) x[d] += w[i] * verts[i][d];
  }
  return x;
}

struct SimplexDomainInstance {
  GraphMultifunction graph;
  AffineMap map;
};

std::vector<SimplexDomainInstance> simplex_suite;  // built by criterion 3, reused by 5

const std::string cli = AFFSEL_CLI_PATH;

// --- criteria ---------------------------------------------------------------

void criterion1() {
  const GraphMultifunction G = olsen();
  const SelectionOutcome outcome = global_selection(G);
  require(outcome.status == SelectionStatus::NoneExists,
          "expected none_exists");
  require(verify_certificate(assemble_selection_lp(G),
                             infeasible_outcome(outcome.certificate)),
          "Farkas certificate failed verification");
  const json doc = json::parse(
      run_pipeline("'" + cli + "' example olsen | '" + cli + "' select-global"));
  require(doc["status"] == "none_exists", "CLI disagreed on the status");
}

void criterion2() {
  const GraphMultifunction G = olsen();
  const LocalSelection sel = local_selection(G, {0, 0});
  const std::vector<RatVec> simplex{
      {r(1, 2), 0}, {0, r(1, 2)}, {r(-1, 2), r(-1, 2)}};
  require(sel.simplex.vertices == simplex, "unexpected simplex");
  require(sel.map.matrix == RatMat{{r(-2, 3), r(1, 3)}} &&
              sel.map.offset == RatVec{r(1, 3)},
          "unexpected interpolant");

  SeededRng rng(2026);
  for (int trial = 0; trial < 100; ++trial) {
    const RatVec x =
        weighted_point(sel.simplex.vertices, rng.convex_weights(3));
    require(fiber_contains(G, x, sel.map.apply(x)),
            "selection failed on the simplex");
  }

  const auto domain = domain_vertices(G);
  for (int trial = 0; trial < 50; ++trial) {
    const RatVec x0 = weighted_point(domain, rng.interior_weights(4));
    local_selection(G, x0);  // throws on failure
  }

  const json doc = json::parse(run_pipeline(
      "'" + cli + "' example olsen | '" + cli + "' select-local --point 0,0"));
  require(doc["map"]["matrix"] == json::parse(R"([["-2/3","1/3"]])") &&
              doc["map"]["offset"] == json::parse(R"(["1/3"])"),
          "CLI disagreed on the map");
  require(doc["simplex"] == json::parse(R"([["1/2",0],[0,"1/2"],["-1/2","-1/2"]])"),
          "CLI disagreed on the simplex");
}

void criterion3() {
  simplex_suite.clear();
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const std::size_t n = 1 + (seed - 1) % 3;
    const std::size_t m = 1 + (seed - 1) % 2;
    const std::size_t verts =
        n + 1 + static_cast<std::size_t>(seed % (12 - n));
    const GraphMultifunction G =
        random_convex_graph(n, m, verts, seed, standard_simplex(n));
    const SelectionOutcome outcome = global_selection(G);
    require(outcome.status == SelectionStatus::Found,
            "simplex-domain instance seed " + std::to_string(seed) +
                " not found");
    const VerifyReport report = verify_selection(G, *outcome.map, 100, seed);
    require(report.passed(), "verification failed at seed " +
                                 std::to_string(seed));
    simplex_suite.push_back({G, *outcome.map});
  }
}

void criterion4() {
  int done = 0;
  for (std::uint64_t seed = 20000; done < 100; ++seed) {
    const std::size_t n = 1 + seed % 3;
    const std::size_t m = 1 + seed % 2;
    const GraphMultifunction G =
        random_convex_graph(n, m, n + 2 + seed % (11 - n), seed);
    if (!domain_is_full_dimensional(G)) continue;
    const auto verts = domain_vertices(G);
    SeededRng rng(seed);
    const RatVec x0 = weighted_point(verts, rng.interior_weights(verts.size()));
    const LocalSelection sel = local_selection(G, x0);
    for (int trial = 0; trial < 20; ++trial) {
      const RatVec x = weighted_point(sel.simplex.vertices,
                                      rng.convex_weights(G.n + 1));
      require(fiber_contains(G, x, sel.map.apply(x)),
              "local map failed on its simplex at seed " +
                  std::to_string(seed));
    }
    ++done;
  }
}

void criterion5() {
  require(!simplex_suite.empty(), "criterion 3 must run first");
  for (std::size_t idx = 0; idx < simplex_suite.size(); ++idx) {
    const GraphMultifunction& G = simplex_suite[idx].graph;
    // Four collinear points between two domain vertices of the simplex.
    const auto verts = domain_vertices(G);
    RatVec a = verts[0], b;
    bool found_second = false;
    for (const auto& v : verts) {
      if (v != a) {
        b = v;
        found_second = true;
        break;
      }
    }
    require(found_second, "degenerate simplex domain");
    std::vector<RatVec> points;
    for (const long num : {0L, 1L, 2L, 4L}) {
      RatVec p(G.n);
      for (std::size_t d = 0; d < G.n; ++d) {
        p[d] = a[d] + make_rational(num, 4) * (b[d] - a[d]);
      }
      points.push_back(std::move(p));
    }
    const SampledMultifunction M = sample_graph(G, points);
    const AuditReport report = audit_intersection(M);
    require(report.checked_triples > 0, "no triples checked");
    require(report.passed(), "intersection audit failed on found instance " +
                                 std::to_string(idx));
  }

  // The deliberately broken instance fails both audits, witness pinned.
  const SampledMultifunction broken(
      1, 1,
      {{{0}, VPolytope(1, {{0}})},
       {{1}, VPolytope(1, {{1}})},
       {{r(1, 2)}, VPolytope(1, {{0}})}});
  const AuditReport convexity = audit_convexity(broken);
  require(!convexity.passed(), "broken instance passed convexity");
  bool witness = false;
  for (const auto& v : convexity.violations) {
    if (v.t == r(1, 2) && v.witness == RatVec{r(1, 2)}) witness = true;
  }
  require(witness, "missing convexity witness 1/2 at t = 1/2");
  const AuditReport intersection = audit_intersection(broken);
  require(!intersection.passed(), "broken instance passed intersection");
  require(intersection.violations[0].t == r(1, 2),
          "intersection violation not at t = 1/2");
}

void criterion6() {
  SeededRng rng(20260810);
  for (int trial = 0; trial < 500; ++trial) {
    const LinearProgram lp = test_gen::random_lp(rng);
    const LpOutcome out = lp_solve(lp);
    const lp_oracle::OracleResult oracle = lp_oracle::oracle_solve(lp);
    require(out.status == oracle.status,
            "status mismatch at trial " + std::to_string(trial));
    if (lp.sense != Sense::FeasibilityOnly &&
        out.status == LpStatus::Feasible) {
      require(out.optimum && oracle.optimum && *out.optimum == *oracle.optimum,
              "optimum mismatch at trial " + std::to_string(trial));
    }
    if (out.status == LpStatus::Infeasible) {
      require(verify_certificate(lp, out),
              "bad certificate at trial " + std::to_string(trial));
    }
  }
}

void criterion7() {
  const SampledMultifunction M = hahn_banach(hahn_banach_canonical_spec());
  const auto sorted_equal = [](const std::vector<RatVec>& got,
                               std::vector<RatVec> want) {
    if (got.size() != want.size()) return false;
    for (const auto& v : got) {
      bool hit = false;
      for (const auto& w : want) hit = hit || w == v;
      if (!hit) return false;
    }
    return true;
  };
  require(sorted_equal(M.samples[2].value.vertices, {{1, 0}, {0, 1}}),
          "F(1) != conv{(1,0),(0,1)}");
  require(sorted_equal(M.samples[0].value.vertices, {{-1, 0}, {0, -1}}),
          "F(-1) != conv{(-1,0),(0,-1)}");
  require(M.samples[1].value.vertices == std::vector<RatVec>{{0, 0}},
          "F(0) != {(0,0)}");
  const AuditReport report = audit_convexity(M);
  bool witness = false;
  for (const auto& v : report.violations) {
    if (v.t == r(1, 2) && v.witness == RatVec{r(1, 2), r(-1, 2)}) {
      witness = true;
    }
  }
  require(witness, "missing witness (1/2,-1/2) at t = 1/2");
}

void criterion8() {
  const std::vector<PointValue> lower{{{-1}, 1}, {{0}, 0}, {{1}, 1}};
  const std::vector<PointValue> upper{{{-1}, 1}, {{0}, 2}, {{1}, 1}};
  const SelectionOutcome found = sandwich(lower, upper);
  require(found.status == SelectionStatus::Found, "sandwich not found");
  require(found.map->matrix == RatMat{{0}} && found.map->offset == RatVec{1},
          "sandwich map is not a == 1");

  const std::vector<PointValue> point_lower{{{0}, 1}};
  const std::vector<PointValue> point_upper{{{0}, 0}};
  const SelectionOutcome none = sandwich(point_lower, point_upper);
  require(none.status == SelectionStatus::NoneExists,
          "contradictory sandwich not rejected");
  require(verify_certificate(assemble_sandwich_lp(point_lower, point_upper),
                             infeasible_outcome(none.certificate)),
          "sandwich certificate failed verification");
}

struct Criterion {
  int id;
  const char* label;
  double budget_seconds;  // 0 = no stated budget
  std::function<void()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Olsen negative result: select-global returns none_exists with a "
          "verified Farkas certificate", 1.0, criterion1},
      {2, "Olsen positive local result at (0,0), plus 50 interior points", 5.0,
       criterion2},
      {3, "Simplex-domain suite: 100 instances all found and verified",
       60.0, criterion3},
      {4, "Interior-point suite: 100 full-dimensional instances admit local "
          "selections", 60.0, criterion4},
      {5, "Intersection-condition necessity and the broken instance", 0.0,
       criterion5},
      {6, "LP oracle equivalence on 500 seeded programs", 120.0, criterion6},
      {7, "Extension-instance audit with exact witness", 1.0, criterion7},
      {8, "Sandwich: pinned map and contradictory certificate", 0.0,
       criterion8},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      criterion.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (error.empty() && criterion.budget_seconds > 0 &&
        seconds >= criterion.budget_seconds) {
      std::ostringstream over;
      over << "exceeded budget of " << criterion.budget_seconds << " s";
      error = over.str();
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (error.empty() ? "[PASS] " : "[FAIL] ") << criterion.id << ". "
         << criterion.label << " (" << seconds << " s";
    if (criterion.budget_seconds > 0) {
      line << " / " << criterion.budget_seconds << " s";
    }
    line << ")";
    if (!error.empty()) line << " — " << error;
    std::cout << line.str() << std::endl;
    if (!error.empty()) ++failures;
  }
  if (failures > 0) {
    std::cout << failures << " of " << criteria.size()
              << " acceptance criteria failed" << std::endl;
    return 1;
  }
  std::cout << "all " << criteria.size() << " acceptance criteria passed"
            << std::endl;
  return 0;
}
