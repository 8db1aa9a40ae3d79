#include "affsel/selection.hpp"

#include <stdexcept>

#include "affsel/errors.hpp"
#include "affsel/random.hpp"

namespace affsel {

namespace {

constexpr std::uint64_t kSpotCheckSeed = 0x5e1ec710u;
constexpr int kMaxHalvings = 64;

std::vector<RatVec> distinct_domain_vertices(const GraphMultifunction& G) {
  std::vector<RatVec> verts;
  for (auto& v : domain_vertices(G)) {
    bool seen = false;
    for (const auto& u : verts) seen = seen || u == v;
    if (!seen) verts.push_back(std::move(v));
  }
  return verts;
}

// Unknown layout shared by the decision LP and the canonical-map LP:
//   [0, m*n)            entries of A, row-major
//   [m*n, m*n+m)        entries of b
//   then one lambda block of size K per distinct domain vertex
// and, in the canonical-map LP only, one magnitude bound per map entry.
LinearProgram build_selection_lp(const GraphMultifunction& G,
                                 const std::vector<RatVec>& verts,
                                 bool canonical_objective) {
  const std::size_t mn = G.m * G.n;
  const std::size_t map_vars = mn + G.m;
  const std::size_t k = G.graph.vertices.size();
  LinearProgram lp;
  lp.num_vars = map_vars + verts.size() * k +
                (canonical_objective ? map_vars : 0);
  for (std::size_t v = 0; v < verts.size(); ++v) {
    const RatVec& x = verts[v];
    const std::size_t block = map_vars + v * k;
    // sum lambda_i g_i[0..n) = x
    for (std::size_t d = 0; d < G.n; ++d) {
      Constraint c;
      c.coeffs.assign(lp.num_vars, Rational(0));
      for (std::size_t i = 0; i < k; ++i) {
        c.coeffs[block + i] = G.graph.vertices[i][d];
      }
      c.rel = Relation::Equal;
      c.rhs = x[d];
      lp.constraints.push_back(std::move(c));
    }
    // sum lambda_i g_i[n+r] - (A x)_r - b_r = 0
    for (std::size_t r = 0; r < G.m; ++r) {
      Constraint c;
      c.coeffs.assign(lp.num_vars, Rational(0));
      for (std::size_t i = 0; i < k; ++i) {
        c.coeffs[block + i] = G.graph.vertices[i][G.n + r];
      }
      for (std::size_t d = 0; d < G.n; ++d) c.coeffs[r * G.n + d] = -x[d];
      c.coeffs[mn + r] = -1;
      c.rel = Relation::Equal;
      c.rhs = 0;
      lp.constraints.push_back(std::move(c));
    }
    Constraint sum;
    sum.coeffs.assign(lp.num_vars, Rational(0));
    for (std::size_t i = 0; i < k; ++i) sum.coeffs[block + i] = 1;
    sum.rel = Relation::Equal;
    sum.rhs = 1;
    lp.constraints.push_back(std::move(sum));
    for (std::size_t i = 0; i < k; ++i) {
      Constraint nn;
      nn.coeffs.assign(lp.num_vars, Rational(0));
      nn.coeffs[block + i] = -1;
      nn.rel = Relation::LessEq;
      nn.rhs = 0;
      lp.constraints.push_back(std::move(nn));
    }
  }
  if (canonical_objective) {
    // magnitude bounds: u_e >= +-entry_e; minimizing sum u picks the map
    // of least total absolute value.
    const std::size_t u_start = map_vars + verts.size() * k;
    for (std::size_t e = 0; e < map_vars; ++e) {
      for (const int sign : {1, -1}) {
        Constraint c;
        c.coeffs.assign(lp.num_vars, Rational(0));
        c.coeffs[e] = sign;
        c.coeffs[u_start + e] = -1;
        c.rel = Relation::LessEq;
        c.rhs = 0;
        lp.constraints.push_back(std::move(c));
      }
    }
    lp.objective.assign(lp.num_vars, Rational(0));
    for (std::size_t e = 0; e < map_vars; ++e) {
      lp.objective[u_start + e] = 1;
    }
    lp.sense = Sense::Minimize;
  }
  return lp;
}

AffineMap map_from_solution(const GraphMultifunction& G, const RatVec& sol) {
  RatMat matrix(G.m, RatVec(G.n));
  RatVec offset(G.m);
  for (std::size_t r = 0; r < G.m; ++r) {
    for (std::size_t d = 0; d < G.n; ++d) matrix[r][d] = sol[r * G.n + d];
    offset[r] = sol[G.m * G.n + r];
  }
  return AffineMap(G.n, G.m, std::move(matrix), std::move(offset));
}

RatVec combine(const std::vector<RatVec>& points, const RatVec& weights) {
  RatVec x(points[0].size(), Rational(0));
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t d = 0; d < x.size(); ++d) {
      x[d] += weights[i] * points[i][d];
    }
  }
  return x;
}

}  // namespace

LinearProgram assemble_selection_lp(const GraphMultifunction& G) {
  return build_selection_lp(G, distinct_domain_vertices(G), false);
}

SelectionOutcome global_selection(const GraphMultifunction& G) {
  const std::vector<RatVec> verts = distinct_domain_vertices(G);
  SelectionOutcome outcome;
  const LpOutcome decision = lp_solve(build_selection_lp(G, verts, false));
  if (decision.status == LpStatus::Infeasible) {
    outcome.status = SelectionStatus::NoneExists;
    outcome.certificate = decision.farkas;
    return outcome;
  }
  const LpOutcome canonical = lp_solve(build_selection_lp(G, verts, true));
  if (canonical.status != LpStatus::Feasible) {
    throw std::logic_error("global_selection: canonical solve disagreed");
  }
  outcome.status = SelectionStatus::Found;
  outcome.map = map_from_solution(G, canonical.solution);

  const std::vector<RatVec> support = domain_vertices(G);
  SeededRng rng(kSpotCheckSeed);
  for (int trial = 0; trial < 20; ++trial) {
    const RatVec x = combine(support, rng.convex_weights(support.size()));
    const RatVec y = outcome.map->apply(x);
    outcome.verification.push_back({x, y, fiber_contains(G, x, y)});
  }
  return outcome;
}

LocalSelection local_selection(const GraphMultifunction& G, const RatVec& x0) {
  if (x0.size() != G.n) {
    throw std::invalid_argument("local_selection: point length != n");
  }
  if (!fiber_nonempty(G, x0)) {
    throw DomainError("local_selection: point " + format_rational_vec(x0) +
                      " outside domain");
  }
  // Candidate vertices x0 + a e_i and x0 - a*(1,...,1); x0 is their centroid,
  // so it is interior to the simplex for every scale a.
  Rational alpha = 1;
  for (int halvings = 0; halvings <= kMaxHalvings; ++halvings) {
    std::vector<RatVec> verts;
    verts.reserve(G.n + 1);
    for (std::size_t i = 0; i < G.n; ++i) {
      RatVec v(x0);
      v[i] += alpha;
      verts.push_back(std::move(v));
    }
    RatVec diag(x0);
    for (auto& coord : diag) coord -= alpha;
    verts.push_back(std::move(diag));

    bool all_inside = true;
    for (const auto& v : verts) {
      all_inside = all_inside && fiber_nonempty(G, v);
      if (!all_inside) break;
    }
    if (!all_inside) {
      alpha /= 2;
      continue;
    }

    Simplex simplex(G.n, verts);
    std::vector<RatVec> values;
    values.reserve(G.n + 1);
    for (const auto& v : verts) {
      values.push_back(*canonical_fiber_point(G, v));
    }
    AffineMap map = affine_interpolate(simplex, values);

    // The vertex argument guarantees selection on the whole simplex;
    // re-check at seeded points so a broken build cannot return quietly.
    SeededRng rng(kSpotCheckSeed);
    for (int trial = 0; trial < 100; ++trial) {
      const RatVec x = combine(verts, rng.convex_weights(verts.size()));
      if (!fiber_contains(G, x, map.apply(x))) {
        throw std::logic_error("local_selection: interpolant failed re-check");
      }
    }
    return LocalSelection{x0, std::move(simplex), std::move(map), halvings};
  }
  throw NotInteriorError(
      "local_selection: no simplex fits after 64 halvings; point " +
      format_rational_vec(x0) +
      " is on the boundary or the domain is not full-dimensional");
}

LinearProgram assemble_sandwich_lp(const std::vector<PointValue>& lower,
                                   const std::vector<PointValue>& upper) {
  if (lower.empty() || upper.empty()) {
    throw std::invalid_argument("sandwich: datasets must be nonempty");
  }
  const std::size_t n = lower[0].first.size();
  LinearProgram lp;
  lp.num_vars = n + 1;  // coefficients, then offset
  const auto push = [&lp, n](const PointValue& datum, Relation rel) {
    if (datum.first.size() != n) {
      throw std::invalid_argument("sandwich: point length mismatch");
    }
    Constraint c;
    c.coeffs.assign(n + 1, Rational(1));
    for (std::size_t d = 0; d < n; ++d) c.coeffs[d] = datum.first[d];
    c.rel = rel;
    c.rhs = datum.second;
    lp.constraints.push_back(std::move(c));
  };
  for (const auto& datum : lower) push(datum, Relation::GreaterEq);
  for (const auto& datum : upper) push(datum, Relation::LessEq);
  return lp;
}

SelectionOutcome sandwich(const std::vector<PointValue>& lower,
                          const std::vector<PointValue>& upper) {
  LinearProgram core = assemble_sandwich_lp(lower, upper);
  const std::size_t n = core.num_vars - 1;
  SelectionOutcome outcome;
  const LpOutcome decision = lp_solve(core);
  if (decision.status == LpStatus::Infeasible) {
    outcome.status = SelectionStatus::NoneExists;
    outcome.certificate = decision.farkas;
    return outcome;
  }
  // Canonical map: minimal total |coefficients| + |offset|.
  LinearProgram canonical = core;
  canonical.num_vars = 2 * (n + 1);
  for (auto& c : canonical.constraints) c.coeffs.resize(canonical.num_vars, Rational(0));
  for (std::size_t e = 0; e < n + 1; ++e) {
    for (const int sign : {1, -1}) {
      Constraint c;
      c.coeffs.assign(canonical.num_vars, Rational(0));
      c.coeffs[e] = sign;
      c.coeffs[n + 1 + e] = -1;
      c.rel = Relation::LessEq;
      c.rhs = 0;
      canonical.constraints.push_back(std::move(c));
    }
  }
  canonical.objective.assign(canonical.num_vars, Rational(0));
  for (std::size_t e = 0; e < n + 1; ++e) canonical.objective[n + 1 + e] = 1;
  canonical.sense = Sense::Minimize;
  const LpOutcome solved = lp_solve(canonical);
  if (solved.status != LpStatus::Feasible) {
    throw std::logic_error("sandwich: canonical solve disagreed");
  }
  RatMat matrix(1, RatVec(solved.solution.begin(),
                          solved.solution.begin() + static_cast<long>(n)));
  RatVec offset{solved.solution[n]};
  outcome.status = SelectionStatus::Found;
  outcome.map = AffineMap(n, 1, std::move(matrix), std::move(offset));
  for (const auto& [point, bound] : lower) {
    const RatVec y = outcome.map->apply(point);
    outcome.verification.push_back({point, y, y[0] >= bound});
  }
  for (const auto& [point, bound] : upper) {
    const RatVec y = outcome.map->apply(point);
    outcome.verification.push_back({point, y, y[0] <= bound});
  }
  return outcome;
}

IntervalSelectionReport interval_selection_1d(const SampledMultifunction& M) {
  if (M.n != 1 || M.m != 1) {
    throw std::invalid_argument(
        "interval_selection_1d: values are not intervals (need n = m = 1)");
  }
  std::vector<PointValue> lower, upper;
  lower.reserve(M.samples.size());
  upper.reserve(M.samples.size());
  for (const auto& sample : M.samples) {
    Rational lo = sample.value.vertices[0][0];
    Rational hi = lo;
    for (const auto& v : sample.value.vertices) {
      if (v[0] < lo) lo = v[0];
      if (v[0] > hi) hi = v[0];
    }
    lower.push_back({sample.point, lo});
    upper.push_back({sample.point, hi});
  }
  return {sandwich(lower, upper), audit_intersection(M)};
}

VerifyReport verify_selection(const GraphMultifunction& G, const AffineMap& map,
                              long trials, std::uint64_t seed) {
  if (map.n != G.n || map.m != G.m) {
    throw std::invalid_argument("verify_selection: map shape mismatch");
  }
  const std::vector<RatVec> support = domain_vertices(G);
  SeededRng rng(seed);
  VerifyReport report;
  report.trials = trials;
  for (long trial = 0; trial < trials; ++trial) {
    const RatVec x = combine(support, rng.convex_weights(support.size()));
    const RatVec y = map.apply(x);
    if (!fiber_contains(G, x, y)) {
      report.failures.push_back({x, y});
    }
  }
  return report;
}

}  // namespace affsel
