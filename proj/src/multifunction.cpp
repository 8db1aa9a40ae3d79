#include "affsel/multifunction.hpp"

#include <stdexcept>

#include "affsel/errors.hpp"
#include "affsel/linalg.hpp"
#include "affsel/lp.hpp"

namespace affsel {

GraphMultifunction::GraphMultifunction(std::size_t n_, std::size_t m_,
                                       VPolytope graph_)
    : n(n_), m(m_), graph(std::move(graph_)) {
  if (n == 0 || m == 0) {
    throw std::invalid_argument("graph multifunction: n and m must be >= 1");
  }
  if (graph.dim != n + m) {
    throw std::invalid_argument("graph multifunction: graph.dim != n + m");
  }
}

SampledMultifunction::SampledMultifunction(std::size_t n_, std::size_t m_,
                                           std::vector<Sample> samples_,
                                           bool inner)
    : n(n_), m(m_), samples(std::move(samples_)), values_inner_approx(inner) {
  if (n == 0 || m == 0) {
    throw std::invalid_argument("sampled multifunction: n and m must be >= 1");
  }
  for (const auto& s : samples) {
    if (s.point.size() != n) {
      throw std::invalid_argument("sampled multifunction: point length != n");
    }
    if (s.value.dim != m) {
      throw std::invalid_argument("sampled multifunction: value dim != m");
    }
  }
  for (std::size_t a = 0; a < samples.size(); ++a) {
    for (std::size_t b = a + 1; b < samples.size(); ++b) {
      if (samples[a].point == samples[b].point) {
        throw std::invalid_argument(
            "sampled multifunction: duplicate sample point " +
            format_rational_vec(samples[a].point));
      }
    }
  }
}

std::vector<RatVec> domain_vertices(const GraphMultifunction& G) {
  std::vector<RatVec> verts;
  verts.reserve(G.graph.vertices.size());
  for (const auto& g : G.graph.vertices) {
    verts.emplace_back(g.begin(), g.begin() + static_cast<long>(G.n));
  }
  return verts;
}

namespace {

// Feasibility system of the fiber over x: lambda >= 0, sum lambda = 1,
// sum lambda_i g_i[0..n) = x. Objective, when given, acts on
// y(lambda) = sum lambda_i g_i[n..n+m).
LinearProgram fiber_lp(const GraphMultifunction& G, const RatVec& x,
                       const RatVec* direction, Sense sense) {
  if (x.size() != G.n) {
    throw std::invalid_argument("fiber: point length != n");
  }
  const std::size_t k = G.graph.vertices.size();
  LinearProgram lp;
  lp.num_vars = k;
  lp.sense = sense;
  for (std::size_t d = 0; d < G.n; ++d) {
    Constraint c;
    c.coeffs.resize(k);
    for (std::size_t i = 0; i < k; ++i) c.coeffs[i] = G.graph.vertices[i][d];
    c.rel = Relation::Equal;
    c.rhs = x[d];
    lp.constraints.push_back(std::move(c));
  }
  Constraint sum;
  sum.coeffs.assign(k, Rational(1));
  sum.rel = Relation::Equal;
  sum.rhs = 1;
  lp.constraints.push_back(std::move(sum));
  for (std::size_t i = 0; i < k; ++i) {
    Constraint nn;
    nn.coeffs.assign(k, Rational(0));
    nn.coeffs[i] = -1;
    nn.rel = Relation::LessEq;
    nn.rhs = 0;
    lp.constraints.push_back(std::move(nn));
  }
  if (direction) {
    if (direction->size() != G.m) {
      throw std::invalid_argument("fiber: direction length != m");
    }
    lp.objective.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
      Rational c = 0;
      for (std::size_t r = 0; r < G.m; ++r) {
        c += (*direction)[r] * G.graph.vertices[i][G.n + r];
      }
      lp.objective[i] = c;
    }
  }
  return lp;
}

RatVec fiber_point_from_lambda(const GraphMultifunction& G,
                               const RatVec& lambda) {
  RatVec y(G.m, Rational(0));
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] == 0) continue;
    for (std::size_t r = 0; r < G.m; ++r) {
      y[r] += lambda[i] * G.graph.vertices[i][G.n + r];
    }
  }
  return y;
}

}  // namespace

bool fiber_contains(const GraphMultifunction& G, const RatVec& x,
                    const RatVec& y) {
  if (x.size() != G.n || y.size() != G.m) {
    throw std::invalid_argument("fiber_contains: dimension mismatch");
  }
  RatVec point(x);
  point.insert(point.end(), y.begin(), y.end());
  return membership(point, G.graph).inside;
}

bool fiber_nonempty(const GraphMultifunction& G, const RatVec& x) {
  const LinearProgram lp = fiber_lp(G, x, nullptr, Sense::FeasibilityOnly);
  return lp_solve(lp).status == LpStatus::Feasible;
}

std::optional<std::pair<Rational, Rational>> fiber_extrema(
    const GraphMultifunction& G, const RatVec& x, const RatVec& direction) {
  LinearProgram lp = fiber_lp(G, x, &direction, Sense::Minimize);
  const LpOutcome lo = lp_solve(lp);
  if (lo.status == LpStatus::Infeasible) return std::nullopt;
  lp.sense = Sense::Maximize;
  const LpOutcome hi = lp_solve(lp);
  return std::make_pair(*lo.optimum, *hi.optimum);
}

std::optional<RatVec> fiber_support_point(const GraphMultifunction& G,
                                          const RatVec& x,
                                          const RatVec& direction) {
  const LinearProgram lp = fiber_lp(G, x, &direction, Sense::Maximize);
  const LpOutcome out = lp_solve(lp);
  if (out.status == LpStatus::Infeasible) return std::nullopt;
  return fiber_point_from_lambda(G, out.solution);
}

std::optional<RatVec> canonical_fiber_point(const GraphMultifunction& G,
                                            const RatVec& x) {
  // Minimize y_1; then y_2 with y_1 pinned to its minimum; and so on.
  RatVec fixed;  // minimal values found so far
  const std::size_t k = G.graph.vertices.size();
  for (std::size_t r = 0; r < G.m; ++r) {
    RatVec direction(G.m, Rational(0));
    direction[r] = 1;
    LinearProgram lp = fiber_lp(G, x, &direction, Sense::Minimize);
    for (std::size_t prev = 0; prev < fixed.size(); ++prev) {
      Constraint pin;
      pin.coeffs.resize(k);
      for (std::size_t i = 0; i < k; ++i) {
        pin.coeffs[i] = G.graph.vertices[i][G.n + prev];
      }
      pin.rel = Relation::Equal;
      pin.rhs = fixed[prev];
      lp.constraints.push_back(std::move(pin));
    }
    const LpOutcome out = lp_solve(lp);
    if (out.status == LpStatus::Infeasible) {
      if (r == 0) return std::nullopt;  // x outside D
      throw std::logic_error("canonical_fiber_point: pinned fiber vanished");
    }
    fixed.push_back(*out.optimum);
  }
  return fixed;
}

namespace {

// pk = t*pi + (1-t)*pj for some t strictly inside (0,1)?
std::optional<Rational> segment_parameter(const RatVec& pi, const RatVec& pj,
                                          const RatVec& pk) {
  const RatVec d = sub(pi, pj);
  const RatVec e = sub(pk, pj);
  std::size_t pivot = d.size();
  for (std::size_t c = 0; c < d.size(); ++c) {
    if (d[c] != 0) {
      pivot = c;
      break;
    }
  }
  if (pivot == d.size()) return std::nullopt;  // pi == pj
  const Rational t = e[pivot] / d[pivot];
  if (t <= 0 || t >= 1) return std::nullopt;
  for (std::size_t c = 0; c < d.size(); ++c) {
    if (e[c] != t * d[c]) return std::nullopt;
  }
  return t;
}

template <typename CheckTriple>
AuditReport run_audit(const SampledMultifunction& M, CheckTriple&& check) {
  AuditReport report;
  const std::size_t s = M.samples.size();
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      if (j == i) continue;
      for (std::size_t k = 0; k < s; ++k) {
        if (k == i || k == j) continue;
        const auto t = segment_parameter(M.samples[i].point,
                                         M.samples[j].point,
                                         M.samples[k].point);
        if (!t) continue;
        ++report.checked_triples;
        check(i, j, k, *t, report.violations);
      }
    }
  }
  return report;
}

}  // namespace

AuditReport audit_convexity(const SampledMultifunction& M) {
  return run_audit(M, [&M](std::size_t i, std::size_t j, std::size_t k,
                           const Rational& t,
                           std::vector<AuditViolation>& out) {
    const VPolytope combined =
        minkowski_combine(t, M.samples[i].value, M.samples[j].value);
    std::vector<RatVec> seen;
    for (const auto& vertex : combined.vertices) {
      if (membership(vertex, M.samples[k].value).inside) continue;
      bool duplicate = false;
      for (const auto& w : seen) duplicate = duplicate || w == vertex;
      if (duplicate) continue;
      seen.push_back(vertex);
      out.push_back({i, j, k, t, vertex});
    }
  });
}

AuditReport audit_intersection(const SampledMultifunction& M) {
  return run_audit(M, [&M](std::size_t i, std::size_t j, std::size_t k,
                           const Rational& t,
                           std::vector<AuditViolation>& out) {
    // One LP: a point of t*F(x_i) + (1-t)*F(x_j) that also lies in F(x_k).
    // Blocks: lambda over value_i, mu over value_j, nu over value_k.
    const auto& vi = M.samples[i].value.vertices;
    const auto& vj = M.samples[j].value.vertices;
    const auto& vk = M.samples[k].value.vertices;
    const std::size_t ki = vi.size(), kj = vj.size(), kk = vk.size();
    LinearProgram lp;
    lp.num_vars = ki + kj + kk;
    const Rational s = 1 - t;
    for (std::size_t r = 0; r < M.m; ++r) {
      Constraint c;
      c.coeffs.resize(lp.num_vars);
      for (std::size_t a = 0; a < ki; ++a) c.coeffs[a] = t * vi[a][r];
      for (std::size_t a = 0; a < kj; ++a) c.coeffs[ki + a] = s * vj[a][r];
      for (std::size_t a = 0; a < kk; ++a) c.coeffs[ki + kj + a] = -vk[a][r];
      c.rel = Relation::Equal;
      c.rhs = 0;
      lp.constraints.push_back(std::move(c));
    }
    const auto push_block = [&lp](std::size_t offset, std::size_t count) {
      Constraint sum;
      sum.coeffs.assign(lp.num_vars, Rational(0));
      for (std::size_t a = 0; a < count; ++a) sum.coeffs[offset + a] = 1;
      sum.rel = Relation::Equal;
      sum.rhs = 1;
      lp.constraints.push_back(std::move(sum));
    };
    push_block(0, ki);
    push_block(ki, kj);
    push_block(ki + kj, kk);
    for (std::size_t a = 0; a < lp.num_vars; ++a) {
      Constraint nn;
      nn.coeffs.assign(lp.num_vars, Rational(0));
      nn.coeffs[a] = -1;
      nn.rel = Relation::LessEq;
      nn.rhs = 0;
      lp.constraints.push_back(std::move(nn));
    }
    const LpOutcome outLp = lp_solve(lp);
    if (outLp.status == LpStatus::Infeasible) {
      out.push_back({i, j, k, t, outLp.farkas});
    }
  });
}

SampledMultifunction sample_graph(const GraphMultifunction& G,
                                  const std::vector<RatVec>& points) {
  std::vector<Sample> samples;
  samples.reserve(points.size());
  for (const auto& x : points) {
    if (x.size() != G.n) {
      throw std::invalid_argument("sample_graph: point length != n");
    }
    if (G.m == 1) {
      const RatVec direction{Rational(1)};
      const auto range = fiber_extrema(G, x, direction);
      if (!range) {
        throw DomainError("sample_graph: point " + format_rational_vec(x) +
                          " outside domain");
      }
      std::vector<RatVec> verts{{range->first}};
      if (range->second != range->first) verts.push_back({range->second});
      samples.push_back({x, VPolytope(1, std::move(verts))});
      continue;
    }
    const auto canonical = canonical_fiber_point(G, x);
    if (!canonical) {
      throw DomainError("sample_graph: point " + format_rational_vec(x) +
                        " outside domain");
    }
    std::vector<RatVec> verts{*canonical};
    for (std::size_t r = 0; r < G.m; ++r) {
      for (const int orient : {1, -1}) {
        RatVec direction(G.m, Rational(0));
        direction[r] = orient;
        verts.push_back(*fiber_support_point(G, x, direction));
      }
    }
    samples.push_back({x, VPolytope(G.m, std::move(verts))});
  }
  return SampledMultifunction(G.n, G.m, std::move(samples), G.m > 1);
}

bool domain_is_full_dimensional(const GraphMultifunction& G) {
  return affine_rank(domain_vertices(G)) == G.n;
}

}  // namespace affsel
