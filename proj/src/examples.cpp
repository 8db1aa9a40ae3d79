#include "affsel/examples.hpp"

#include <algorithm>
#include <stdexcept>

#include "affsel/errors.hpp"
#include "affsel/linalg.hpp"
#include "affsel/lp.hpp"
#include "affsel/random.hpp"

namespace affsel {

GraphMultifunction olsen() {
  std::vector<RatVec> verts = {
      {-1, 0, 0},
      {1, 0, 0},
      {0, -1, 1},
      {0, 1, 1},
  };
  return GraphMultifunction(2, 1, VPolytope(3, std::move(verts)));
}

namespace {

void validate(const HahnBanachSpec& spec) {
  if (spec.k < 2) {
    throw std::invalid_argument("hahn_banach: k must be >= 2");
  }
  if (spec.k > 3) {
    throw UnsupportedSizeError(
        "hahn_banach: k > 3 unsupported (vertex enumeration kept trivial)");
  }
  const std::size_t d = spec.subspace_basis.size();
  if (d < 1 || d >= spec.k) {
    throw std::invalid_argument("hahn_banach: need 1 <= dim X < k");
  }
  for (const auto& b : spec.subspace_basis) {
    if (b.size() != spec.k) {
      throw std::invalid_argument("hahn_banach: basis vector length != k");
    }
  }
  if (matrix_rank(RatMat(spec.subspace_basis.begin(),
                         spec.subspace_basis.end())) != d) {
    throw std::invalid_argument("hahn_banach: basis not linearly independent");
  }
  for (const auto& f : spec.functional_samples) {
    if (f.size() != d) {
      throw std::invalid_argument(
          "hahn_banach: functional sample length != dim X");
    }
  }
}

// Facets of the dual unit ball as (normal, rhs=1) pairs; scaling by r scales
// the rhs. Sup norm on Y dualizes to the cross-polytope, one norm to the cube.
std::vector<RatVec> dual_ball_facets(PolyhedralNorm norm, std::size_t k) {
  std::vector<RatVec> facets;
  if (norm == PolyhedralNorm::Sup) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      RatVec normal(k);
      for (std::size_t i = 0; i < k; ++i) {
        normal[i] = (mask >> i) & 1 ? -1 : 1;
      }
      facets.push_back(std::move(normal));
    }
  } else {
    for (std::size_t i = 0; i < k; ++i) {
      for (const int sign : {1, -1}) {
        RatVec normal(k, Rational(0));
        normal[i] = sign;
        facets.push_back(std::move(normal));
      }
    }
  }
  return facets;
}

}  // namespace

Rational functional_norm(const HahnBanachSpec& spec, const RatVec& f) {
  const std::size_t d = spec.subspace_basis.size();
  const std::size_t k = spec.k;
  // Maximize f(c) over {c : || sum c_j basis_j ||_Y <= 1}.
  LinearProgram lp;
  lp.sense = Sense::Maximize;
  if (spec.norm == PolyhedralNorm::Sup) {
    lp.num_vars = d;
    for (std::size_t i = 0; i < k; ++i) {
      for (const int sign : {1, -1}) {
        Constraint c;
        c.coeffs.resize(d);
        for (std::size_t j = 0; j < d; ++j) {
          c.coeffs[j] = sign * spec.subspace_basis[j][i];
        }
        c.rel = Relation::LessEq;
        c.rhs = 1;
        lp.constraints.push_back(std::move(c));
      }
    }
    lp.objective = f;
  } else {
    // One norm: auxiliaries u_i >= |(Bc)_i| and sum u <= 1.
    lp.num_vars = d + k;
    for (std::size_t i = 0; i < k; ++i) {
      for (const int sign : {1, -1}) {
        Constraint c;
        c.coeffs.assign(d + k, Rational(0));
        for (std::size_t j = 0; j < d; ++j) {
          c.coeffs[j] = sign * spec.subspace_basis[j][i];
        }
        c.coeffs[d + i] = -1;
        c.rel = Relation::LessEq;
        c.rhs = 0;
        lp.constraints.push_back(std::move(c));
      }
    }
    Constraint sum;
    sum.coeffs.assign(d + k, Rational(0));
    for (std::size_t i = 0; i < k; ++i) sum.coeffs[d + i] = 1;
    sum.rel = Relation::LessEq;
    sum.rhs = 1;
    lp.constraints.push_back(std::move(sum));
    lp.objective.assign(d + k, Rational(0));
    for (std::size_t j = 0; j < d; ++j) lp.objective[j] = f[j];
  }
  const LpOutcome out = lp_solve(lp);
  if (out.status != LpStatus::Feasible || !out.optimum) {
    throw std::logic_error("functional_norm: norm LP did not optimize");
  }
  return *out.optimum;
}

SampledMultifunction hahn_banach(const HahnBanachSpec& spec) {
  validate(spec);
  const std::size_t d = spec.subspace_basis.size();
  const std::size_t k = spec.k;
  const std::vector<RatVec> facets = dual_ball_facets(spec.norm, k);

  std::vector<Sample> samples;
  samples.reserve(spec.functional_samples.size());
  for (const auto& f : spec.functional_samples) {
    const Rational radius = functional_norm(spec, f);
    // Vertices of {g : g(basis_j) = f_j, ||g||_dual <= radius}: every vertex
    // lies on k - d facets that complete the d restrictions to a square
    // system, so enumerate facet subsets.
    std::vector<RatVec> verts;
    const auto emit = [&](const std::vector<std::size_t>& chosen) {
      RatMat system;
      RatMat rhs;
      for (std::size_t j = 0; j < d; ++j) {
        system.push_back(spec.subspace_basis[j]);
        rhs.push_back({f[j]});
      }
      for (const std::size_t fi : chosen) {
        system.push_back(facets[fi]);
        rhs.push_back({radius});
      }
      const auto solved = solve_square(std::move(system), std::move(rhs));
      if (!solved) return;
      RatVec g(k);
      for (std::size_t i = 0; i < k; ++i) g[i] = (*solved)[i][0];
      for (const auto& facet : facets) {
        if (dot(facet, g) > radius) return;  // outside the ball
      }
      for (const auto& seen : verts) {
        if (seen == g) return;
      }
      verts.push_back(std::move(g));
    };
    // k - d is 1 or 2 here; keep the subset walk explicit.
    if (k - d == 1) {
      for (std::size_t a = 0; a < facets.size(); ++a) emit({a});
    } else {
      for (std::size_t a = 0; a < facets.size(); ++a) {
        for (std::size_t b = a + 1; b < facets.size(); ++b) emit({a, b});
      }
    }
    if (verts.empty()) {
      throw std::logic_error("hahn_banach: extension set came out empty");
    }
    std::sort(verts.begin(), verts.end());
    samples.push_back({f, VPolytope(k, std::move(verts))});
  }
  return SampledMultifunction(d, k, std::move(samples));
}

HahnBanachSpec hahn_banach_canonical_spec() {
  HahnBanachSpec spec;
  spec.k = 2;
  spec.norm = PolyhedralNorm::Sup;
  spec.subspace_basis = {{Rational(1), Rational(1)}};
  spec.functional_samples = {{Rational(-1)}, {Rational(0)}, {Rational(1)}};
  return spec;
}

GraphMultifunction random_convex_graph(
    std::size_t n, std::size_t m, std::size_t num_vertices, std::uint64_t seed,
    const std::optional<Simplex>& domain_simplex) {
  if (num_vertices < n + 1) {
    throw std::invalid_argument("random_convex_graph: num_vertices < n + 1");
  }
  if (domain_simplex && domain_simplex->dim != n) {
    throw std::invalid_argument("random_convex_graph: simplex dim != n");
  }
  SeededRng rng(seed);
  std::vector<RatVec> verts;
  verts.reserve(num_vertices);
  for (std::size_t v = 0; v < num_vertices; ++v) {
    RatVec vertex;
    vertex.reserve(n + m);
    if (domain_simplex) {
      // First n+1 draws cover every simplex vertex so the projection is the
      // whole simplex.
      const std::size_t pick =
          v <= n ? v
                 : static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(n)));
      vertex = domain_simplex->vertices[pick];
    } else {
      for (std::size_t d = 0; d < n; ++d) {
        vertex.push_back(rng.grid_rational(-16, 16, 16));
      }
    }
    for (std::size_t r = 0; r < m; ++r) {
      vertex.push_back(rng.grid_rational(-16, 16, 16));
    }
    verts.push_back(std::move(vertex));
  }
  return GraphMultifunction(n, m, VPolytope(n + m, std::move(verts)));
}

Simplex standard_simplex(std::size_t n) {
  std::vector<RatVec> verts(n + 1, RatVec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) verts[i + 1][i] = 1;
  return Simplex(n, std::move(verts));
}

}  // namespace affsel
