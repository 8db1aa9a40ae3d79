#include "affsel/polytope.hpp"

#include <stdexcept>

#include "affsel/errors.hpp"
#include "affsel/linalg.hpp"
#include "affsel/lp.hpp"

namespace affsel {

VPolytope::VPolytope(std::size_t dim_, std::vector<RatVec> verts)
    : dim(dim_), vertices(std::move(verts)) {
  if (dim == 0) throw std::invalid_argument("polytope: dimension must be >= 1");
  if (vertices.empty()) {
    throw std::invalid_argument("polytope: vertex list must be nonempty");
  }
  for (const auto& v : vertices) {
    if (v.size() != dim) {
      throw std::invalid_argument("polytope: vertex length != dim");
    }
  }
}

AffineMap::AffineMap(std::size_t n_, std::size_t m_, RatMat matrix_,
                     RatVec offset_)
    : n(n_), m(m_), matrix(std::move(matrix_)), offset(std::move(offset_)) {
  if (matrix.size() != m || offset.size() != m) {
    throw std::invalid_argument("affine map: shape mismatch");
  }
  for (const auto& row : matrix) {
    if (row.size() != n) {
      throw std::invalid_argument("affine map: matrix row length != n");
    }
  }
}

RatVec AffineMap::apply(const RatVec& x) const {
  if (x.size() != n) {
    throw std::invalid_argument("affine map: input length != n");
  }
  RatVec y(offset);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) y[r] += matrix[r][c] * x[c];
  }
  return y;
}

Simplex::Simplex(std::size_t dim_, std::vector<RatVec> verts)
    : dim(dim_), vertices(std::move(verts)) {
  if (dim == 0) throw std::invalid_argument("simplex: dimension must be >= 1");
  if (vertices.size() != dim + 1) {
    throw std::invalid_argument("simplex: needs exactly dim+1 vertices");
  }
  for (const auto& v : vertices) {
    if (v.size() != dim) {
      throw std::invalid_argument("simplex: vertex length != dim");
    }
  }
  if (affine_rank(vertices) != dim) {
    throw GeometryError("simplex: vertices are affinely dependent");
  }
}

MembershipResult membership(const RatVec& p, const VPolytope& P) {
  if (p.size() != P.dim) {
    throw std::invalid_argument("membership: point length != polytope dim");
  }
  const std::size_t k = P.vertices.size();
  LinearProgram lp;
  lp.num_vars = k;
  // sum lambda_i v_i = p
  for (std::size_t d = 0; d < P.dim; ++d) {
    Constraint c;
    c.coeffs.resize(k);
    for (std::size_t i = 0; i < k; ++i) c.coeffs[i] = P.vertices[i][d];
    c.rel = Relation::Equal;
    c.rhs = p[d];
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
    nn.coeffs[i] = -1;  // -lambda_i <= 0, oriented so the slack can start basic
    nn.rel = Relation::LessEq;
    nn.rhs = 0;
    lp.constraints.push_back(std::move(nn));
  }
  const LpOutcome out = lp_solve(lp);
  MembershipResult result;
  result.inside = out.status == LpStatus::Feasible;
  if (result.inside) result.witness = out.solution;
  return result;
}

VPolytope minkowski_combine(const Rational& t, const VPolytope& P,
                            const VPolytope& Q) {
  if (t < 0 || t > 1) {
    throw std::invalid_argument("minkowski_combine: t outside [0,1]");
  }
  if (P.dim != Q.dim) {
    throw std::invalid_argument("minkowski_combine: dimension mismatch");
  }
  const Rational s = 1 - t;
  std::vector<RatVec> verts;
  verts.reserve(P.vertices.size() * Q.vertices.size());
  for (const auto& p : P.vertices) {
    for (const auto& q : Q.vertices) {
      verts.push_back(add(scale(t, p), scale(s, q)));
    }
  }
  return VPolytope(P.dim, std::move(verts));
}

RatVec barycentric(const Simplex& S, const RatVec& x) {
  if (x.size() != S.dim) {
    throw std::invalid_argument("barycentric: point length != simplex dim");
  }
  const std::size_t k = S.dim + 1;
  // Rows: sum lambda = 1, then one row per coordinate.
  RatMat system(k, RatVec(k, Rational(1)));
  RatMat rhs(k, RatVec(1, Rational(1)));
  for (std::size_t d = 0; d < S.dim; ++d) {
    for (std::size_t i = 0; i < k; ++i) system[d + 1][i] = S.vertices[i][d];
    rhs[d + 1][0] = x[d];
  }
  const auto solved = solve_square(std::move(system), std::move(rhs));
  if (!solved) throw GeometryError("barycentric: degenerate simplex");
  RatVec lambda(k);
  for (std::size_t i = 0; i < k; ++i) lambda[i] = (*solved)[i][0];
  return lambda;
}

AffineMap affine_interpolate(const Simplex& S,
                             const std::vector<RatVec>& values) {
  const std::size_t k = S.dim + 1;
  if (values.size() != k) {
    throw std::invalid_argument("affine_interpolate: needs dim+1 values");
  }
  const std::size_t m = values[0].size();
  for (const auto& v : values) {
    if (v.size() != m) {
      throw std::invalid_argument("affine_interpolate: ragged value list");
    }
  }
  // Unknowns per output coordinate r: row c_r of the matrix plus offset d_r,
  // pinned by c_r . a_i + d_r = values[i][r] for every vertex.
  RatMat system(k, RatVec(k, Rational(1)));
  RatMat rhs(k, RatVec(m));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t d = 0; d < S.dim; ++d) system[i][d] = S.vertices[i][d];
    for (std::size_t r = 0; r < m; ++r) rhs[i][r] = values[i][r];
  }
  const auto solved = solve_square(std::move(system), std::move(rhs));
  if (!solved) throw GeometryError("affine_interpolate: degenerate simplex");
  RatMat matrix(m, RatVec(S.dim));
  RatVec offset(m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t d = 0; d < S.dim; ++d) matrix[r][d] = (*solved)[d][r];
    offset[r] = (*solved)[S.dim][r];
  }
  return AffineMap(S.dim, m, std::move(matrix), std::move(offset));
}

ContainsResult contains_polytope(const VPolytope& P, const VPolytope& Q) {
  if (P.dim != Q.dim) {
    throw std::invalid_argument("contains_polytope: dimension mismatch");
  }
  for (const auto& v : P.vertices) {
    if (!membership(v, Q).inside) {
      return {false, v};
    }
  }
  return {true, {}};
}

}  // namespace affsel
