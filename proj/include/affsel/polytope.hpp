#pragma once

#include "affsel/rational.hpp"

namespace affsel {

/// V-representation polytope: the convex hull of a nonempty vertex list.
/// Redundant vertices are allowed and never pruned (the hull is unchanged).
struct VPolytope {
  std::size_t dim = 0;
  std::vector<RatVec> vertices;

  VPolytope(std::size_t dim, std::vector<RatVec> verts);
};

/// x -> matrix * x + offset, exact.
struct AffineMap {
  std::size_t n = 0;  // domain dimension
  std::size_t m = 0;  // codomain dimension
  RatMat matrix;      // m rows of length n
  RatVec offset;      // length m

  AffineMap(std::size_t n, std::size_t m, RatMat matrix, RatVec offset);
  RatVec apply(const RatVec& x) const;
};

/// n+1 affinely independent vertices in R^n. Degeneracy is rejected at
/// construction with GeometryError.
struct Simplex {
  std::size_t dim = 0;
  std::vector<RatVec> vertices;

  Simplex(std::size_t dim, std::vector<RatVec> verts);
};

struct MembershipResult {
  bool inside = false;
  /// Convex-combination coefficients over the polytope's vertices (lambda
  /// >= 0, sum 1, sum lambda_i v_i = p); empty when outside.
  RatVec witness;
};

/// Is p in conv(P.vertices)? Decided by an exact feasibility LP over the
/// combination coefficients.
MembershipResult membership(const RatVec& p, const VPolytope& P);

/// t*P + (1-t)*Q in the Minkowski sense, materialized as all cross sums
/// (P-major order). Requires 0 <= t <= 1 and equal dimensions.
VPolytope minkowski_combine(const Rational& t, const VPolytope& P,
                            const VPolytope& Q);

/// Coefficients lambda with sum 1 and sum lambda_i a_i = x; unique by
/// affine independence. x lies in S iff all entries are >= 0.
RatVec barycentric(const Simplex& S, const RatVec& x);

/// The unique affine map f with f(a_i) = values[i] at every vertex of S.
AffineMap affine_interpolate(const Simplex& S,
                             const std::vector<RatVec>& values);

struct ContainsResult {
  bool contained = false;
  RatVec counterexample;  // a vertex of P outside Q, when not contained
};

/// conv(P) subseteq conv(Q), decided vertex by vertex (membership of a
/// convex set is preserved under convex combination).
ContainsResult contains_polytope(const VPolytope& P, const VPolytope& Q);

}  // namespace affsel
