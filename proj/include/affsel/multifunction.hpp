#pragma once

#include <optional>
#include <utility>

#include "affsel/polytope.hpp"

namespace affsel {

/// Convex multifunction given by its graph polytope in R^{n+m}. The fiber
/// F(x) = {y : (x,y) in conv(graph)} is automatically convex, and the domain
/// D (projection onto the first n coordinates) is nonempty and convex.
struct GraphMultifunction {
  std::size_t n = 0;
  std::size_t m = 0;
  VPolytope graph;

  GraphMultifunction(std::size_t n, std::size_t m, VPolytope graph);
};

struct Sample {
  RatVec point;      // length n
  VPolytope value;   // dimension m
};

/// Finite list of (point, value polytope) pairs with pairwise distinct
/// points. Convexity is a question here, not a guarantee.
struct SampledMultifunction {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Sample> samples;
  /// Set when values are inner approximations of the true fibers
  /// (sample_graph with m > 1).
  bool values_inner_approx = false;

  SampledMultifunction(std::size_t n, std::size_t m,
                       std::vector<Sample> samples,
                       bool values_inner_approx = false);
};

struct AuditViolation {
  std::size_t i = 0, j = 0, k = 0;
  Rational t;
  /// Inclusion audit: a vertex of t*F(x_i)+(1-t)*F(x_j) outside F(x_k).
  /// Intersection audit: the Farkas multipliers of the empty-intersection LP.
  RatVec witness;
};

struct AuditReport {
  long checked_triples = 0;
  std::vector<AuditViolation> violations;
  bool passed() const { return violations.empty(); }
};

/// Projections of the graph vertices onto the first n coordinates: a
/// V-representation of D (duplicates allowed).
std::vector<RatVec> domain_vertices(const GraphMultifunction& G);

/// y in F(x), i.e. (x,y) in conv(graph).
bool fiber_contains(const GraphMultifunction& G, const RatVec& x,
                    const RatVec& y);

/// Is x in D? (Equivalently: is the fiber over x nonempty?)
bool fiber_nonempty(const GraphMultifunction& G, const RatVec& x);

/// Min and max of <direction, y> over F(x); nullopt iff x is outside D.
std::optional<std::pair<Rational, Rational>> fiber_extrema(
    const GraphMultifunction& G, const RatVec& x, const RatVec& direction);

/// A point of F(x) maximizing <direction, y>; nullopt iff x outside D.
std::optional<RatVec> fiber_support_point(const GraphMultifunction& G,
                                          const RatVec& x,
                                          const RatVec& direction);

/// The lexicographically minimal point of F(x) (m sequential LPs);
/// deterministic. nullopt iff x outside D.
std::optional<RatVec> canonical_fiber_point(const GraphMultifunction& G,
                                            const RatVec& x);

/// For every ordered triple (i,j,k) with point_k strictly inside the segment
/// (point_i, point_j), tests t*F(x_i) + (1-t)*F(x_j) subseteq F(x_k) with the
/// segment's own t; every vertex of the combination that falls outside is
/// recorded. Violations come out sorted by (i, j, k).
AuditReport audit_convexity(const SampledMultifunction& M);

/// Same triples, weaker condition: (t*F(x_i) + (1-t)*F(x_j)) meets F(x_k).
AuditReport audit_intersection(const SampledMultifunction& M);

/// Evaluates the graph's fibers at the given points. For m = 1 values are the
/// exact intervals; for m > 1 they span the canonical fiber point and the
/// support points in the 2m axis directions (an inner approximation, flagged
/// on the result). Throws DomainError for points outside D.
SampledMultifunction sample_graph(const GraphMultifunction& G,
                                  const std::vector<RatVec>& points);

/// True when the affine hull of D is all of R^n.
bool domain_is_full_dimensional(const GraphMultifunction& G);

}  // namespace affsel
