#pragma once

#include <cstdint>
#include <optional>

#include "affsel/multifunction.hpp"

namespace affsel {

/// The classic square-domain instance: the tetrahedron in R^3 with vertices
/// (-1,0,0), (1,0,0), (0,-1,1), (0,1,1), read as the graph of a convex
/// multifunction over D = {|x|+|y| <= 1} with interval fibers
/// F(x,y) = [|y|, 1-|x|]. It admits no affine selection on all of D, but
/// local ones at every interior point.
GraphMultifunction olsen();

enum class PolyhedralNorm { Sup, One };

/// Finite-dimensional norm-preserving-extension multifunction: Y = R^k with a
/// polyhedral norm, X the span of the given basis, and each sampled
/// functional f (its values on the basis) mapped to
/// {g in Y* : g|X = f, ||g||_dual = ||f||}, a polytope.
struct HahnBanachSpec {
  std::size_t k = 2;
  PolyhedralNorm norm = PolyhedralNorm::Sup;
  std::vector<RatVec> subspace_basis;       // length-k vectors, independent
  std::vector<RatVec> functional_samples;   // basis values per sample
};

/// Builds the sampled extension multifunction. Value polytopes are exact:
/// vertices of (dual ball scaled by ||f||) intersected with the restriction
/// subspace, enumerated facet-subset by facet-subset. Requires k <= 3
/// (UnsupportedSizeError beyond that).
SampledMultifunction hahn_banach(const HahnBanachSpec& spec);

/// The instance whose convexity audit is interesting: X = span{(1,1)} inside
/// (R^2, sup norm), functionals sampled at {-1, 0, 1}.
HahnBanachSpec hahn_banach_canonical_spec();

/// Operator norm of f on X (max of f over the X-unit ball), exact via LP.
Rational functional_norm(const HahnBanachSpec& spec, const RatVec& f);

/// Seeded reproducible graph with rational vertices on the grid
/// [-1,1]^{n+m}. When domain_simplex is given, the first n coordinates of
/// every vertex are drawn from its vertex set instead (each simplex vertex
/// is hit at least once), so the domain projection is exactly that simplex.
GraphMultifunction random_convex_graph(
    std::size_t n, std::size_t m, std::size_t num_vertices, std::uint64_t seed,
    const std::optional<Simplex>& domain_simplex = std::nullopt);

/// The standard simplex conv{0, e_1, ..., e_n}.
Simplex standard_simplex(std::size_t n);

}  // namespace affsel
