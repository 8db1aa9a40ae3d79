#pragma once

#include <optional>

#include "affsel/rational.hpp"

namespace affsel {

Rational dot(const RatVec& a, const RatVec& b);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const Rational& t, const RatVec& v);

/// Solves A X = B exactly for square A (k x k) and B given as k rows of
/// width r. Returns the k x r solution, or nullopt when A is singular.
std::optional<RatMat> solve_square(RatMat a, RatMat b);

std::size_t matrix_rank(RatMat a);

/// Dimension of the affine hull of the given points.
std::size_t affine_rank(const std::vector<RatVec>& points);

}  // namespace affsel
