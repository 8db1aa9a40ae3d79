#pragma once

#include <cstdint>
#include <random>

#include "affsel/rational.hpp"

namespace affsel {

// Seeded generator for reproducible rational samples. mt19937_64 output is
// fully specified by the standard, and all derived draws below avoid
// std::*_distribution, whose mapping is implementation-defined.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  /// Uniform-ish integer in [lo, hi], inclusive. Modulo bias is irrelevant
  /// for the test families generated here.
  long uniform_int(long lo, long hi);

  /// uniform_int(lo_num, hi_num) / den.
  Rational grid_rational(long lo_num, long hi_num, long den);

  /// Nonnegative weights summing to 1 (a random point of the simplex).
  RatVec convex_weights(std::size_t count);

  /// Weights summing to 1 with every entry >= 1/(4*count); convex
  /// combinations taken with them land strictly inside full-dimensional hulls.
  RatVec interior_weights(std::size_t count);

 private:
  std::mt19937_64 gen_;
};

}  // namespace affsel
