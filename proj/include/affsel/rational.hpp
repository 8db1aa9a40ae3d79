#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace affsel {

// Exact arbitrary-precision scalars. mpq_rational keeps gcd(|num|, den) = 1
// and den > 0 as long as values are built through arithmetic or through
// make_rational below; the raw (int, int) constructor and the string
// constructor of boost do NOT canonicalize and must not be used.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

/// num/den in canonical form. Throws std::invalid_argument when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Accepts "p", "p/q" and optional leading sign on either part.
Rational parse_rational(const std::string& text);

/// "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rational& q);

/// Decimal approximation for human-facing output only.
double approx(const Rational& q);

/// Comma-separated rationals, e.g. "1/2,-1,0".
RatVec parse_rational_list(const std::string& text, char sep = ',');

std::string format_rational_vec(const RatVec& v);

}  // namespace affsel
