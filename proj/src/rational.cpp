#include "affsel/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace affsel {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw std::invalid_argument("rational: zero denominator");
  }
  return Rational(num, den);  // mpz,mpz constructor canonicalizes
}

Rational parse_rational(const std::string& text) {
  const auto bad = [&text]() {
    return std::invalid_argument("malformed rational \"" + text + "\"");
  };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Integer(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (num.empty() || den.empty()) throw bad();
    return make_rational(Integer(num), Integer(den));
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw bad();
  }
}

std::string format_rational(const Rational& q) {
  std::string out = numerator(q).str();
  if (denominator(q) != 1) {
    out += "/" + denominator(q).str();
  }
  return out;
}

double approx(const Rational& q) { return q.convert_to<double>(); }

RatVec parse_rational_list(const std::string& text, char sep) {
  RatVec out;
  std::string item;
  std::istringstream stream(text);
  while (std::getline(stream, item, sep)) {
    out.push_back(parse_rational(item));
  }
  if (out.empty()) {
    throw std::invalid_argument("malformed rational list \"" + text + "\"");
  }
  return out;
}

std::string format_rational_vec(const RatVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_rational(v[i]);
  }
  return out + ")";
}

}  // namespace affsel
