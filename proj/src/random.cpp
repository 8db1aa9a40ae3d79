#include "affsel/random.hpp"

#include <stdexcept>

namespace affsel {

long SeededRng::uniform_int(long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(gen_() % span);
}

Rational SeededRng::grid_rational(long lo_num, long hi_num, long den) {
  return make_rational(Integer(uniform_int(lo_num, hi_num)), Integer(den));
}

RatVec SeededRng::convex_weights(std::size_t count) {
  if (count == 0) throw std::invalid_argument("convex_weights: empty");
  std::vector<long> raw(count);
  long total = 0;
  for (auto& w : raw) {
    w = uniform_int(0, 1000);
    total += w;
  }
  if (total == 0) {
    raw[0] = 1;
    total = 1;
  }
  RatVec weights(count);
  for (std::size_t i = 0; i < count; ++i) {
    weights[i] = make_rational(Integer(raw[i]), Integer(total));
  }
  return weights;
}

RatVec SeededRng::interior_weights(std::size_t count) {
  if (count == 0) throw std::invalid_argument("interior_weights: empty");
  const Rational floor = make_rational(1, Integer(4 * count));
  const Rational spread = 1 - Rational(count) * floor;  // = 3/4
  RatVec extra = convex_weights(count);
  RatVec weights(count);
  for (std::size_t i = 0; i < count; ++i) {
    weights[i] = floor + spread * extra[i];
  }
  return weights;
}

}  // namespace affsel
