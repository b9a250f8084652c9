#pragma once

// Independent brute-force oracles used by the test suites. These must not
// share code with the library paths they check.

#include <cstdint>
#include <vector>

#include "gplab/gaussian.hpp"

namespace oracles {

inline bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Scans the bounding box for points collinear with and between the
// endpoints, endpoints included. Rational slope test via cross product.
inline std::vector<gplab::GaussianInt> brute_segment_points(
    gplab::GaussianInt p, gplab::GaussianInt q) {
  std::vector<gplab::GaussianInt> found;
  const std::int64_t xlo = std::min(p.a, q.a), xhi = std::max(p.a, q.a);
  const std::int64_t ylo = std::min(p.b, q.b), yhi = std::max(p.b, q.b);
  for (std::int64_t x = xlo; x <= xhi; ++x)
    for (std::int64_t y = ylo; y <= yhi; ++y) {
      const std::int64_t cross = (q.a - p.a) * (y - p.b) - (q.b - p.b) * (x - p.a);
      if (cross == 0) found.push_back({x, y});
    }
  return found;
}

}  // namespace oracles
