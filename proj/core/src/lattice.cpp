#include "gplab/lattice.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace gplab {

namespace {

std::int64_t checked_narrow(__int128 v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error(what);
  return static_cast<std::int64_t>(v);
}

}  // namespace

Gap::Gap(GaussianInt start, GaussianInt end) : start_(start), end_(end) {
  if (start == end) throw std::invalid_argument("Gap: endpoints must differ");
}

std::int64_t Gap::difference_gcd() const {
  const std::uint64_t da = std::abs(end_.a - start_.a);
  const std::uint64_t db = std::abs(end_.b - start_.b);
  return static_cast<std::int64_t>(std::gcd(da, db));
}

std::int64_t Gap::squared_length() const {
  const __int128 da = end_.a - start_.a;
  const __int128 db = end_.b - start_.b;
  return checked_narrow(da * da + db * db, "squared_length overflow");
}

double Gap::euclidean_length() const {
  return std::sqrt(static_cast<double>(squared_length()));
}

bool are_mutually_visible(GaussianInt p, GaussianInt q) {
  if (p == q) throw std::invalid_argument("visibility: points must differ");
  return Gap(p, q).difference_gcd() == 1;
}

std::vector<GaussianInt> lattice_points_on(const Gap& g) {
  const std::int64_t d = g.difference_gcd();
  const std::int64_t step_a = (g.end().a - g.start().a) / d;
  const std::int64_t step_b = (g.end().b - g.start().b) / d;
  std::vector<GaussianInt> points;
  points.reserve(static_cast<std::size_t>(d) + 1);
  for (std::int64_t j = 0; j <= d; ++j)
    points.push_back({g.start().a + j * step_a, g.start().b + j * step_b});
  return points;
}

LineCoefficients line_coefficients(const Gap& g) {
  const auto [a, b] = g.start();
  const auto [c, d] = g.end();
  const __int128 cross = static_cast<__int128>(a) * d - static_cast<__int128>(b) * c;
  return {b - d, c - a, checked_narrow(cross, "line coefficient overflow")};
}

std::pair<std::int64_t, std::int64_t> norm_interval(const Gap& g) {
  const std::int64_t lo = norm(g.start());
  const std::int64_t hi = norm(g.end());
  if (lo == hi) throw std::domain_error("norm_interval: degenerate interval");
  if (lo > hi)
    throw std::invalid_argument("norm_interval: requires norm(start) < norm(end)");
  return {lo, hi};
}

}  // namespace gplab
