#include "gplab/gaussian.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace gplab {

std::string to_string(Convention c) {
  return c == Convention::PaperLiteral ? "paper" : "standard";
}

Convention convention_from_string(const std::string& s) {
  if (s == "paper" || s == "paper-literal") return Convention::PaperLiteral;
  if (s == "standard") return Convention::Standard;
  throw std::invalid_argument("unknown convention: " + s);
}

std::int64_t norm(GaussianInt z) {
  const __int128 n =
      static_cast<__int128>(z.a) * z.a + static_cast<__int128>(z.b) * z.b;
  if (n > std::numeric_limits<std::int64_t>::max())
    throw std::overflow_error("norm overflow");
  return static_cast<std::int64_t>(n);
}

bool is_rational_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

bool is_gaussian_prime(GaussianInt z, Convention conv,
                       const RationalPrimePredicate& is_rational_prime) {
  if (z.a != 0 && z.b != 0)
    return is_rational_prime(static_cast<std::uint64_t>(norm(z)));
  if (z.a == 0 && z.b == 0) return false;

  const std::uint64_t m =
      static_cast<std::uint64_t>(std::abs(z.a != 0 ? z.a : z.b));
  if (!is_rational_prime(m)) return false;

  if (z.a == 0) {
    // Purely imaginary: the conventions diverge here.
    return conv == Convention::PaperLiteral ? m % 4 == 1 : m % 4 == 3;
  }
  // On the real axis both conventions require |a| == 3 (mod 4).
  return m % 4 == 3;
}

bool is_gaussian_prime(GaussianInt z, Convention conv) {
  return is_gaussian_prime(z, conv, is_rational_prime_trial);
}

bool irreducibility_oracle(GaussianInt z, std::int64_t oracle_limit) {
  const std::int64_t n = norm(z);
  if (n > oracle_limit)
    throw std::domain_error("irreducibility_oracle: norm exceeds limit");
  if (n <= 1) return false;

  // Candidate divisors d = u + vi with 1 < norm(d) <= sqrt(n).
  const auto bound = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n))) + 1;
  std::int64_t coord = 0;
  while (coord * coord <= bound) ++coord;

  for (std::int64_t u = -coord; u <= coord; ++u) {
    for (std::int64_t v = -coord; v <= coord; ++v) {
      const std::int64_t nd = u * u + v * v;
      if (nd <= 1 || nd * nd > n) continue;
      if (n % nd != 0) continue;
      // z / d = z * conj(d) / norm(d); exact iff both parts divide.
      const std::int64_t x = z.a * u + z.b * v;
      const std::int64_t y = z.b * u - z.a * v;
      if (x % nd == 0 && y % nd == 0) return false;
    }
  }
  return true;
}

}  // namespace gplab
