#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace gplab {

/// A Gaussian integer a + bi as an exact lattice point.
struct GaussianInt {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
};

/// Which axis-point classification to use. The two conventions agree
/// whenever a*b != 0 and differ exactly on purely imaginary points.
enum class Convention { PaperLiteral, Standard };

std::string to_string(Convention c);
Convention convention_from_string(const std::string& s);

/// a^2 + b^2, exact. Throws std::overflow_error instead of wrapping.
std::int64_t norm(GaussianInt z);

using RationalPrimePredicate = std::function<bool(std::uint64_t)>;

/// Trial-division rational primality; adequate for oracle-scale inputs.
bool is_rational_prime_trial(std::uint64_t n);

bool is_gaussian_prime(GaussianInt z, Convention conv,
                       const RationalPrimePredicate& is_rational_prime);

/// Convenience overload backed by trial division.
bool is_gaussian_prime(GaussianInt z, Convention conv);

inline constexpr std::int64_t kDefaultOracleLimit = 100'000'000;

/// Brute-force irreducibility in Z[i]: scans all candidate divisors d
/// with 1 < norm(d) <= sqrt(norm(z)) and tests exact division via
/// conjugate multiplication. Independent of is_gaussian_prime.
/// Throws std::domain_error if norm(z) exceeds the oracle limit.
bool irreducibility_oracle(GaussianInt z,
                           std::int64_t oracle_limit = kDefaultOracleLimit);

}  // namespace gplab
