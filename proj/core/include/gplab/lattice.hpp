#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gplab/gaussian.hpp"

namespace gplab {

/// Integer line coefficients A*x + B*y + C = 0 through a gap's endpoints.
struct LineCoefficients {
  std::int64_t A = 0;
  std::int64_t B = 0;
  std::int64_t C = 0;

  friend bool operator==(const LineCoefficients&,
                         const LineCoefficients&) = default;
};

/// A closed directed segment between two distinct lattice points.
class Gap {
 public:
  Gap(GaussianInt start, GaussianInt end);

  GaussianInt start() const { return start_; }
  GaussianInt end() const { return end_; }

  /// gcd(|da|, |db|) of the coordinate differences, with gcd(x, 0) = |x|.
  std::int64_t difference_gcd() const;

  /// Exact squared Euclidean length. Throws std::overflow_error.
  std::int64_t squared_length() const;
  double euclidean_length() const;

  /// Lattice points strictly between the endpoints: difference_gcd() - 1.
  std::int64_t interior_count() const { return difference_gcd() - 1; }
  /// Points on the closed segment including both endpoints: gcd + 1.
  std::int64_t closed_count() const { return difference_gcd() + 1; }

 private:
  GaussianInt start_;
  GaussianInt end_;
};

bool are_mutually_visible(GaussianInt p, GaussianInt q);

/// All lattice points on the closed segment, ordered from start to end.
std::vector<GaussianInt> lattice_points_on(const Gap& g);

LineCoefficients line_coefficients(const Gap& g);

/// (norm(start), norm(end)); requires norm(start) < norm(end).
std::pair<std::int64_t, std::int64_t> norm_interval(const Gap& g);

}  // namespace gplab
