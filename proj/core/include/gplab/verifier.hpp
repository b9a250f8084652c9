#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gplab/gaussian.hpp"
#include "gplab/lattice.hpp"
#include "gplab/sieve.hpp"

namespace gplab {

enum class VerifyMode { NormInterval, OnSegment };

std::string to_string(VerifyMode m);
VerifyMode mode_from_string(const std::string& s);

/// One theorem check: the gap [z, k*z] with z = multiplier * f(k) * (a, b).
struct TheoremInstance {
  std::uint64_t k = 2;
  std::int64_t a = 1;  // coprime generator, a, b >= 0
  std::int64_t b = 1;
  std::uint64_t fk = 2;
  std::uint64_t axis_multiplier = 1;  // z1 = m * f(k) on axis instances
  GaussianInt z;
  VerifyMode mode = VerifyMode::NormInterval;
  Convention convention = Convention::Standard;

  bool is_axis() const { return a == 0 || b == 0; }
  /// Whether gcd(z1, z2) = f(k) holds literally (fails on axis when m > 1).
  bool strict_gcd() const { return axis_multiplier == 1; }
  Gap gap() const;
};

TheoremInstance build_instance(std::int64_t a, std::int64_t b, std::uint64_t k,
                               VerifyMode mode = VerifyMode::NormInterval,
                               Convention conv = Convention::Standard);

/// Axis instance with z1 = m * f(k); m > 1 relaxes gcd(z1, 0) = f(k).
TheoremInstance build_axis_instance(std::uint64_t m, std::uint64_t k,
                                    Convention conv = Convention::Standard);

/// gcd(k*z1 - z1, k*z2 - z2); equals (k-1)*f(k) off axis.
std::int64_t lattice_count_on_theorem_gap(const TheoremInstance& inst);

struct VerificationRecord {
  std::uint64_t k = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::uint64_t fk = 0;
  std::int64_t z1 = 0;
  std::int64_t z2 = 0;
  VerifyMode mode = VerifyMode::NormInterval;
  Convention convention = Convention::Standard;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::uint64_t count = 0;          // Gaussian primes found for this instance
  std::uint64_t needed_2x = 0;      // k - 1; pass iff 2*count >= needed_2x
  bool pass = false;
  std::uint64_t total_primes_in_interval = 0;  // all residues, Case I only
  std::int64_t lattice_point_count = 0;
  std::string error;  // nonempty when the instance could not be evaluated
};

/// Case I: primes == 1 (mod 4) strictly between the endpoint norms.
VerificationRecord count_case1(const TheoremInstance& inst, const SieveTable& t);

/// Case II: primes == 3 (mod 4) in the closed axis interval [z1, k*z1].
VerificationRecord count_case2(const TheoremInstance& inst, const SieveTable& t);

struct SegmentCensus {
  std::uint64_t points = 0;
  std::uint64_t gaussian_primes = 0;
  std::vector<GaussianInt> witnesses;
};

/// Literal reading: test every lattice point on the gap for primality.
SegmentCensus on_segment_census(const TheoremInstance& inst);

struct SweepConfig {
  std::uint64_t k_lo = 2;
  std::uint64_t k_hi = 2;  // inclusive; k_hi < k_lo yields an empty sweep
  std::uint64_t generator_bound = 1;
  VerifyMode mode = VerifyMode::NormInterval;
  Convention convention = Convention::Standard;
  unsigned parallelism = 1;
  bool axis_only = false;
  std::uint64_t axis_multiplier_max = 1;
};

struct SweepReport {
  std::vector<VerificationRecord> records;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;  // failed instances, error entries excluded
  std::uint64_t errors = 0;
  std::uint64_t elapsed_ms = 0;
  std::vector<VerificationRecord> counterexamples;
};

/// Largest sieve index any instance in the grid can query.
std::uint64_t required_sieve_limit(const SweepConfig& cfg);

/// Runs every instance in the grid; record order is (k, a, b, m) sorted
/// regardless of parallelism. Per-instance sieve-too-small failures are
/// recorded, not thrown.
SweepReport sweep(const SweepConfig& cfg, const SieveTable& t);

}  // namespace gplab
