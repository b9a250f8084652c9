#include <doctest.h>

#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gplab/report.hpp"
#include "gplab/verifier.hpp"
#include "oracles.hpp"

using gplab::build_axis_instance;
using gplab::build_instance;
using gplab::Convention;
using gplab::SieveTable;
using gplab::TheoremInstance;
using gplab::VerifyMode;

namespace {

// Distinct norms of first-quadrant Gaussian primes (u,v >= 1) strictly
// inside (lo, hi), found by scanning the disk with the primality predicate.
std::uint64_t disk_scan_distinct_norms(std::int64_t lo, std::int64_t hi) {
  std::set<std::int64_t> norms;
  for (std::int64_t u = 1; u * u < hi; ++u)
    for (std::int64_t v = 1; u * u + v * v < hi; ++v) {
      const std::int64_t n = u * u + v * v;
      if (n > lo && gplab::is_gaussian_prime({u, v}, Convention::Standard))
        norms.insert(n);
    }
  return norms.size();
}

}  // namespace

TEST_CASE("build_instance") {
  const auto inst = build_instance(1, 1, 2);
  CHECK(inst.z == gplab::GaussianInt{2, 2});
  CHECK(inst.gap().end() == gplab::GaussianInt{4, 4});
  CHECK(inst.strict_gcd());

  const auto axis = build_instance(1, 0, 2);
  CHECK(axis.is_axis());
  CHECK(axis.z == gplab::GaussianInt{2, 0});

  const auto big = build_instance(3, 2, 10);
  CHECK(big.z == gplab::GaussianInt{12, 8});
  CHECK(big.gap().end() == gplab::GaussianInt{120, 80});

  CHECK_THROWS_AS(build_instance(2, 4, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_instance(1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_instance(0, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_instance(-1, 2, 2), std::invalid_argument);
}

TEST_CASE("lattice count on theorem gaps") {
  CHECK(gplab::lattice_count_on_theorem_gap(build_instance(1, 1, 2)) == 2);
  CHECK(gplab::lattice_count_on_theorem_gap(build_instance(3, 2, 10)) == 36);
  CHECK(gplab::lattice_count_on_theorem_gap(build_instance(1, 1, 3)) == 6);
}

TEST_CASE("off-axis lattice count is (k-1)*f(k) and matches enumeration") {
  for (std::uint64_t k = 2; k <= 8; ++k)
    for (std::int64_t a = 1; a <= 5; ++a)
      for (std::int64_t b = 1; b <= 5; ++b) {
        if (std::gcd(a, b) != 1) continue;
        const auto inst = build_instance(a, b, k);
        const auto count = gplab::lattice_count_on_theorem_gap(inst);
        REQUIRE(count == static_cast<std::int64_t>((k - 1) * inst.fk));
        REQUIRE(count + 1 ==
                static_cast<std::int64_t>(gplab::lattice_points_on(inst.gap()).size()));
      }
}

TEST_CASE("count_case1 examples") {
  const SieveTable t = SieveTable::build(1'000);

  const auto r = gplab::count_case1(build_instance(1, 1, 2), t);
  CHECK(r.lo == 8);
  CHECK(r.hi == 32);
  CHECK(r.count == 3);  // 13, 17, 29
  CHECK(r.total_primes_in_interval == 7);
  CHECK(r.needed_2x == 1);
  CHECK(r.pass);

  const auto r2 = gplab::count_case1(build_instance(1, 2, 2), t);
  CHECK(r2.lo == 20);
  CHECK(r2.hi == 80);
  CHECK(r2.count == 6);  // 29, 37, 41, 53, 61, 73
  CHECK(r2.pass);

  CHECK_THROWS_AS(gplab::count_case1(build_instance(1, 0, 2), t), std::invalid_argument);
  const SieveTable tiny = SieveTable::build(16);
  CHECK_THROWS_AS(gplab::count_case1(build_instance(1, 1, 2), tiny), std::out_of_range);
}

TEST_CASE("count_case1 agrees with the disk-scan oracle") {
  const SieveTable t = SieveTable::build(100'000);
  for (std::uint64_t k = 2; k <= 6; ++k)
    for (std::int64_t a = 1; a <= 4; ++a)
      for (std::int64_t b = 1; b <= 4; ++b) {
        if (std::gcd(a, b) != 1) continue;
        const auto r = gplab::count_case1(build_instance(a, b, k), t);
        if (r.hi > 100'000) continue;
        REQUIRE(r.count == disk_scan_distinct_norms(r.lo, r.hi));
      }
}

TEST_CASE("count_case2 examples") {
  const SieveTable t = SieveTable::build(1'000);

  const auto r = gplab::count_case2(build_axis_instance(1, 2), t);
  CHECK(r.lo == 2);
  CHECK(r.hi == 4);
  CHECK(r.count == 1);  // {3}
  CHECK(r.pass);

  // Probing z1 = 2 with k = 10 (below f(10) = 4): the bound fails strictly.
  TheoremInstance probe = build_axis_instance(1, 10);
  probe.z = {2, 0};
  const auto r2 = gplab::count_case2(probe, t);
  CHECK(r2.count == 4);  // {3, 7, 11, 19}
  CHECK(r2.needed_2x == 9);
  CHECK_FALSE(r2.pass);

  const auto r3 = gplab::count_case2(build_axis_instance(1, 10), t);
  CHECK(r3.lo == 4);
  CHECK(r3.hi == 40);
  CHECK(r3.count == 5);  // {7, 11, 19, 23, 31}
  CHECK(r3.pass);

  CHECK_THROWS_AS(gplab::count_case2(build_instance(1, 1, 2), t), std::invalid_argument);
}

TEST_CASE("axis multipliers relax the strict gcd hypothesis") {
  const auto inst = build_axis_instance(3, 2);
  CHECK(inst.z == gplab::GaussianInt{6, 0});
  CHECK_FALSE(inst.strict_gcd());
  CHECK(build_axis_instance(1, 2).strict_gcd());
  CHECK_THROWS_AS(build_axis_instance(0, 2), std::invalid_argument);
}

TEST_CASE("on-segment census") {
  const auto off_axis = gplab::on_segment_census(build_instance(1, 1, 2));
  CHECK(off_axis.points == 3);  // (2,2), (3,3), (4,4)
  CHECK(off_axis.gaussian_primes == 0);

  const auto axis = gplab::on_segment_census(build_instance(1, 0, 2));
  CHECK(axis.points == 3);  // (2,0), (3,0), (4,0)
  CHECK(axis.gaussian_primes == 1);
  REQUIRE(axis.witnesses.size() == 1);
  CHECK(axis.witnesses[0] == gplab::GaussianInt{3, 0});
}

TEST_CASE("desk-scale norm-interval sweep has no counterexamples") {
  gplab::SweepConfig cfg;
  cfg.k_lo = 2;
  cfg.k_hi = 5;
  cfg.generator_bound = 4;
  const SieveTable t = SieveTable::build(gplab::required_sieve_limit(cfg));
  const auto report = gplab::sweep(cfg, t);
  CHECK(report.instances > 0);
  CHECK(report.failures == 0);
  CHECK(report.errors == 0);
  CHECK(report.counterexamples.empty());
  for (const auto& r : report.records) REQUIRE(2 * r.count >= r.needed_2x);
}

TEST_CASE("empty k range yields an empty report") {
  gplab::SweepConfig cfg;
  cfg.k_lo = 5;
  cfg.k_hi = 4;
  const SieveTable t = SieveTable::build(100);
  const auto report = gplab::sweep(cfg, t);
  CHECK(report.instances == 0);
  CHECK(report.records.empty());
}

TEST_CASE("sweep is deterministic across parallelism degrees") {
  gplab::SweepConfig cfg;
  cfg.k_lo = 2;
  cfg.k_hi = 6;
  cfg.generator_bound = 5;
  const SieveTable t = SieveTable::build(gplab::required_sieve_limit(cfg));

  gplab::ReportOptions opts;
  opts.deterministic = true;
  opts.format = gplab::OutputFormat::Json;

  std::string first;
  for (unsigned workers : {1u, 4u, 7u}) {
    cfg.parallelism = workers;
    std::ostringstream out;
    gplab::write_report(out, gplab::sweep(cfg, t), opts);
    if (first.empty())
      first = out.str();
    else
      REQUIRE(out.str() == first);
  }
}

TEST_CASE("undersized sieve is recorded per instance, not thrown") {
  gplab::SweepConfig cfg;
  cfg.k_lo = 2;
  cfg.k_hi = 4;
  cfg.generator_bound = 3;
  const SieveTable t = SieveTable::build(200);  // too small for the larger k
  const auto report = gplab::sweep(cfg, t);
  CHECK(report.errors > 0);
  CHECK(report.instances == report.records.size());
  bool saw_error = false;
  for (const auto& r : report.records)
    if (!r.error.empty()) {
      saw_error = true;
      CHECK(r.count == 0);
    }
  CHECK(saw_error);
}
