#include "gplab/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace gplab {

namespace {

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  const __int128 p = static_cast<__int128>(x) * y;
  if (p > std::numeric_limits<std::int64_t>::max())
    throw std::overflow_error("theorem gap coordinate overflow");
  return static_cast<std::int64_t>(p);
}

VerificationRecord base_record(const TheoremInstance& inst) {
  VerificationRecord r;
  r.k = inst.k;
  r.a = inst.a;
  r.b = inst.b;
  r.fk = inst.fk;
  r.z1 = inst.z.a;
  r.z2 = inst.z.b;
  r.mode = inst.mode;
  r.convention = inst.convention;
  r.needed_2x = inst.k - 1;
  try {
    r.lattice_point_count = lattice_count_on_theorem_gap(inst);
  } catch (const std::overflow_error&) {
    r.lattice_point_count = 0;
  }
  return r;
}

}  // namespace

std::string to_string(VerifyMode m) {
  return m == VerifyMode::NormInterval ? "norm-interval" : "on-segment";
}

VerifyMode mode_from_string(const std::string& s) {
  if (s == "norm-interval") return VerifyMode::NormInterval;
  if (s == "on-segment") return VerifyMode::OnSegment;
  throw std::invalid_argument("unknown mode: " + s);
}

Gap TheoremInstance::gap() const {
  const auto k_signed = static_cast<std::int64_t>(k);
  return Gap(z, {checked_mul(z.a, k_signed), checked_mul(z.b, k_signed)});
}

TheoremInstance build_instance(std::int64_t a, std::int64_t b, std::uint64_t k,
                               VerifyMode mode, Convention conv) {
  if (k < 2) throw std::invalid_argument("build_instance: k must be >= 2");
  if (a < 0 || b < 0)
    throw std::invalid_argument("build_instance: generator must be nonnegative");
  if (a == 0 && b == 0)
    throw std::invalid_argument("build_instance: generator must be nonzero");
  if (std::gcd(a, b) != 1)
    throw std::invalid_argument("build_instance: generator must be coprime");
  TheoremInstance inst;
  inst.k = k;
  inst.a = a;
  inst.b = b;
  inst.fk = f_threshold(k);
  inst.axis_multiplier = 1;
  const auto f = static_cast<std::int64_t>(inst.fk);
  inst.z = {checked_mul(a, f), checked_mul(b, f)};
  inst.mode = mode;
  inst.convention = conv;
  return inst;
}

TheoremInstance build_axis_instance(std::uint64_t m, std::uint64_t k,
                                    Convention conv) {
  if (m < 1) throw std::invalid_argument("build_axis_instance: multiplier must be >= 1");
  TheoremInstance inst = build_instance(1, 0, k, VerifyMode::NormInterval, conv);
  inst.axis_multiplier = m;
  inst.z.a = checked_mul(inst.z.a, static_cast<std::int64_t>(m));
  return inst;
}

std::int64_t lattice_count_on_theorem_gap(const TheoremInstance& inst) {
  return inst.gap().difference_gcd();
}

VerificationRecord count_case1(const TheoremInstance& inst, const SieveTable& t) {
  if (inst.is_axis())
    throw std::invalid_argument("count_case1: requires an off-axis instance");
  VerificationRecord r = base_record(inst);
  const auto [lo, hi] = norm_interval(inst.gap());
  r.lo = lo;
  r.hi = hi;
  if (static_cast<std::uint64_t>(hi) > t.limit())
    throw std::out_of_range("sieve-too-small");
  const auto ulo = static_cast<std::uint64_t>(lo);
  const auto uhi = static_cast<std::uint64_t>(hi);
  r.count = t.prime_count_mod4(uhi - 1, 1) - t.prime_count_mod4(ulo, 1);
  r.total_primes_in_interval = t.prime_count(uhi - 1) - t.prime_count(ulo);
  r.pass = 2 * r.count >= r.needed_2x;
  return r;
}

VerificationRecord count_case2(const TheoremInstance& inst, const SieveTable& t) {
  if (!inst.is_axis())
    throw std::invalid_argument("count_case2: requires an axis instance");
  VerificationRecord r = base_record(inst);
  const std::int64_t z1 = inst.z.a != 0 ? inst.z.a : inst.z.b;
  const std::int64_t kz1 = checked_mul(z1, static_cast<std::int64_t>(inst.k));
  r.lo = z1;
  r.hi = kz1;
  if (static_cast<std::uint64_t>(kz1) > t.limit())
    throw std::out_of_range("sieve-too-small");
  const auto lo = static_cast<std::uint64_t>(z1);
  const auto hi = static_cast<std::uint64_t>(kz1);
  // Closed interval [z1, k*z1].
  r.count = t.prime_count_mod4(hi, 3) - t.prime_count_mod4(lo - 1, 3);
  r.total_primes_in_interval = t.prime_count(hi) - t.prime_count(lo - 1);
  r.pass = 2 * r.count >= r.needed_2x;
  return r;
}

SegmentCensus on_segment_census(const TheoremInstance& inst) {
  SegmentCensus census;
  for (const GaussianInt& p : lattice_points_on(inst.gap())) {
    ++census.points;
    if (is_gaussian_prime(p, inst.convention)) {
      ++census.gaussian_primes;
      census.witnesses.push_back(p);
    }
  }
  return census;
}

std::uint64_t required_sieve_limit(const SweepConfig& cfg) {
  if (cfg.k_hi < cfg.k_lo) return 2;
  const std::uint64_t f = f_threshold(cfg.k_hi);
  __int128 need = 2;
  if (!cfg.axis_only) {
    std::uint64_t max_norm = 1;
    for (std::uint64_t a = 0; a <= cfg.generator_bound; ++a)
      for (std::uint64_t b = 0; b <= cfg.generator_bound; ++b)
        if ((a | b) != 0 && std::gcd(a, b) == 1)
          max_norm = std::max(max_norm, a * a + b * b);
    need = static_cast<__int128>(cfg.k_hi) * cfg.k_hi * f * f * max_norm;
  }
  const __int128 axis_need = static_cast<__int128>(cfg.k_hi) * f *
                             std::max<std::uint64_t>(cfg.axis_multiplier_max, 1);
  need = std::max(need, axis_need);
  if (need > std::numeric_limits<std::int64_t>::max())
    throw std::overflow_error("required sieve limit overflows");
  return static_cast<std::uint64_t>(need);
}

SweepReport sweep(const SweepConfig& cfg, const SieveTable& t) {
  const auto start_time = std::chrono::steady_clock::now();

  std::vector<TheoremInstance> instances;
  for (std::uint64_t k = cfg.k_lo; k <= cfg.k_hi && cfg.k_hi >= cfg.k_lo; ++k) {
    if (cfg.axis_only) {
      for (std::uint64_t m = 1; m <= cfg.axis_multiplier_max; ++m)
        instances.push_back(build_axis_instance(m, k, cfg.convention));
      continue;
    }
    for (std::int64_t a = 0; a <= static_cast<std::int64_t>(cfg.generator_bound); ++a)
      for (std::int64_t b = 0; b <= static_cast<std::int64_t>(cfg.generator_bound); ++b) {
        if (a == 0 && b == 0) continue;
        if (std::gcd(a, b) != 1) continue;
        instances.push_back(build_instance(a, b, k, cfg.mode, cfg.convention));
      }
  }

  SweepReport report;
  report.records.resize(instances.size());

  const auto evaluate = [&](const TheoremInstance& inst) -> VerificationRecord {
    try {
      if (cfg.mode == VerifyMode::OnSegment) {
        VerificationRecord r = base_record(inst);
        if (!inst.is_axis()) {
          const auto [lo, hi] = norm_interval(inst.gap());
          r.lo = lo;
          r.hi = hi;
        } else {
          r.lo = inst.z.a != 0 ? inst.z.a : inst.z.b;
          r.hi = checked_mul(r.lo, static_cast<std::int64_t>(inst.k));
        }
        const SegmentCensus census = on_segment_census(inst);
        r.count = census.gaussian_primes;
        r.pass = 2 * r.count >= r.needed_2x;
        return r;
      }
      return inst.is_axis() ? count_case2(inst, t) : count_case1(inst, t);
    } catch (const std::exception& e) {
      VerificationRecord r = base_record(inst);
      r.error = e.what();
      return r;
    }
  };

  const unsigned workers = std::max(1u, cfg.parallelism);
  if (workers == 1 || instances.size() < 2) {
    for (std::size_t i = 0; i < instances.size(); ++i)
      report.records[i] = evaluate(instances[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < instances.size();
             i = next.fetch_add(1))
          report.records[i] = evaluate(instances[i]);
      });
    for (auto& th : pool) th.join();
  }

  report.instances = report.records.size();
  for (const VerificationRecord& r : report.records) {
    if (!r.error.empty()) {
      ++report.errors;
    } else if (!r.pass) {
      ++report.failures;
      report.counterexamples.push_back(r);
    }
  }
  report.elapsed_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start_time)
          .count());
  return report;
}

}  // namespace gplab
