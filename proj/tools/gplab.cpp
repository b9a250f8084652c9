#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gplab/gaussian.hpp"
#include "gplab/lattice.hpp"
#include "gplab/report.hpp"
#include "gplab/sieve.hpp"
#include "gplab/verifier.hpp"

namespace {

struct KRange {
  std::uint64_t lo = 2;
  std::uint64_t hi = 2;
};

KRange parse_k_range(const std::string& s) {
  const auto dots = s.find("..");
  KRange r;
  if (dots == std::string::npos) {
    r.lo = r.hi = std::stoull(s);
  } else {
    r.lo = std::stoull(s.substr(0, dots));
    r.hi = std::stoull(s.substr(dots + 2));
  }
  if (r.lo < 2) throw CLI::ValidationError("--k", "k must be >= 2");
  return r;
}

/// Reuses a cached sieve from $GPLAB_SIEVE_CACHE when present, else builds
/// (and caches) one of exactly `limit`.
gplab::SieveTable obtain_sieve(std::uint64_t limit) {
  const char* cache_dir = std::getenv("GPLAB_SIEVE_CACHE");
  if (cache_dir == nullptr) return gplab::SieveTable::build(limit);
  namespace fs = std::filesystem;
  const fs::path file = fs::path(cache_dir) / ("sieve_" + std::to_string(limit) + ".gpsv");
  if (fs::exists(file)) {
    try {
      return gplab::SieveTable::load(file);
    } catch (const std::exception& e) {
      std::cerr << "warning: ignoring sieve cache " << file << ": " << e.what() << '\n';
    }
  }
  gplab::SieveTable t = gplab::SieveTable::build(limit);
  fs::create_directories(cache_dir);
  t.save(file);
  return t;
}

int cmd_isprime(std::int64_t a, std::int64_t b, const std::string& convention) {
  const gplab::Convention conv = gplab::convention_from_string(convention);
  const gplab::GaussianInt z{a, b};
  const bool prime = gplab::is_gaussian_prime(z, conv);
  std::cout << "a=" << a << " b=" << b << " norm=" << gplab::norm(z)
            << " convention=" << gplab::to_string(conv)
            << " is_prime=" << (prime ? "true" : "false") << '\n';
  return prime ? 0 : 1;
}

int cmd_segment(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                std::uint64_t max_points) {
  const gplab::Gap g({a, b}, {c, d});
  const auto coeff = gplab::line_coefficients(g);
  std::cout << "length=" << g.euclidean_length()
            << " squared_length=" << g.squared_length() << '\n';
  std::cout << "line: " << coeff.A << "*x + " << coeff.B << "*y + " << coeff.C
            << " = 0\n";
  std::cout << "visible=" << (gplab::are_mutually_visible(g.start(), g.end()) ? "true" : "false")
            << " closed_points=" << g.closed_count()
            << " interior_points=" << g.interior_count() << '\n';
  const auto points = gplab::lattice_points_on(g);
  std::cout << "points:";
  for (std::size_t i = 0; i < points.size() && i < max_points; ++i)
    std::cout << " (" << points[i].a << ',' << points[i].b << ')';
  if (points.size() > max_points) std::cout << " ... (" << points.size() << " total)";
  std::cout << '\n';
  try {
    const auto [lo, hi] = gplab::norm_interval(g);
    std::cout << "norm_interval=(" << lo << ',' << hi << ")\n";
  } catch (const std::exception&) {
    std::cout << "norm_interval=n/a (requires norm(start) < norm(end))\n";
  }
  return 0;
}

int cmd_verify(const gplab::SweepConfig& cfg, std::uint64_t sieve_limit,
               const gplab::ReportOptions& opts, const std::string& output_path) {
  std::uint64_t limit = sieve_limit != 0 ? sieve_limit : gplab::required_sieve_limit(cfg);
  limit = std::max<std::uint64_t>(limit, 2);
  const gplab::SieveTable table = obtain_sieve(limit);
  const gplab::SweepReport report = gplab::sweep(cfg, table);

  if (output_path.empty() || output_path == "-") {
    gplab::write_report(std::cout, report, opts);
  } else {
    std::ofstream out(output_path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open output file: " + output_path);
    gplab::write_report(out, report, opts);
    std::cout << "instances=" << report.instances
              << " failures=" << report.failures << " errors=" << report.errors
              << " sieve_limit=" << limit << '\n';
  }
  return report.failures == 0 ? 0 : 1;
}

int cmd_bias(std::uint64_t limit, const std::vector<std::uint64_t>& at,
             const std::string& format) {
  if (at.empty()) throw CLI::ValidationError("--at", "at least one checkpoint required");
  std::uint64_t need = std::max(*std::max_element(at.begin(), at.end()),
                                std::uint64_t{2});
  if (limit == 0) limit = need;
  if (need > limit) throw CLI::ValidationError("--at", "checkpoint beyond sieve limit");
  const gplab::SieveTable table = obtain_sieve(limit);
  gplab::write_bias_rows(std::cout, gplab::bias_report(table, at),
                         gplab::format_from_string(format));
  return 0;
}

int cmd_sieve_bench(std::uint64_t limit, std::uint64_t queries) {
  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  const gplab::SieveTable table = gplab::SieveTable::build(limit);
  const auto t1 = Clock::now();
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<std::uint64_t> dist(0, limit);
  std::uint64_t sink = 0;
  const auto t2 = Clock::now();
  for (std::uint64_t i = 0; i < queries; ++i) sink += table.prime_count(dist(rng));
  const auto t3 = Clock::now();
  const auto ms = [](auto a, auto b) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(b - a).count();
  };
  const double us_per_query =
      queries == 0 ? 0.0
                   : std::chrono::duration_cast<std::chrono::nanoseconds>(t3 - t2).count() /
                         1000.0 / static_cast<double>(queries);
  std::cout << "limit=" << limit << " build_ms=" << ms(t0, t1)
            << " pi(limit)=" << table.prime_count(limit)
            << " queries=" << queries << " us_per_query=" << us_per_query
            << " checksum=" << sink << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian prime toolkit: primality, lattice segments, and "
               "empirical checks of the generalized Bertrand inequality"};
  app.require_subcommand(1);

  // isprime
  std::int64_t pa = 0, pb = 0;
  std::string convention = "standard";
  auto* isprime = app.add_subcommand("isprime", "Test one Gaussian integer for primality");
  isprime->add_option("a", pa, "real part")->required();
  isprime->add_option("b", pb, "imaginary part")->required();
  isprime->add_option("--convention", convention, "standard|paper")
      ->check(CLI::IsMember({"standard", "paper"}));

  // segment
  std::int64_t sa = 0, sb = 0, sc = 0, sd = 0;
  std::uint64_t max_points = 32;
  auto* segment = app.add_subcommand("segment", "Describe the gap between two lattice points");
  segment->add_option("a", sa)->required();
  segment->add_option("b", sb)->required();
  segment->add_option("c", sc)->required();
  segment->add_option("d", sd)->required();
  segment->add_option("--max-points", max_points, "cap on listed lattice points");

  // verify
  std::string k_range = "2..8", mode = "norm-interval", format = "csv", output;
  std::uint64_t gen_bound = 8, sieve_limit = 0, axis_m_max = 1;
  unsigned parallelism = 1;
  bool deterministic = false, axis_only = false;
  auto* verify = app.add_subcommand("verify", "Sweep theorem instances and report counterexamples");
  verify->add_option("--k", k_range, "k range, e.g. 2..32");
  verify->add_option("--gen-bound", gen_bound, "max generator coordinate");
  verify->add_option("--mode", mode)->check(CLI::IsMember({"norm-interval", "on-segment"}));
  verify->add_option("--convention", convention)->check(CLI::IsMember({"standard", "paper"}));
  verify->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  verify->add_option("--output,-o", output, "output file ('-' for stdout)");
  verify->add_option("--parallelism", parallelism, "worker threads");
  verify->add_option("--sieve-limit", sieve_limit, "override auto-sized sieve limit");
  verify->add_flag("--deterministic", deterministic, "byte-identical output across runs");
  verify->add_flag("--axis-only", axis_only, "sweep axis instances z1 = m*f(k) only");
  verify->add_option("--axis-m-max", axis_m_max, "max axis multiplier m");

  // bias
  std::uint64_t bias_limit = 0;
  std::vector<std::uint64_t> bias_at;
  auto* bias = app.add_subcommand("bias", "Report pi(x;4,1) vs pi(x;4,3)");
  bias->add_option("--limit", bias_limit, "sieve limit (default: max checkpoint)");
  bias->add_option("--at", bias_at, "checkpoints x")->required();
  bias->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  // sieve-bench
  std::uint64_t bench_limit = 100'000'000, bench_queries = 1'000'000;
  auto* bench = app.add_subcommand("sieve-bench", "Time sieve construction and pi queries");
  bench->add_option("--limit", bench_limit);
  bench->add_option("--queries", bench_queries);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*isprime) return cmd_isprime(pa, pb, convention);
    if (*segment) return cmd_segment(sa, sb, sc, sd, max_points);
    if (*verify) {
      const KRange kr = parse_k_range(k_range);
      gplab::SweepConfig cfg;
      cfg.k_lo = kr.lo;
      cfg.k_hi = kr.hi;
      cfg.generator_bound = gen_bound;
      cfg.mode = gplab::mode_from_string(mode);
      cfg.convention = gplab::convention_from_string(convention);
      cfg.parallelism = parallelism;
      cfg.axis_only = axis_only;
      cfg.axis_multiplier_max = axis_m_max;
      gplab::ReportOptions opts;
      opts.format = gplab::format_from_string(format);
      opts.deterministic = deterministic;
      return cmd_verify(cfg, sieve_limit, opts, output);
    }
    if (*bias) return cmd_bias(bias_limit, bias_at, format);
    if (*bench) return cmd_sieve_bench(bench_limit, bench_queries);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
