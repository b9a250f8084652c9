#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace gplab {

/// Immutable primality table over [0, limit] with mod-4 cumulative
/// checkpoints every `stride` integers for O(stride/64) counting queries.
class SieveTable {
 public:
  static constexpr std::uint64_t kDefaultStride = 4096;
  static constexpr std::uint64_t kDefaultMemoryBudget = 1ull << 32;

  static SieveTable build(std::uint64_t limit,
                          std::uint64_t stride = kDefaultStride,
                          std::uint64_t memory_budget = kDefaultMemoryBudget);

  std::uint64_t limit() const { return limit_; }
  std::uint64_t stride() const { return stride_; }

  bool is_prime(std::uint64_t n) const;

  /// pi(x): primes <= x.
  std::uint64_t prime_count(std::uint64_t x) const;

  /// pi(x; 4, residue) for residue in {1, 3}.
  std::uint64_t prime_count_mod4(std::uint64_t x, int residue) const;

  /// Binary cache: little-endian header {magic "GPSV", version u32,
  /// limit u64} followed by the bitmap words.
  void save(const std::filesystem::path& file) const;
  static SieveTable load(const std::filesystem::path& file,
                         std::uint64_t stride = kDefaultStride);

 private:
  SieveTable() = default;
  void build_checkpoints();

  std::uint64_t limit_ = 0;
  std::uint64_t stride_ = kDefaultStride;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint64_t> cum_all_;
  std::vector<std::uint64_t> cum1_;
  std::vector<std::uint64_t> cum3_;
};

/// ceil(1.1 * ln(2.5 * k)) for k >= 2; near-integer boundaries are
/// resolved with extended-precision re-evaluation.
std::uint64_t f_threshold(std::uint64_t k);

struct BertrandCheck {
  std::uint64_t count = 0;
  std::uint64_t threshold = 0;
  bool pass = false;
};

/// pi(k*n) - pi(n) against the threshold k - 1.
BertrandCheck check_bertrand_general(const SieveTable& t, std::uint64_t n,
                                     std::uint64_t k);

struct BiasRow {
  std::uint64_t x = 0;
  std::uint64_t pi1 = 0;
  std::uint64_t pi3 = 0;
  std::int64_t delta = 0;  // pi3 - pi1
};

std::vector<BiasRow> bias_report(const SieveTable& t,
                                 const std::vector<std::uint64_t>& xs);

}  // namespace gplab
