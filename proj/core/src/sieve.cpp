#include "gplab/sieve.hpp"

#include <mpfr.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace gplab {

namespace {

constexpr std::uint64_t kMaskMod4Is1 = 0x2222222222222222ull;
constexpr std::uint64_t kMaskMod4Is3 = 0x8888888888888888ull;
constexpr char kMagic[4] = {'G', 'P', 'S', 'V'};
constexpr std::uint32_t kCacheVersion = 1;

// Bits of `word` (absolute positions base..base+63) at positions <= x.
std::uint64_t tail_mask(std::uint64_t x_in_word) {
  return x_in_word == 63 ? ~0ull : (1ull << (x_in_word + 1)) - 1;
}

}  // namespace

SieveTable SieveTable::build(std::uint64_t limit, std::uint64_t stride,
                             std::uint64_t memory_budget) {
  if (limit < 2) throw std::invalid_argument("build_sieve: limit must be >= 2");
  if (limit > memory_budget)
    throw std::invalid_argument("build_sieve: limit exceeds memory budget");
  if (stride == 0 || stride % 64 != 0)
    throw std::invalid_argument("build_sieve: stride must be a positive multiple of 64");

  SieveTable t;
  t.limit_ = limit;
  t.stride_ = stride;
  t.bits_.assign(limit / 64 + 1, 0);

  // Base primes up to sqrt(limit).
  const auto sqrt_limit = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  std::vector<std::uint8_t> small(sqrt_limit + 1, 1);
  for (std::uint64_t i = 2; i * i <= sqrt_limit; ++i)
    if (small[i])
      for (std::uint64_t j = i * i; j <= sqrt_limit; j += i) small[j] = 0;
  std::vector<std::uint64_t> base_primes;
  for (std::uint64_t i = 2; i <= sqrt_limit; ++i)
    if (small[i]) base_primes.push_back(i);

  // Cache-sized segments.
  constexpr std::uint64_t kSegment = 1u << 18;
  std::vector<std::uint8_t> seg(kSegment);
  for (std::uint64_t low = 0; low <= limit; low += kSegment) {
    const std::uint64_t high = std::min(low + kSegment - 1, limit);
    std::fill(seg.begin(), seg.begin() + (high - low + 1), 1);
    if (low == 0) seg[0] = seg[1] = 0;
    for (std::uint64_t p : base_primes) {
      if (p * p > high) break;
      std::uint64_t start = std::max(p * p, (low + p - 1) / p * p);
      for (std::uint64_t j = start; j <= high; j += p) seg[j - low] = 0;
    }
    for (std::uint64_t n = low; n <= high; ++n)
      if (seg[n - low]) t.bits_[n / 64] |= 1ull << (n % 64);
  }

  t.build_checkpoints();
  return t;
}

void SieveTable::build_checkpoints() {
  const std::uint64_t blocks = limit_ / stride_ + 1;
  cum_all_.assign(blocks + 1, 0);
  cum1_.assign(blocks + 1, 0);
  cum3_.assign(blocks + 1, 0);
  std::uint64_t all = 0, c1 = 0, c3 = 0;
  const std::uint64_t words_per_block = stride_ / 64;
  for (std::uint64_t blk = 0; blk < blocks; ++blk) {
    cum_all_[blk] = all;
    cum1_[blk] = c1;
    cum3_[blk] = c3;
    const std::uint64_t w0 = blk * words_per_block;
    const std::uint64_t w1 = std::min<std::uint64_t>(w0 + words_per_block, bits_.size());
    for (std::uint64_t w = w0; w < w1; ++w) {
      all += std::popcount(bits_[w]);
      c1 += std::popcount(bits_[w] & kMaskMod4Is1);
      c3 += std::popcount(bits_[w] & kMaskMod4Is3);
    }
  }
  cum_all_[blocks] = all;
  cum1_[blocks] = c1;
  cum3_[blocks] = c3;
}

bool SieveTable::is_prime(std::uint64_t n) const {
  if (n > limit_) throw std::out_of_range("is_prime: beyond sieve limit");
  return bits_[n / 64] >> (n % 64) & 1;
}

std::uint64_t SieveTable::prime_count(std::uint64_t x) const {
  if (x > limit_) throw std::out_of_range("pi: beyond sieve limit");
  const std::uint64_t blk = x / stride_;
  std::uint64_t count = cum_all_[blk];
  const std::uint64_t last = x / 64;
  for (std::uint64_t w = blk * (stride_ / 64); w < last; ++w)
    count += std::popcount(bits_[w]);
  count += std::popcount(bits_[last] & tail_mask(x % 64));
  return count;
}

std::uint64_t SieveTable::prime_count_mod4(std::uint64_t x, int residue) const {
  if (x > limit_) throw std::out_of_range("pi_mod4: beyond sieve limit");
  if (residue != 1 && residue != 3)
    throw std::invalid_argument("pi_mod4: residue must be 1 or 3");
  const std::uint64_t mask = residue == 1 ? kMaskMod4Is1 : kMaskMod4Is3;
  const std::uint64_t blk = x / stride_;
  std::uint64_t count = residue == 1 ? cum1_[blk] : cum3_[blk];
  const std::uint64_t last = x / 64;
  for (std::uint64_t w = blk * (stride_ / 64); w < last; ++w)
    count += std::popcount(bits_[w] & mask);
  count += std::popcount(bits_[last] & mask & tail_mask(x % 64));
  return count;
}

void SieveTable::save(const std::filesystem::path& file) const {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("sieve cache: cannot open for writing");
  out.write(kMagic, 4);
  out.write(reinterpret_cast<const char*>(&kCacheVersion), sizeof kCacheVersion);
  out.write(reinterpret_cast<const char*>(&limit_), sizeof limit_);
  out.write(reinterpret_cast<const char*>(bits_.data()),
            static_cast<std::streamsize>(bits_.size() * sizeof(std::uint64_t)));
  if (!out) throw std::runtime_error("sieve cache: write failed");
}

SieveTable SieveTable::load(const std::filesystem::path& file,
                            std::uint64_t stride) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("sieve cache: cannot open for reading");
  char magic[4];
  std::uint32_t version = 0;
  SieveTable t;
  in.read(magic, 4);
  in.read(reinterpret_cast<char*>(&version), sizeof version);
  in.read(reinterpret_cast<char*>(&t.limit_), sizeof t.limit_);
  if (!in || std::memcmp(magic, kMagic, 4) != 0)
    throw std::runtime_error("sieve cache: bad magic");
  if (version != kCacheVersion)
    throw std::runtime_error("sieve cache: unsupported version");
  if (t.limit_ < 2 || t.limit_ > kDefaultMemoryBudget)
    throw std::runtime_error("sieve cache: implausible limit");
  t.stride_ = stride;
  t.bits_.assign(t.limit_ / 64 + 1, 0);
  in.read(reinterpret_cast<char*>(t.bits_.data()),
          static_cast<std::streamsize>(t.bits_.size() * sizeof(std::uint64_t)));
  if (!in) throw std::runtime_error("sieve cache: truncated bitmap");
  t.build_checkpoints();
  return t;
}

std::uint64_t f_threshold(std::uint64_t k) {
  if (k < 2) throw std::invalid_argument("f_threshold: k must be >= 2");
  const double v = 1.1 * std::log(2.5 * static_cast<double>(k));
  const double nearest = std::round(v);
  if (std::fabs(v - nearest) > 1e-9)
    return static_cast<std::uint64_t>(std::ceil(v));

  // Boundary case: re-evaluate 1.1*ln(5k/2) = (11/10)*ln(5k/2) at 128 bits.
  mpfr_t x;
  mpfr_init2(x, 128);
  mpfr_set_ui(x, static_cast<unsigned long>(k), MPFR_RNDN);
  mpfr_mul_ui(x, x, 5, MPFR_RNDN);
  mpfr_div_ui(x, x, 2, MPFR_RNDN);
  mpfr_log(x, x, MPFR_RNDN);
  mpfr_mul_ui(x, x, 11, MPFR_RNDN);
  mpfr_div_ui(x, x, 10, MPFR_RNDN);
  mpfr_ceil(x, x);
  const auto result = mpfr_get_ui(x, MPFR_RNDN);
  mpfr_clear(x);
  return result;
}

BertrandCheck check_bertrand_general(const SieveTable& t, std::uint64_t n,
                                     std::uint64_t k) {
  if (k < 2) throw std::invalid_argument("check_bertrand_general: k must be >= 2");
  if (n < f_threshold(k))
    throw std::invalid_argument("check_bertrand_general: n below f(k)");
  if (k > t.limit() / n)
    throw std::out_of_range("check_bertrand_general: k*n beyond sieve limit");
  BertrandCheck r;
  r.count = t.prime_count(k * n) - t.prime_count(n);
  r.threshold = k - 1;
  r.pass = r.count >= r.threshold;
  return r;
}

std::vector<BiasRow> bias_report(const SieveTable& t,
                                 const std::vector<std::uint64_t>& xs) {
  std::vector<BiasRow> rows;
  rows.reserve(xs.size());
  for (std::uint64_t x : xs) {
    BiasRow row;
    row.x = x;
    row.pi1 = t.prime_count_mod4(x, 1);
    row.pi3 = t.prime_count_mod4(x, 3);
    row.delta = static_cast<std::int64_t>(row.pi3) - static_cast<std::int64_t>(row.pi1);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace gplab
