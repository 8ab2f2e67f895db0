#pragma once

// Sieves and the classical arithmetic functions: primes, von Mangoldt,
// Moebius, Piltz divisor functions, Chebyshev functions, Fibonacci numbers.
// All logarithms are natural.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace beattylab::arith {

inline constexpr std::size_t default_segment_size = std::size_t{1} << 20;

// Prime flags for the half-open range [lo, hi).
struct SieveSegment {
  std::uint64_t lo = 1;
  std::uint64_t hi = 1;
  std::vector<std::uint8_t> flags;

  bool is_prime(std::uint64_t n) const { return n >= lo && n < hi && flags[n - lo] != 0; }
  std::vector<std::uint64_t> primes() const;
};

struct ArithSummary {
  std::uint64_t N = 0;
  double psi = 0.0;
  double theta = 0.0;
  std::uint64_t pi_count = 0;
};

using Factorization = std::vector<std::pair<std::uint64_t, unsigned>>;

/// Primes p <= limit by a plain sieve of Eratosthenes; only meant for
/// base primes and small tables.
std::vector<std::uint64_t> small_primes(std::uint64_t limit);

/// Streams prime flags for [1, limit] segment by segment. Memory stays
/// O(segment_size) regardless of limit. Nothing is visited for limit < 2.
void for_each_segment(std::uint64_t limit, const std::function<void(const SieveSegment&)>& visit,
                      std::size_t segment_size = default_segment_size);

/// As for_each_segment, but stops as soon as `visit` returns false.
void scan_segments(std::uint64_t limit, const std::function<bool(const SieveSegment&)>& visit,
                   std::size_t segment_size = default_segment_size);

/// Materialized segment sequence covering [1, limit].
std::vector<SieveSegment> sieve_primes(std::uint64_t limit,
                                       std::size_t segment_size = default_segment_size);

/// Every prime <= limit, in order.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit,
                                        std::size_t segment_size = default_segment_size);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Trial-division factorization, primes ascending.
Factorization factorize(std::uint64_t n);

double von_mangoldt(std::uint64_t n);
int moebius(std::uint64_t n);
mpz_class divisor_k(std::uint64_t n, unsigned k);

/// Streams Lambda(n) for n in [1, limit]; `visit(lo, values)` receives
/// Lambda(lo + i) in values[i].
void for_each_lambda_segment(std::uint64_t limit,
                             const std::function<void(std::uint64_t, std::span<const double>)>& visit,
                             std::size_t segment_size = default_segment_size);

/// The prime powers n <= limit paired with Lambda(n) = log p, ascending.
std::vector<std::pair<std::uint64_t, double>> prime_power_table(std::uint64_t limit);

/// Evaluates a multiplicative function given on prime powers,
/// `local(p, e)`, over [1, limit] in segments.
void for_each_multiplicative(std::uint64_t limit,
                             const std::function<std::uint64_t(std::uint64_t, unsigned)>& local,
                             const std::function<void(std::uint64_t, std::span<const std::uint64_t>)>& visit,
                             std::size_t segment_size = default_segment_size);

/// Dense table of a multiplicative function on [0, limit] (index 0 unused).
std::vector<std::uint64_t> multiplicative_table(std::uint64_t limit,
                                                const std::function<std::uint64_t(std::uint64_t, unsigned)>& local);

std::vector<int> moebius_table(std::uint64_t limit);

/// d_k(p^e) = C(e + k - 1, k - 1).
std::uint64_t divisor_k_local(unsigned k, unsigned e);

ArithSummary chebyshev(std::uint64_t N);

mpz_class fibonacci(unsigned n);

} // namespace beattylab::arith
