#pragma once

// Beatty sequences B(alpha, beta) = { floor(n alpha + beta) : n >= 1 } for
// alpha >= 1: elements, membership, least primes, prime counts, the
// chi_delta membership criterion, rational residue decompositions and the
// complementary-sequence partition.

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "beattylab/real_spec.hpp"
#include "beattylab/record.hpp"

namespace beattylab::seq {

// floor(n alpha + beta) for many n. A long double evaluation with a
// rigorous error bound answers whenever it certifies the floor; otherwise
// (near integers, or for interval inputs that cannot certify) the exact
// path decides.
class FloorEvaluator {
public:
  explicit FloorEvaluator(reals::BeattyParams params);

  std::int64_t operator()(std::uint64_t n) const;
  mpz_class exact(const mpz_class& n) const;
  const reals::BeattyParams& params() const { return params_; }

private:
  reals::BeattyParams params_;
  long double a_ = 0, b_ = 0;     // approximations of alpha, beta
  long double ea_ = 0, eb_ = 0;   // their absolute errors, rounded up
  bool rational_ = false;         // alpha, beta rational with small terms
  __int128 an_ = 0, ad_ = 1, bn_ = 0, bd_ = 1;
};

/// PreconditionViolated unless alpha >= 1.
void require_alpha_at_least_one(const reals::BeattyParams& params);

std::int64_t element(std::uint64_t n, const reals::BeattyParams& params);

/// The n >= 1 with floor(n alpha + beta) = m, if any.
std::optional<std::uint64_t> member_index(std::uint64_t m, const reals::BeattyParams& params);
bool is_member(std::uint64_t m, const reals::BeattyParams& params);

struct LeastPrimeResult {
  std::optional<std::uint64_t> prime;
  std::optional<std::uint64_t> index_n;
  std::uint64_t scanned_up_to = 0;
};

LeastPrimeResult least_prime(const reals::BeattyParams& params, std::uint64_t limit);

struct PrimeCount {
  std::uint64_t count = 0; // prime members <= N
  std::uint64_t pi = 0;    // pi(N)
  double density_ratio = 0.0; // alpha * count / pi(N)
};

PrimeCount prime_count(const reals::BeattyParams& params, std::uint64_t N);

enum class BridgeForm { minus, plus };

/// For every integer n in (alpha + beta - 1, N] compares
/// chi_delta(n a -/+ b) = 1 with n in B(alpha, beta), where a = 1/alpha,
/// b = (2 beta - 1)/(2 alpha), delta = 1/(2 alpha). lhs counts mismatches.
VerificationRecord chi_membership_bridge(const reals::BeattyParams& params, std::uint64_t N,
                                         BridgeForm form = BridgeForm::minus);

struct ResidueClass {
  std::int64_t b = 0;      // n = b (mod q)
  std::int64_t offset = 0; // floor(a b / q + beta), the least element of the class
  std::int64_t gcd_with_modulus = 0;
  bool is_prime_class = false;  // gcd(offset, a) = 1
  bool offset_is_prime = false;
  bool contains_prime = false;
};

// B(a/q, beta) = disjoint union over b = 1..q of offset_b + a N_0.
struct ResidueClassDecomposition {
  std::int64_t modulus = 0; // a
  std::int64_t q = 0;
  std::vector<ResidueClass> classes;
  std::int64_t inverse_b = 0; // a^-1 mod q
  bool any_prime_class = false;
  bool contains_prime = false;

  /// Members <= limit, ascending.
  std::vector<std::int64_t> materialize(std::int64_t limit) const;
};

/// NotCoprime unless gcd(a, q) = 1; PreconditionViolated unless q >= 2 and
/// a > q.
ResidueClassDecomposition rational_decompose(std::int64_t a, std::int64_t q, const reals::RealSpec& beta);

/// alpha' with 1/alpha + 1/alpha' = 1.
reals::RealSpec complementary(const reals::RealSpec& alpha);

/// B(alpha, 0) and B(alpha', 0) cover 1..N exactly once; lhs counts the
/// integers covered zero or two times.
VerificationRecord rayleigh_partition_check(const reals::RealSpec& alpha, std::uint64_t N);

} // namespace beattylab::seq
