#pragma once

// Exponential sums over prime powers, the four-way split of
// sum Lambda(n) e(a j n), the trigonometric sandwich of chi_delta, and
// numerical checks of the explicit exponential-sum inequalities.

#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "beattylab/real_spec.hpp"
#include "beattylab/record.hpp"

namespace beattylab::vaughan {

inline constexpr std::uint64_t desk_cap = 10000000; // largest N a check will sum to

using cplx = std::complex<double>;

/// frac(x n) for a fixed real x, exact when x is a small rational.
class Phase {
public:
  Phase(const reals::RealSpec& x, std::int64_t multiplier = 1);
  /// frac(x n) in [0, 1).
  long double at(std::uint64_t n) const;
  long double base() const { return frac_; }

private:
  long double frac_ = 0;
  bool rational_ = false;
  __int128 num_ = 0, den_ = 1; // frac(x) = num/den when rational
};

/// e(t) = exp(2 pi i t)
cplx unit(long double t);

struct ExpSumParams {
  reals::RealSpec frak_a;
  double frak_b = 0.0;
  double delta = 0.25;
  std::uint64_t N = 1000;
  std::int64_t a = 0;
  std::int64_t q = 1;
  double epsilon = 0.1;
  unsigned workers = 1;

  double scriptL() const; // log(N q/delta)
  /// PreconditionViolated unless gcd(a, q) = 1, q >= 1, |frak_a - a/q| < 1/q^2,
  /// 0 < delta < 1/2 (0 admitted when allow_zero_delta), 1 <= N <= desk_cap.
  void validate(bool allow_zero_delta = false) const;
  /// True when frak_a equals a/q exactly.
  bool exact_fraction() const;
  ParamMap describe() const;
};

/// The last convergent a/q of x with q <= q_max.
std::pair<std::int64_t, std::int64_t> approximation_for(const reals::RealSpec& x, std::int64_t q_max);

/// 1 iff theta mod 1, taken in (-1/2, 1/2], lies in (-delta, delta].
int chi_delta(double theta, double delta);

/// sum_{n <= N} Lambda(n) e(frak_a h n), compensated.
cplx exp_sum_lambda(const reals::RealSpec& frak_a, std::uint64_t N, std::int64_t h = 1);

/// |sum_{n <= N} Lambda(n) e(frak_a h n)| for h = 1..H, in order.
std::vector<double> exp_sum_moduli(const reals::RealSpec& frak_a, std::uint64_t N, std::int64_t H,
                                   unsigned workers = 1);

struct VaughanSplit {
  double u = 1.0;
  std::int64_t q = 1;
  cplx S1, S2, S3, S4;
  cplx direct;
  cplx combined() const { return S1 - S2 + S3 - S4; }
};

/// u defaults to min{N^(2/5) j^(-1/5), q, N/q}, clamped to at least 1, with
/// q from the last convergent of frak_a not exceeding sqrt N unless given.
VaughanSplit vaughan_split(const reals::RealSpec& frak_a, std::int64_t j, std::uint64_t N,
                           std::optional<double> u_override = std::nullopt,
                           std::optional<std::int64_t> q = std::nullopt);

/// |S1 - S2 + S3 - S4 - direct| against 1e-6 max(1, psi(N)).
VerificationRecord check_identity(const reals::RealSpec& frak_a, std::int64_t j, std::uint64_t N,
                                  std::optional<double> u_override = std::nullopt);

struct SandwichCoefficients {
  double delta = 0.0;
  std::int64_t L = 0;
  std::vector<cplx> upper; // c_l^+ for l = 1..L, c_{-l} = conj(c_l)
  std::vector<cplx> lower;
  double upper_constant = 0.0; // 2 delta + 1/(L + 1)
  double lower_constant = 0.0; // 2 delta - 1/(L + 1)

  double evaluate_upper(double y) const;
  double evaluate_lower(double y) const;
};

/// Selberg-Vaaler majorant and minorant of degree L for (-delta, delta].
SandwichCoefficients construct_sandwich(double delta, std::int64_t L);

/// Grid sandwich (10^4 points plus the endpoints and offsets +-1e-9) with
/// tolerance 1e-12, and the coefficient bound checked exactly.
std::pair<VerificationRecord, VerificationRecord> check_sandwich(const SandwichCoefficients& s,
                                                                 int grid_points = 10000);

/// The two sums of min{...}: shifted by beta, and the hyperbolic one.
std::pair<VerificationRecord, VerificationRecord> check_min_sums(double X, double Y, double beta,
                                                                 const ExpSumParams& params);

enum class CoefficientMode { unit_random, zero };

/// The single and bilinear sums with seeded unit-modulus coefficients.
std::pair<VerificationRecord, VerificationRecord> check_bilinear_sums(std::int64_t X, std::int64_t Y,
                                                                      const ExpSumParams& params,
                                                                      std::uint64_t coeff_seed,
                                                                      CoefficientMode mode = CoefficientMode::unit_random);

/// sum_{J <= j < J'} |sum Lambda(n) e(a j n)| against its block bound.
/// PreconditionViolated unless J <= J' <= H <= q <= N and J' < 2J.
VerificationRecord check_dyadic_block(std::int64_t J, std::int64_t Jprime, std::int64_t H,
                                      const ExpSumParams& params);

/// S(H) = sum_{h <= H} |sum Lambda(n) e(a h n)| against its bound.
VerificationRecord s_of_h(const ExpSumParams& params, std::int64_t H);

/// 2 sum_{l <= L} min{2 delta + 1/(L+1), 3/(2l)} |T(l)| against
/// 3 S(L)/L + 3 int_w^L S(u) u^-2 du, w = 3/(4 delta + 2/(L+1)).
VerificationRecord partial_summation_bound(const ExpSumParams& params, std::int64_t L);

/// |sum Lambda(n) (chi_delta(a n - b) - 2 delta)| against the main bound,
/// and against the trivial 3 c0 N.
std::pair<VerificationRecord, VerificationRecord> check_chi_sum(const ExpSumParams& params);

/// Natural log of the right side of the chi-sum bound.
double log_chi_sum_rhs(const ExpSumParams& params);

} // namespace beattylab::vaughan
