#pragma once

// Regular continued fractions: partial quotients, convergents p_n/q_n via
// p_{n+1} = a_{n+1} p_n + p_{n-1}, the index m with p_m <= L^16 alpha^2 <
// p_{m+1}, and the asymptotic growth of p_n for periodic expansions.

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "beattylab/real_spec.hpp"

namespace beattylab::cf {

inline constexpr std::size_t unbounded = std::numeric_limits<std::size_t>::max();

struct Period {
  std::vector<mpz_class> preperiod;
  std::vector<mpz_class> repeat;
};

struct CFExpansion {
  std::vector<mpz_class> quotients; // materialized prefix
  std::optional<Period> period;
  std::size_t certified_terms = 0;  // `unbounded` for periodic expansions
  bool finite = false;              // rational input, expansion terminated
  bool precision_exhausted = false; // interval input ran out before max_terms

  bool certified(std::size_t i) const { return i < certified_terms; }
  /// a_i; periodic expansions answer for any i.
  mpz_class quotient(std::size_t i) const;

  static CFExpansion from_period(std::vector<mpz_class> preperiod, std::vector<mpz_class> repeat,
                                 std::size_t materialize = 16);
};

struct Convergent {
  long n = -1;
  mpz_class p;
  mpz_class q;
};

/// Rationals expand by Euclid, surds exactly with their period detected,
/// decimal intervals until the enclosure stops certifying the next term
/// (partial result, precision_exhausted set).
CFExpansion expand(const reals::RealSpec& alpha, std::size_t max_terms);

/// Convergents n = -1, 0, ..., upto (upto + 2 entries).
/// IndexBeyondCertified when a_upto is not certified.
std::vector<Convergent> convergents(const CFExpansion& cf, std::size_t upto);

struct MIndex {
  std::size_t m = 0;
  double threshold = 0.0; // L^16 alpha^2, for display
  unsigned bits_used = 0;
};

/// The unique m with p_m <= L^16 alpha^2 < p_{m+1}, L = log(2 alpha B).
/// The threshold is enclosed with directed rounding; both comparisons are
/// certified strictly before m is returned.
MIndex find_m(const reals::BeattyParams& params, const CFExpansion& cf,
              unsigned guard_digits = reals::default_guard_digits);

struct GrowthRate {
  double per_term = 0.0;   // lim (log p_n)/n
  double per_period = 0.0; // log of the dominant eigenvalue of the period matrix
  std::size_t period_length = 0;
};

/// NotPeriodic when the expansion carries no period.
GrowthRate log_growth_rate(const CFExpansion& cf);

/// Natural log of a positive big integer.
double log_of(const mpz_class& x);

} // namespace beattylab::cf
