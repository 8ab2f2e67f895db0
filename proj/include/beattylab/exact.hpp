#pragma once

// Exact values of the form  c_0 + c_1 sqrt(d_1) + ... + c_k sqrt(d_k)
// with rational c_i and distinct square-free radicands d_i > 1.
//
// Square roots of distinct square-free integers are linearly independent
// over Q, so such a value is zero iff it has no terms. Every nonzero value
// therefore has a sign that a sufficiently tight rational enclosure
// certifies; sign() refines until it does. Floors, comparisons and
// fractional-part tests all reduce to sign().

#include <compare>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace beattylab::reals {

// Closed rational interval [lo, hi].
struct Interval {
  mpq_class lo;
  mpq_class hi;

  Interval operator+(const Interval& o) const { return {lo + o.lo, hi + o.hi}; }
  Interval operator-(const Interval& o) const { return {lo - o.hi, hi - o.lo}; }
  Interval scaled(const mpq_class& c) const;
  mpq_class width() const { return hi - lo; }
  bool contains(const mpq_class& x) const { return lo <= x && x <= hi; }
};

/// Enclosure of sqrt(d) with width 2^-bits.
Interval sqrt_enclosure(const mpz_class& d, unsigned bits);

/// Splits d = s^2 * r with r square-free. Radicands beyond 10^24 are
/// rejected: square-freeness is certified by trial division to 10^8.
void square_free_split(const mpz_class& d, mpz_class& s, mpz_class& r);

class ExactValue {
public:
  struct Term {
    mpz_class radicand; // 1 for the rational part
    mpq_class coeff;
  };

  ExactValue() = default;
  ExactValue(const mpq_class& q);
  ExactValue(long v) : ExactValue(mpq_class(v)) {}
  ExactValue(int v) : ExactValue(mpq_class(v)) {}

  /// c * sqrt(d) for d >= 0.
  static ExactValue sqrt_of(const mpz_class& d, const mpq_class& c = 1);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].radicand == 1); }
  mpq_class rational_part() const;
  /// Valid only when is_rational().
  mpq_class as_rational() const;

  ExactValue operator-() const;
  ExactValue operator+(const ExactValue& o) const;
  ExactValue operator-(const ExactValue& o) const;
  ExactValue operator*(const ExactValue& o) const;
  /// Defined for values with at most one irrational radicand.
  ExactValue reciprocal() const;
  ExactValue operator/(const ExactValue& o) const { return *this * o.reciprocal(); }

  bool operator==(const ExactValue& o) const { return sign_of_difference(o) == 0; }
  std::strong_ordering operator<=>(const ExactValue& o) const;

  int sign() const;
  mpz_class floor() const;
  mpz_class ceil() const;
  Interval enclose(unsigned bits) const;
  double to_double() const;
  long double to_long_double() const;

  std::string debug_string() const;

private:
  int sign_of_difference(const ExactValue& o) const { return (*this - o).sign(); }
  void add_term(const mpz_class& radicand, const mpq_class& coeff);
  void normalize();

  std::vector<Term> terms_; // sorted by radicand, no zero coefficients
};

/// frac-test on the circle: does x mod 1 lie in the half-open arc
/// (lo, hi] mod 1? Requires 0 <= hi - lo <= 1.
bool fractional_in(const ExactValue& x, const ExactValue& lo, const ExactValue& hi);

} // namespace beattylab::reals
