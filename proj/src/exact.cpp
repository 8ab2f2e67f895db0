#include "beattylab/exact.hpp"

#include <algorithm>
#include <sstream>

#include "beattylab/errors.hpp"

namespace beattylab::reals {

namespace {

constexpr unsigned initial_bits = 64;
constexpr unsigned max_bits = 1u << 22;

mpq_class floor_q(const mpq_class& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return mpq_class(f);
}

} // namespace

Interval Interval::scaled(const mpq_class& c) const {
  if (c >= 0)
    return {lo * c, hi * c};
  return {hi * c, lo * c};
}

Interval sqrt_enclosure(const mpz_class& d, unsigned bits) {
  mpz_class scaled = d << (2 * bits);
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
  mpq_class lo(s, mpz_class(1) << bits);
  lo.canonicalize();
  if (s * s == scaled)
    return {lo, lo};
  mpq_class hi(s + 1, mpz_class(1) << bits);
  hi.canonicalize();
  return {lo, hi};
}

void square_free_split(const mpz_class& d, mpz_class& s, mpz_class& r) {
  require(d >= 0, errc::precondition_violated, "negative radicand");
  s = 1;
  r = d;
  if (d <= 1)
    return;
  require(d <= mpz_class("1000000000000000000000000"), errc::range_too_large,
          "radicand above 10^24 cannot be certified square-free");
  if (mpz_perfect_square_p(r.get_mpz_t())) {
    mpz_sqrt(s.get_mpz_t(), r.get_mpz_t());
    r = 1;
    return;
  }
  mpz_class rest = d;
  r = 1;
  for (unsigned long p = 2; p <= 100000000ul; p += (p == 2 ? 1 : 2)) {
    if (mpz_class(p) * p * p > rest)
      break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= p;
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i)
      s *= p;
    if (e % 2)
      r *= p;
  }
  // no prime factor of rest lies below its cube root, so rest is 1, a
  // prime, a product of two distinct primes, or a prime square
  if (rest > 1 && mpz_perfect_square_p(rest.get_mpz_t())) {
    mpz_class t;
    mpz_sqrt(t.get_mpz_t(), rest.get_mpz_t());
    s *= t;
  } else {
    r *= rest;
  }
}

ExactValue::ExactValue(const mpq_class& q) {
  if (q != 0) {
    terms_.push_back({mpz_class(1), q});
    terms_.back().coeff.canonicalize();
  }
}

ExactValue ExactValue::sqrt_of(const mpz_class& d, const mpq_class& c) {
  mpz_class s, r;
  square_free_split(d, s, r);
  ExactValue v;
  if (d == 0 || c == 0)
    return v;
  v.terms_.push_back({r, c * mpq_class(s)});
  v.terms_.back().coeff.canonicalize();
  v.normalize();
  return v;
}

mpq_class ExactValue::rational_part() const {
  if (!terms_.empty() && terms_[0].radicand == 1)
    return terms_[0].coeff;
  return 0;
}

mpq_class ExactValue::as_rational() const {
  require(is_rational(), errc::precondition_violated, "value is irrational");
  return rational_part();
}

void ExactValue::add_term(const mpz_class& radicand, const mpq_class& coeff) {
  terms_.push_back({radicand, coeff});
}

void ExactValue::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.radicand < b.radicand; });
  std::vector<Term> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().radicand == t.radicand)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(), [](const Term& t) { return t.coeff == 0; }),
               merged.end());
  terms_ = std::move(merged);
}

ExactValue ExactValue::operator-() const {
  ExactValue v = *this;
  for (auto& t : v.terms_)
    t.coeff = -t.coeff;
  return v;
}

ExactValue ExactValue::operator+(const ExactValue& o) const {
  ExactValue v = *this;
  for (const auto& t : o.terms_)
    v.add_term(t.radicand, t.coeff);
  v.normalize();
  return v;
}

ExactValue ExactValue::operator-(const ExactValue& o) const { return *this + (-o); }

ExactValue ExactValue::operator*(const ExactValue& o) const {
  ExactValue v;
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      // sqrt(d1) sqrt(d2) = g sqrt(d1 d2 / g^2), g = gcd(d1, d2)
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), a.radicand.get_mpz_t(), b.radicand.get_mpz_t());
      mpz_class rad = (a.radicand / g) * (b.radicand / g);
      v.add_term(rad, a.coeff * b.coeff * mpq_class(g));
    }
  }
  v.normalize();
  return v;
}

ExactValue ExactValue::reciprocal() const {
  require(!is_zero(), errc::precondition_violated, "reciprocal of zero");
  if (is_rational())
    return ExactValue(mpq_class(1) / as_rational());
  mpq_class a = rational_part();
  std::vector<const Term*> irr;
  for (const auto& t : terms_)
    if (t.radicand != 1)
      irr.push_back(&t);
  require(irr.size() == 1, errc::precondition_violated, "reciprocal needs a single radicand");
  const Term& t = *irr.front();
  // 1 / (a + b sqrt d) = (a - b sqrt d) / (a^2 - b^2 d)
  mpq_class norm = a * a - t.coeff * t.coeff * mpq_class(t.radicand);
  ExactValue conj(a / norm);
  conj.add_term(t.radicand, -t.coeff / norm);
  conj.normalize();
  return conj;
}

Interval ExactValue::enclose(unsigned bits) const {
  Interval acc{0, 0};
  for (const auto& t : terms_) {
    if (t.radicand == 1) {
      acc = acc + Interval{t.coeff, t.coeff};
    } else {
      acc = acc + sqrt_enclosure(t.radicand, bits).scaled(t.coeff);
    }
  }
  return acc;
}

int ExactValue::sign() const {
  if (terms_.empty())
    return 0;
  if (is_rational())
    return sgn(terms_[0].coeff);
  for (unsigned bits = initial_bits; bits <= max_bits; bits *= 2) {
    const Interval iv = enclose(bits);
    if (iv.lo > 0)
      return 1;
    if (iv.hi < 0)
      return -1;
  }
  fail(errc::precision_exhausted, "sign refinement did not converge");
}

std::strong_ordering ExactValue::operator<=>(const ExactValue& o) const {
  const int s = sign_of_difference(o);
  return s < 0 ? std::strong_ordering::less : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

mpz_class ExactValue::floor() const {
  if (is_rational()) {
    mpq_class q = rational_part();
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f;
  }
  // irrational, so never an integer: some enclosure lies inside one unit cell
  for (unsigned bits = initial_bits; bits <= max_bits; bits *= 2) {
    const Interval iv = enclose(bits);
    const mpq_class flo = floor_q(iv.lo);
    if (flo == floor_q(iv.hi))
      return flo.get_num();
  }
  fail(errc::precision_exhausted, "floor refinement did not converge");
}

mpz_class ExactValue::ceil() const { return -((-*this).floor()); }

double ExactValue::to_double() const {
  const Interval iv = enclose(80);
  return mpq_class((iv.lo + iv.hi) / 2).get_d();
}

long double ExactValue::to_long_double() const {
  const Interval iv = enclose(96);
  const mpq_class mid = (iv.lo + iv.hi) / 2;
  // split so the long double keeps its 64-bit mantissa
  const double hi = mid.get_d();
  const mpq_class rest = mid - mpq_class(hi);
  return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

std::string ExactValue::debug_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first)
      os << " + ";
    first = false;
    os << "(" << t.coeff.get_str() << ")";
    if (t.radicand != 1)
      os << "*sqrt(" << t.radicand.get_str() << ")";
  }
  return os.str();
}

bool fractional_in(const ExactValue& x, const ExactValue& lo, const ExactValue& hi) {
  const ExactValue width = hi - lo;
  require(width.sign() >= 0 && (width - ExactValue(1)).sign() <= 0, errc::precondition_violated,
          "arc length must lie in [0, 1]");
  // x in (lo, hi] mod 1  <=>  some integer k has 0 < x - lo - k <= width
  const ExactValue t = x - lo;
  const ExactValue f = t - ExactValue(mpq_class(t.floor()));
  if (f.is_zero())
    return (width - ExactValue(1)).sign() == 0;
  return (f - width).sign() <= 0;
}

} // namespace beattylab::reals
