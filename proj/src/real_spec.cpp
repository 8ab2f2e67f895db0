#include "beattylab/real_spec.hpp"

#include <algorithm>
#include <cmath>
#include <regex>

#include "beattylab/errors.hpp"

namespace beattylab::reals {

namespace {

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

mpz_class pow10(unsigned k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

mpq_class parse_rational(const std::string& s) {
  static const std::regex re(R"(-?\d+(/\d+)?)");
  if (!std::regex_match(s, re))
    fail(errc::parse_error, "bad rational '" + s + "'");
  mpq_class q(s);
  require(q.get_den() != 0, errc::parse_error, "zero denominator");
  q.canonicalize();
  return q;
}

mpq_class make_q(const mpz_class& num, const mpz_class& den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

constexpr unsigned bits_for_digits(unsigned digits) { return digits * 10 / 3 + 64; }

} // namespace

RealSpec RealSpec::rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return RealSpec(Rational{c});
}

RealSpec RealSpec::surd(const mpz_class& P, const mpz_class& D, const mpz_class& Q) {
  require(Q != 0, errc::precondition_violated, "surd denominator must be nonzero");
  require(D >= 0, errc::precondition_violated, "surd radicand must be non-negative");
  return from_exact(ExactValue(make_q(P, Q)) + ExactValue::sqrt_of(D, make_q(1, Q)));
}

RealSpec RealSpec::from_exact(const ExactValue& x) {
  if (x.is_rational())
    return rational(x.rational_part());
  const mpq_class r = x.rational_part();
  const ExactValue::Term* irr = nullptr;
  for (const auto& t : x.terms()) {
    if (t.radicand == 1)
      continue;
    require(irr == nullptr, errc::precondition_violated, "value has more than one radicand");
    irr = &t;
  }
  const mpq_class& c = irr->coeff;
  // smallest (P, D, Q) with value r + c sqrt(d0), integral, Q | D - P^2
  const mpz_class den_r = r.get_den();
  const mpz_class k0 = den_r / gcd(den_r, c.get_den());
  const mpz_class t = k0 * abs(c.get_num());
  const mpz_class Q0 = (c > 0 ? 1 : -1) * k0 * c.get_den();
  const mpq_class P0q = r * mpq_class(Q0);
  const mpz_class P0 = P0q.get_num();
  const mpz_class D0 = t * t * irr->radicand;
  const mpz_class m0 = abs(Q0) / gcd(Q0, D0 - P0 * P0);
  return RealSpec(QuadraticSurd{m0 * P0, m0 * m0 * D0, m0 * Q0});
}

RealSpec RealSpec::decimal(std::string_view digits, unsigned budget) {
  static const std::regex re(R"((-?)(\d+)(?:\.(\d+))?)");
  std::string text(digits);
  std::smatch m;
  if (!std::regex_match(text, m, re))
    fail(errc::parse_error, "bad decimal '" + text + "'");
  const bool negative = m[1].length() > 0;
  const std::string ipart = m[2];
  const std::string fpart = m[3].matched ? std::string(m[3]) : std::string();
  const unsigned k = std::min<unsigned>(budget, static_cast<unsigned>(fpart.size()));
  mpz_class scaled(ipart + fpart.substr(0, k));
  mpq_class t(scaled, pow10(k));
  t.canonicalize();
  mpq_class ulp(mpz_class(1), pow10(k));
  ulp.canonicalize();
  DecimalInterval d;
  if (negative) {
    d.lo = -t - ulp;
    d.hi = -t;
  } else {
    d.lo = t;
    d.hi = t + ulp;
  }
  d.digits = text;
  d.budget = budget;
  return RealSpec(std::move(d));
}

RealSpec RealSpec::interval(const mpq_class& lo, const mpq_class& hi) {
  require(lo < hi, errc::precondition_violated, "interval needs lo < hi");
  DecimalInterval d;
  d.lo = lo;
  d.hi = hi;
  d.lo.canonicalize();
  d.hi.canonicalize();
  return RealSpec(std::move(d));
}

RealSpec RealSpec::parse(std::string_view text_view) {
  const std::string text(text_view);
  static const std::regex rat_re(R"(rat:(-?\d+)/(\d+))");
  static const std::regex surd_re(R"(surd:\((-?\d+)\+sqrt\((\d+)\)\)/(-?\d+))");
  static const std::regex dec_re(R"(dec:(-?\d+(?:\.\d+)?)~(\d+))");
  static const std::regex iv_re(R"(dec:\[([-0-9/]+),([-0-9/]+)\])");
  std::smatch m;
  if (std::regex_match(text, m, rat_re)) {
    const mpz_class den(m[2].str());
    require(den != 0, errc::parse_error, "zero denominator");
    return rational(make_q(mpz_class(m[1].str()), den));
  }
  if (std::regex_match(text, m, surd_re)) {
    const mpz_class Q(m[3].str());
    require(Q != 0, errc::parse_error, "zero surd denominator");
    return surd(mpz_class(m[1].str()), mpz_class(m[2].str()), Q);
  }
  if (std::regex_match(text, m, dec_re))
    return decimal(m[1].str(), static_cast<unsigned>(std::stoul(m[2].str())));
  if (std::regex_match(text, m, iv_re)) {
    const mpq_class lo = parse_rational(m[1].str());
    const mpq_class hi = parse_rational(m[2].str());
    require(lo < hi, errc::parse_error, "interval needs lo < hi");
    return interval(lo, hi);
  }
  fail(errc::parse_error, "unrecognized real '" + text + "'");
}

std::string RealSpec::to_string() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rational>) {
          return "rat:" + v.value.get_num().get_str() + "/" + v.value.get_den().get_str();
        } else if constexpr (std::is_same_v<T, QuadraticSurd>) {
          return "surd:(" + v.P.get_str() + "+sqrt(" + v.D.get_str() + "))/" + v.Q.get_str();
        } else {
          if (!v.digits.empty())
            return "dec:" + v.digits + "~" + std::to_string(v.budget);
          return "dec:[" + v.lo.get_str() + "," + v.hi.get_str() + "]";
        }
      },
      value_);
}

std::optional<bool> RealSpec::is_irrational() const {
  if (is_rational())
    return false;
  if (is_surd())
    return true;
  return std::nullopt;
}

RealSpec::RealSpec(Variant v) : value_(std::move(v)) {
  if (const auto* r = std::get_if<Rational>(&value_))
    exact_ = ExactValue(r->value);
  else if (const auto* s = std::get_if<QuadraticSurd>(&value_))
    exact_ = ExactValue(make_q(s->P, s->Q)) + ExactValue::sqrt_of(s->D, make_q(1, s->Q));
}

const ExactValue& RealSpec::exact() const {
  if (!exact_)
    fail(errc::precondition_violated, "decimal interval has no exact value");
  return *exact_;
}

Interval RealSpec::enclose(unsigned bits) const {
  if (const auto* d = std::get_if<DecimalInterval>(&value_))
    return {d->lo, d->hi};
  return exact().enclose(bits);
}

double RealSpec::to_double() const {
  const Interval iv = enclose(96);
  return mpq_class((iv.lo + iv.hi) / 2).get_d();
}

long double RealSpec::to_long_double() const {
  if (is_exact())
    return exact().to_long_double();
  const Interval iv = enclose(96);
  const mpq_class mid = (iv.lo + iv.hi) / 2;
  const double hi = mid.get_d();
  return static_cast<long double>(hi) + static_cast<long double>(mpq_class(mid - mpq_class(hi)).get_d());
}

std::strong_ordering compare(const RealSpec& x, const RealSpec& y) {
  if (x.is_exact() && y.is_exact())
    return x.exact() <=> y.exact();
  const unsigned bits = bits_for_digits(default_guard_digits);
  const Interval a = x.enclose(bits);
  const Interval b = y.enclose(bits);
  if (a.hi < b.lo)
    return std::strong_ordering::less;
  if (a.lo > b.hi)
    return std::strong_ordering::greater;
  fail(errc::precision_exhausted, "enclosures of " + x.to_string() + " and " + y.to_string() + " overlap");
}

BeattyParams::BeattyParams(RealSpec alpha_, RealSpec beta_) : alpha(std::move(alpha_)), beta(std::move(beta_)) {
  require(compare(alpha, RealSpec::rational(0)) > 0, errc::precondition_violated, "alpha must be positive");
  const Interval b = beta.enclose(64);
  require(beta.is_exact() ? beta.exact().sign() >= 0 : b.lo >= 0, errc::precondition_violated,
          "beta must be non-negative");
}

Interval BeattyParams::B_enclosure(unsigned bits) const {
  const Interval b = beta.enclose(bits);
  const mpq_class one(1);
  return {std::max(one, b.lo), std::max(one, b.hi)};
}

double BeattyParams::B() const { return std::max(1.0, beta.to_double()); }

double BeattyParams::L_const() const { return std::log(2.0 * alpha.to_double() * B()); }

mpz_class floor_linear(const mpz_class& n, const BeattyParams& params) {
  if (params.exact())
    return (ExactValue(mpq_class(n)) * params.alpha.exact() + params.beta.exact()).floor();
  const unsigned bits = bits_for_digits(default_guard_digits);
  const Interval v = params.alpha.enclose(bits).scaled(mpq_class(n)) + params.beta.enclose(bits);
  mpz_class lo, hi;
  mpz_fdiv_q(lo.get_mpz_t(), v.lo.get_num_mpz_t(), v.lo.get_den_mpz_t());
  mpz_fdiv_q(hi.get_mpz_t(), v.hi.get_num_mpz_t(), v.hi.get_den_mpz_t());
  if (lo != hi)
    fail(errc::precision_exhausted, "enclosure of n*alpha+beta straddles an integer at n=" + n.get_str());
  return lo;
}

} // namespace beattylab::reals
