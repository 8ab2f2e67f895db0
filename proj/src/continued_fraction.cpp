#include "beattylab/continued_fraction.hpp"

#include <cmath>
#include <map>
#include <utility>

#include <mpfr.h>

#include "beattylab/errors.hpp"

namespace beattylab::cf {

using reals::Interval;
using reals::RealSpec;

namespace {

constexpr std::size_t period_search_cap = 10'000'000;

mpz_class floor_div(const mpq_class& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

std::vector<mpz_class> euclid(const mpq_class& value, std::size_t max_terms) {
  std::vector<mpz_class> out;
  mpz_class num = value.get_num(), den = value.get_den();
  while (den != 0 && out.size() < max_terms) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    out.push_back(a);
    mpz_class r = num - a * den;
    num = den;
    den = r;
  }
  return out;
}

CFExpansion expand_surd(const reals::QuadraticSurd& s, std::size_t max_terms) {
  // state (P, Q) stands for (P + sqrt D)/Q with Q | D - P^2
  const mpz_class& D = s.D;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), D.get_mpz_t());
  mpz_class P = s.P, Q = s.Q;
  std::map<std::pair<mpz_class, mpz_class>, std::size_t> seen;
  std::vector<mpz_class> terms;
  std::optional<std::size_t> loop_start;
  for (std::size_t i = 0; i < period_search_cap; ++i) {
    auto [it, fresh] = seen.emplace(std::make_pair(P, Q), i);
    if (!fresh) {
      loop_start = it->second;
      break;
    }
    mpz_class a;
    if (Q > 0) {
      mpz_class t = P + root;
      mpz_fdiv_q(a.get_mpz_t(), t.get_mpz_t(), Q.get_mpz_t());
    } else {
      // (P + sqrt D)/Q is never an integer, so floor = -(floor(x/|Q|) + 1)
      mpz_class t = P + root, aq = -Q;
      mpz_fdiv_q(a.get_mpz_t(), t.get_mpz_t(), aq.get_mpz_t());
      a = -a - 1;
    }
    terms.push_back(a);
    P = a * Q - P;
    Q = (D - P * P) / Q;
  }
  CFExpansion cf;
  if (!loop_start) {
    cf.quotients.assign(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(std::min(terms.size(), max_terms)));
    cf.certified_terms = terms.size();
    return cf;
  }
  Period per;
  per.preperiod.assign(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(*loop_start));
  per.repeat.assign(terms.begin() + static_cast<std::ptrdiff_t>(*loop_start), terms.end());
  return CFExpansion::from_period(std::move(per.preperiod), std::move(per.repeat), max_terms);
}

CFExpansion expand_interval(const Interval& start, std::size_t max_terms) {
  CFExpansion cf;
  Interval x = start;
  while (cf.quotients.size() < max_terms) {
    const mpz_class a = floor_div(x.lo);
    if (floor_div(x.hi) != a)
      break;
    cf.quotients.push_back(a);
    if (x.lo == mpq_class(a))
      break; // x may be exactly a, or the next quotient may be arbitrarily large
    Interval next{mpq_class(1) / (x.hi - a), mpq_class(1) / (x.lo - a)};
    x = std::move(next);
  }
  cf.certified_terms = cf.quotients.size();
  cf.precision_exhausted = cf.quotients.size() < max_terms;
  return cf;
}

struct Mpfr {
  mpfr_t v;
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v, prec); }
  ~Mpfr() { mpfr_clear(v); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
};

// L^16 alpha^2 evaluated on an endpoint with one rounding direction
void threshold_bound(Mpfr& out, const mpq_class& alpha, const mpq_class& B, mpfr_rnd_t rnd) {
  const mpfr_prec_t prec = mpfr_get_prec(out.v);
  Mpfr t(prec), a(prec);
  const mpq_class two_alpha_B = 2 * alpha * B;
  mpfr_set_q(t.v, two_alpha_B.get_mpq_t(), rnd);
  mpfr_log(t.v, t.v, rnd);
  mpfr_pow_ui(t.v, t.v, 16, rnd);
  mpfr_set_q(a.v, alpha.get_mpq_t(), rnd);
  mpfr_sqr(a.v, a.v, rnd);
  mpfr_mul(out.v, t.v, a.v, rnd);
}

} // namespace

mpz_class CFExpansion::quotient(std::size_t i) const {
  if (i < quotients.size())
    return quotients[i];
  if (period) {
    if (i < period->preperiod.size())
      return period->preperiod[i];
    return period->repeat[(i - period->preperiod.size()) % period->repeat.size()];
  }
  fail(errc::index_beyond_certified, "quotient index " + std::to_string(i) + " not certified");
}

CFExpansion CFExpansion::from_period(std::vector<mpz_class> preperiod, std::vector<mpz_class> repeat,
                                     std::size_t materialize) {
  require(!repeat.empty(), errc::precondition_violated, "period content must be nonempty");
  CFExpansion cf;
  cf.period = Period{std::move(preperiod), std::move(repeat)};
  cf.certified_terms = unbounded;
  for (std::size_t i = 0; i < materialize; ++i)
    cf.quotients.push_back(cf.quotient(i));
  return cf;
}

CFExpansion expand(const RealSpec& alpha, std::size_t max_terms) {
  require(compare(alpha, RealSpec::rational(0)) > 0, errc::precondition_violated, "alpha must be positive");
  if (const auto* r = std::get_if<reals::Rational>(&alpha.variant())) {
    CFExpansion cf;
    cf.quotients = euclid(r->value, max_terms);
    cf.certified_terms = cf.quotients.size();
    cf.finite = true;
    return cf;
  }
  if (const auto* s = std::get_if<reals::QuadraticSurd>(&alpha.variant()))
    return expand_surd(*s, max_terms);
  return expand_interval(alpha.enclose(), max_terms);
}

std::vector<Convergent> convergents(const CFExpansion& cf, std::size_t upto) {
  if (!cf.certified(upto))
    fail(errc::index_beyond_certified,
         "convergent " + std::to_string(upto) + " needs quotients beyond the " +
             std::to_string(cf.certified_terms) + " certified");
  std::vector<Convergent> out;
  out.reserve(upto + 2);
  out.push_back({-1, 1, 0});
  mpz_class p_prev = 1, q_prev = 0;
  mpz_class p = cf.quotient(0), q = 1;
  out.push_back({0, p, q});
  for (std::size_t n = 1; n <= upto; ++n) {
    const mpz_class a = cf.quotient(n);
    mpz_class p_next = a * p + p_prev;
    mpz_class q_next = a * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
    out.push_back({static_cast<long>(n), p, q});
  }
  return out;
}

MIndex find_m(const reals::BeattyParams& params, const CFExpansion& cf, unsigned guard_digits) {
  require(params.alpha.is_irrational() != std::optional<bool>(false), errc::precondition_violated,
          "find_m needs irrational alpha");
  unsigned bits = guard_digits * 10 / 3 + 64;
  for (int attempt = 0; attempt < 8; ++attempt, bits *= 2) {
    const Interval alpha = params.alpha.enclose(bits + 32);
    const Interval B = params.B_enclosure(bits + 32);
    require(alpha.lo > 0, errc::precision_exhausted, "alpha enclosure touches zero");
    Mpfr lo(bits), hi(bits);
    threshold_bound(lo, alpha.lo, B.lo, MPFR_RNDD);
    threshold_bound(hi, alpha.hi, B.hi, MPFR_RNDU);

    if (!cf.certified(0))
      fail(errc::expansion_too_short, "no certified quotients");
    mpz_class p_prev = 1;
    mpz_class p = cf.quotient(0);
    if (mpfr_cmp_z(hi.v, p.get_mpz_t()) < 0)
      fail(errc::threshold_below_first_numerator,
           "L^16 alpha^2 < p_0 = " + p.get_str() + "; no m satisfies p_m <= L^16 alpha^2");
    if (mpfr_cmp_z(lo.v, p.get_mpz_t()) < 0)
      continue; // p_0 inside the enclosure
    bool ambiguous = false;
    for (std::size_t n = 0;; ++n) {
      if (!cf.certified(n + 1))
        fail(errc::expansion_too_short, "expansion ends before p_{m+1} exceeds the threshold");
      mpz_class p_next = cf.quotient(n + 1) * p + p_prev;
      if (mpfr_cmp_z(hi.v, p_next.get_mpz_t()) < 0) {
        MIndex r;
        r.m = n;
        r.threshold = mpfr_get_d(lo.v, MPFR_RNDN);
        r.bits_used = bits;
        return r;
      }
      if (mpfr_cmp_z(lo.v, p_next.get_mpz_t()) < 0) {
        ambiguous = true;
        break;
      }
      p_prev = std::move(p);
      p = std::move(p_next);
    }
    if (!ambiguous)
      break;
  }
  fail(errc::precision_exhausted, "threshold enclosure keeps containing a numerator");
}

double log_of(const mpz_class& x) {
  require(x > 0, errc::precondition_violated, "log of non-positive integer");
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

GrowthRate log_growth_rate(const CFExpansion& cf) {
  if (!cf.period)
    fail(errc::not_periodic, "expansion has no detected period");
  // M = prod [[a, 1], [1, 0]] over one period
  mpz_class m00 = 1, m01 = 0, m10 = 0, m11 = 1;
  for (const auto& a : cf.period->repeat) {
    mpz_class n00 = m00 * a + m01, n10 = m10 * a + m11;
    m01 = m00;
    m11 = m10;
    m00 = std::move(n00);
    m10 = std::move(n10);
  }
  const std::size_t k = cf.period->repeat.size();
  const mpz_class trace = m00 + m11;
  const int det = (k % 2 == 0) ? 1 : -1;
  // lambda = (t + sqrt(t^2 - 4 det))/2 = t (1 + sqrt(1 - 4 det / t^2)) / 2
  const double log_t = log_of(trace);
  const double ratio = 4.0 * det * std::exp(-2.0 * log_t);
  GrowthRate g;
  g.per_period = log_t + std::log((1.0 + std::sqrt(1.0 - ratio)) / 2.0);
  g.period_length = k;
  g.per_term = g.per_period / static_cast<double>(k);
  return g;
}

} // namespace beattylab::cf
