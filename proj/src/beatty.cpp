#include "beattylab/beatty.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "beattylab/arith.hpp"
#include "beattylab/errors.hpp"

namespace beattylab::seq {

using reals::BeattyParams;
using reals::ExactValue;
using reals::Interval;
using reals::RealSpec;

namespace {

constexpr unsigned guard_bits = reals::default_guard_digits * 10 / 3 + 64;
constexpr long double two_m63 = 0x1p-63L;

// long double held exactly as the sum of two doubles
mpq_class to_mpq(long double x) {
  const double hi = static_cast<double>(x);
  const double lo = static_cast<double>(x - static_cast<long double>(hi));
  return mpq_class(hi) + mpq_class(lo);
}

long double to_ld(const mpq_class& q) {
  const double hi = q.get_d();
  const double lo = mpq_class(q - mpq_class(hi)).get_d();
  return static_cast<long double>(hi) + static_cast<long double>(lo);
}

// upper bound for a small non-negative rational as a long double
long double upper_ld(const mpq_class& q) { return to_ld(q) * (1.0L + 0x1p-40L) + 0x1p-16000L; }

void approximate(const Interval& iv, long double& approx, long double& err) {
  const mpq_class mid = (iv.lo + iv.hi) / 2;
  approx = to_ld(mid);
  mpq_class e = abs(to_mpq(approx) - mid) + (iv.hi - iv.lo) / 2;
  err = upper_ld(e);
}

bool small_rational(const RealSpec& x, __int128& num, __int128& den) {
  const auto* r = std::get_if<reals::Rational>(&x.variant());
  if (!r || !r->value.get_num().fits_slong_p() || !r->value.get_den().fits_slong_p())
    return false;
  num = r->value.get_num().get_si();
  den = r->value.get_den().get_si();
  return std::abs(static_cast<long>(num)) < (1L << 40) && den < (1L << 40);
}

__int128 floor_div(__int128 a, __int128 b) {
  __int128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

ParamMap beatty_params_map(const BeattyParams& p) {
  return {{"alpha", p.alpha.to_string()}, {"beta", p.beta.to_string()}};
}

// chi_delta(x) for x = n a -/+ b decided from rational enclosures; throws
// when the enclosure cannot separate x from the arc ends
bool chi_from_enclosures(const Interval& x, const Interval& delta) {
  const Interval t = x + delta;           // want 0 < t - k <= 2 delta
  const Interval w = delta.scaled(2);
  mpz_class k;
  mpz_cdiv_q(k.get_mpz_t(), t.lo.get_num_mpz_t(), t.lo.get_den_mpz_t());
  k -= 1; // t.lo - k in (0, 1]
  const mpq_class r_lo = t.lo - k, r_hi = t.hi - k;
  if (r_hi <= 1 && r_hi <= w.lo)
    return true;
  if (r_hi <= 1 && r_lo > w.hi)
    return false;
  fail(errc::precision_exhausted, "enclosure of n a - b grazes the arc ends");
}

} // namespace

FloorEvaluator::FloorEvaluator(BeattyParams params) : params_(std::move(params)) {
  rational_ = small_rational(params_.alpha, an_, ad_) && small_rational(params_.beta, bn_, bd_);
  approximate(params_.alpha.enclose(160), a_, ea_);
  approximate(params_.beta.enclose(160), b_, eb_);
}

mpz_class FloorEvaluator::exact(const mpz_class& n) const { return reals::floor_linear(n, params_); }

std::int64_t FloorEvaluator::operator()(std::uint64_t n) const {
  require(n < (std::uint64_t{1} << 40), errc::range_too_large, "element index beyond 2^40");
  if (rational_) {
    // floor((n an bd + bn ad) / (ad bd))
    return static_cast<std::int64_t>(
        floor_div(static_cast<__int128>(n) * an_ * bd_ + bn_ * ad_, ad_ * bd_));
  }
  const long double nn = static_cast<long double>(n);
  const long double y = nn * a_ + b_;
  const long double err = 2.0L * (nn * ea_ + eb_ + (std::fabs(nn * a_) + std::fabs(y) + 1.0L) * two_m63);
  const long double f = std::floor(y);
  const long double frac = y - f;
  if (frac > err && frac < 1.0L - err)
    return static_cast<std::int64_t>(f);
  const mpz_class e = exact(mpz_class(static_cast<unsigned long>(n)));
  require(e.fits_slong_p(), errc::range_too_large, "element beyond 64 bits");
  return e.get_si();
}

void require_alpha_at_least_one(const BeattyParams& params) {
  require(compare(params.alpha, RealSpec::rational(1)) >= 0, errc::precondition_violated,
          "Beatty sequences with alpha < 1 are not handled (every positive integer is hit)");
}

std::int64_t element(std::uint64_t n, const BeattyParams& params) {
  require(n >= 1, errc::precondition_violated, "element index must be >= 1");
  require_alpha_at_least_one(params);
  return FloorEvaluator(params)(n);
}

std::optional<std::uint64_t> member_index(std::uint64_t m, const BeattyParams& params) {
  require(m >= 1, errc::precondition_violated, "membership needs m >= 1");
  require_alpha_at_least_one(params);
  const FloorEvaluator f(params);
  if (params.exact()) {
    // n = ceil((m - beta)/alpha) is the only candidate
    const ExactValue t = (ExactValue(mpq_class(static_cast<unsigned long>(m))) - params.beta.exact()) /
                         params.alpha.exact();
    const mpz_class n = t.ceil();
    if (n < 1)
      return std::nullopt;
    if (f.exact(n) != m)
      return std::nullopt;
    return n.get_ui();
  }
  // interval inputs: the candidate lies within one of the double estimate
  const double est = std::ceil((static_cast<double>(m) - params.beta.to_double()) / params.alpha.to_double());
  for (double c = std::max(1.0, est - 1); c <= est + 1; c += 1) {
    const auto n = static_cast<std::uint64_t>(c);
    if (f(n) == static_cast<std::int64_t>(m))
      return n;
  }
  return std::nullopt;
}

bool is_member(std::uint64_t m, const BeattyParams& params) { return member_index(m, params).has_value(); }

LeastPrimeResult least_prime(const BeattyParams& params, std::uint64_t limit) {
  require(limit >= 2, errc::precondition_violated, "least_prime needs limit >= 2");
  require_alpha_at_least_one(params);
  const FloorEvaluator f(params);
  LeastPrimeResult res;
  res.scanned_up_to = limit;
  std::uint64_t n = 1;
  auto e = static_cast<std::uint64_t>(f(1));
  arith::scan_segments(limit, [&](const arith::SieveSegment& seg) {
    for (; e < seg.hi; e = static_cast<std::uint64_t>(f(++n))) {
      if (e >= seg.lo && seg.flags[e - seg.lo]) {
        res.prime = e;
        res.index_n = n;
        res.scanned_up_to = e;
        return false;
      }
    }
    return true;
  });
  return res;
}

PrimeCount prime_count(const BeattyParams& params, std::uint64_t N) {
  require(N >= 2, errc::precondition_violated, "prime_count needs N >= 2");
  require_alpha_at_least_one(params);
  const FloorEvaluator f(params);
  PrimeCount pc;
  std::uint64_t n = 1;
  auto e = static_cast<std::uint64_t>(f(1));
  arith::for_each_segment(N, [&](const arith::SieveSegment& seg) {
    for (std::uint64_t k = seg.lo; k < seg.hi; ++k)
      pc.pi += seg.flags[k - seg.lo];
    for (; e < seg.hi; e = static_cast<std::uint64_t>(f(++n)))
      if (e >= seg.lo && seg.flags[e - seg.lo])
        ++pc.count;
  });
  pc.density_ratio = pc.pi == 0 ? 0.0 : params.alpha.to_double() * static_cast<double>(pc.count) / static_cast<double>(pc.pi);
  return pc;
}

VerificationRecord chi_membership_bridge(const BeattyParams& params, std::uint64_t N, BridgeForm form) {
  require(compare(params.alpha, RealSpec::rational(1)) > 0, errc::precondition_violated, "bridge needs alpha > 1");
  require(params.alpha.is_irrational() != std::optional<bool>(false), errc::precondition_violated,
          "bridge needs irrational alpha");
  const FloorEvaluator f(params);
  const double sign_b = form == BridgeForm::minus ? -1.0 : 1.0;

  // n > alpha + beta - 1
  const Interval ab = params.alpha.enclose(guard_bits) + params.beta.enclose(guard_bits);
  mpz_class n_min;
  if (params.exact()) {
    n_min = (params.alpha.exact() + params.beta.exact() - ExactValue(1)).floor() + 1;
  } else {
    mpz_class lo_f, hi_f;
    const mpq_class lo = ab.lo - 1, hi = ab.hi - 1;
    mpz_fdiv_q(lo_f.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    mpz_fdiv_q(hi_f.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
    require(lo_f == hi_f, errc::precision_exhausted, "alpha + beta - 1 not separated from an integer");
    n_min = lo_f + 1;
  }
  const std::uint64_t first = n_min < 1 ? 1 : n_min.get_ui();

  // membership side: the floor sequence itself
  std::vector<std::uint8_t> member(N + 1, 0);
  for (std::uint64_t k = 1;; ++k) {
    const std::int64_t e = f(k);
    if (e > static_cast<std::int64_t>(N))
      break;
    if (e >= 0)
      member[static_cast<std::size_t>(e)] = 1;
  }
  std::uint64_t mismatches = 0, tested = 0;
  std::int64_t first_bad = -1;
  auto note = [&](std::uint64_t n, bool chi) {
    ++tested;
    if (chi != (member[n] != 0)) {
      ++mismatches;
      if (first_bad < 0)
        first_bad = static_cast<std::int64_t>(n);
    }
  };

  if (params.exact()) {
    const ExactValue a = params.alpha.exact().reciprocal();
    const ExactValue b = (params.beta.exact() * ExactValue(2) - ExactValue(1)) * a * ExactValue(mpq_class(1, 2));
    const ExactValue shift = sign_b < 0 ? -b : b;
    const ExactValue delta = a * ExactValue(mpq_class(1, 2));
    // long double screen with a rigorous error bound; the exact test
    // decides whenever the screen is within its error of an arc end
    long double la, ea, lb, eb, ld, ed;
    approximate(a.enclose(160), la, ea);
    approximate(shift.enclose(160), lb, eb);
    approximate(delta.enclose(160), ld, ed);
    for (std::uint64_t n = first; n <= N; ++n) {
      const long double nn = static_cast<long double>(n);
      const long double t = nn * la + lb + ld; // x + delta, want 0 < t - k <= 2 delta
      const long double err =
          4.0L * (nn * ea + eb + ed + (std::fabs(nn * la) + std::fabs(t) + 2.0L) * two_m63);
      const long double fr = t - std::floor(t);
      const long double w = 2.0L * ld;
      bool chi;
      if (fr > err && fr < w - err)
        chi = true;
      else if (fr > w + err && fr < 1.0L - err)
        chi = false;
      else
        chi = reals::fractional_in(ExactValue(mpq_class(static_cast<unsigned long>(n))) * a + shift, -delta, delta);
      note(n, chi);
    }
  } else {
    const Interval al = params.alpha.enclose(guard_bits), be = params.beta.enclose(guard_bits);
    const Interval a{mpq_class(1) / al.hi, mpq_class(1) / al.lo};
    const Interval b = (be.scaled(2) - Interval{1, 1}).scaled(mpq_class(1, 2));
    // b * a with b possibly straddling zero
    const mpq_class c[4] = {b.lo * a.lo, b.lo * a.hi, b.hi * a.lo, b.hi * a.hi};
    const Interval ba{*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
    const Interval delta = a.scaled(mpq_class(1, 2));
    for (std::uint64_t n = first; n <= N; ++n) {
      const Interval x = a.scaled(mpq_class(static_cast<unsigned long>(n))) + ba.scaled(mpq_class(sign_b > 0 ? 1 : -1));
      note(n, chi_from_enclosures(x, delta));
    }
  }

  ParamMap pm = beatty_params_map(params);
  pm["N"] = static_cast<std::int64_t>(N);
  pm["form"] = std::string(form == BridgeForm::minus ? "minus" : "plus");
  pm["tested"] = static_cast<std::int64_t>(tested);
  if (first_bad >= 0)
    pm["first_mismatch"] = first_bad;
  return VerificationRecord::make("beatty.chi_bridge", std::move(pm), static_cast<double>(mismatches), 0.0);
}

std::vector<std::int64_t> ResidueClassDecomposition::materialize(std::int64_t limit) const {
  std::vector<std::int64_t> out;
  for (const auto& c : classes)
    for (std::int64_t v = c.offset; v <= limit; v += modulus)
      out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

ResidueClassDecomposition rational_decompose(std::int64_t a, std::int64_t q, const RealSpec& beta) {
  require(q >= 2, errc::precondition_violated, "rational_decompose needs q >= 2");
  require(a > q, errc::precondition_violated, "rational_decompose needs a > q");
  if (std::gcd(a, q) != 1)
    fail(errc::not_coprime, "gcd(" + std::to_string(a) + ", " + std::to_string(q) + ") != 1");
  const BeattyParams params(RealSpec::rational(a, q), beta);
  ResidueClassDecomposition d;
  d.modulus = a;
  d.q = q;
  for (std::int64_t b = 1; b <= q; ++b) {
    ResidueClass c;
    c.b = b;
    const mpz_class off = reals::floor_linear(b, params);
    require(off.fits_slong_p(), errc::range_too_large, "offset beyond 64 bits");
    c.offset = off.get_si();
    c.gcd_with_modulus = std::gcd(c.offset, a);
    c.is_prime_class = c.gcd_with_modulus == 1;
    c.offset_is_prime = c.offset >= 2 && arith::is_prime(static_cast<std::uint64_t>(c.offset));
    // with gcd g > 1 the only possible prime in offset + a N_0 is g itself,
    // and g <= offset, so it is there only as the offset
    c.contains_prime = c.is_prime_class || c.offset_is_prime;
    d.any_prime_class = d.any_prime_class || c.is_prime_class;
    d.contains_prime = d.contains_prime || c.contains_prime;
    d.classes.push_back(c);
  }
  for (std::int64_t b = 1; b < q; ++b)
    if ((a % q) * b % q == 1)
      d.inverse_b = b;
  return d;
}

RealSpec complementary(const RealSpec& alpha) {
  require(compare(alpha, RealSpec::rational(1)) > 0, errc::precondition_violated, "complement needs alpha > 1");
  if (alpha.is_exact()) {
    const ExactValue& a = alpha.exact();
    return RealSpec::from_exact(a / (a - ExactValue(1)));
  }
  // x / (x - 1) is decreasing on x > 1
  const Interval iv = alpha.enclose();
  return RealSpec::interval(iv.hi / (iv.hi - 1), iv.lo / (iv.lo - 1));
}

VerificationRecord rayleigh_partition_check(const RealSpec& alpha, std::uint64_t N) {
  require(alpha.is_irrational() != std::optional<bool>(false), errc::precondition_violated,
          "partition check needs irrational alpha");
  require(N >= 1, errc::precondition_violated, "partition check needs N >= 1");
  const RealSpec alpha2 = complementary(alpha);
  std::vector<std::uint8_t> cover(N + 1, 0);
  for (const auto& a : {alpha, alpha2}) {
    const FloorEvaluator f(BeattyParams(a, RealSpec::rational(0)));
    for (std::uint64_t n = 1;; ++n) {
      const auto e = static_cast<std::uint64_t>(f(n));
      if (e > N)
        break;
      ++cover[e];
    }
  }
  std::uint64_t bad = 0;
  std::int64_t first_bad = -1;
  for (std::uint64_t m = 1; m <= N; ++m)
    if (cover[m] != 1) {
      ++bad;
      if (first_bad < 0)
        first_bad = static_cast<std::int64_t>(m);
    }
  ParamMap pm{{"alpha", alpha.to_string()}, {"alpha_complement", alpha2.to_string()},
              {"N", static_cast<std::int64_t>(N)}};
  if (first_bad >= 0)
    pm["first_bad"] = first_bad;
  return VerificationRecord::make("beatty.rayleigh_partition", std::move(pm), static_cast<double>(bad), 0.0);
}

} // namespace beattylab::seq
