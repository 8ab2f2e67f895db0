#include "beattylab/vaughan.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <thread>

#include "beattylab/arith.hpp"
#include "beattylab/bounds.hpp"
#include "beattylab/constants.hpp"
#include "beattylab/continued_fraction.hpp"
#include "beattylab/errors.hpp"
#include "beattylab/logspace.hpp"
#include "beattylab/summation.hpp"

namespace beattylab::vaughan {

namespace C = constants;
using PrimePowers = std::vector<std::pair<std::uint64_t, double>>;

namespace {

long double frac_of(long double x) { return x - std::floor(x); }

// sum over prime powers n <= N of Lambda(n) e(frac(x n))
cplx lambda_sum(const PrimePowers& table, const Phase& phase) {
  CompensatedComplex acc;
  for (const auto& [n, lam] : table)
    acc.add(lam * unit(phase.at(n)));
  return acc.value();
}

// moduli |T(h)| for h = first..last, computed on `workers` threads; each h is
// independent, so the result does not depend on the worker count
std::vector<double> moduli(const reals::RealSpec& x, const PrimePowers& table, std::int64_t first,
                           std::int64_t last, unsigned workers) {
  const std::int64_t count = std::max<std::int64_t>(0, last - first + 1);
  std::vector<double> out(static_cast<std::size_t>(count));
  auto run = [&](std::int64_t from, std::int64_t step) {
    for (std::int64_t i = from; i < count; i += step)
      out[static_cast<std::size_t>(i)] = std::abs(lambda_sum(table, Phase(x, first + i)));
  };
  const auto w = static_cast<std::int64_t>(std::clamp<unsigned>(workers, 1, 64));
  if (w == 1 || count < 2) {
    run(0, 1);
    return out;
  }
  std::vector<std::jthread> pool;
  for (std::int64_t t = 0; t < w; ++t)
    pool.emplace_back(run, t, w);
  return out;
}

double log_M_for(double epsilon) { return bounds::m_epsilon_best(1.25 * epsilon).log_value; }

ParamMap with(ParamMap m, std::initializer_list<std::pair<const std::string, ParamValue>> extra) {
  for (const auto& kv : extra)
    m[kv.first] = kv.second;
  return m;
}

double norm_dist(long double t) { return static_cast<double>(std::abs(t - std::nearbyint(t))); }

} // namespace

Phase::Phase(const reals::RealSpec& x, std::int64_t multiplier) {
  if (const auto* r = std::get_if<reals::Rational>(&x.variant())) {
    const mpq_class& v = r->value;
    if (v.get_num().fits_slong_p() && v.get_den().fits_slong_p()) {
      rational_ = true;
      den_ = v.get_den().get_si();
      __int128 num = static_cast<__int128>(v.get_num().get_si()) * multiplier;
      num_ = ((num % den_) + den_) % den_;
      frac_ = static_cast<long double>(num_) / static_cast<long double>(den_);
      return;
    }
  }
  const reals::Interval e = x.enclose(256);
  mpq_class m = (e.lo + e.hi) / 2 * multiplier;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), m.get_num_mpz_t(), m.get_den_mpz_t());
  m -= fl;
  // two steps so that the long double keeps all of its 64 bits
  const double hi = m.get_d();
  const mpq_class rest = m - mpq_class(hi);
  frac_ = static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
  if (frac_ >= 1)
    frac_ = 0;
}

long double Phase::at(std::uint64_t n) const {
  if (rational_)
    return static_cast<long double>((num_ * static_cast<__int128>(n)) % den_) / static_cast<long double>(den_);
  return frac_of(frac_ * static_cast<long double>(n));
}

cplx unit(long double t) {
  const double angle = static_cast<double>(2 * std::numbers::pi_v<long double> * frac_of(t));
  return {std::cos(angle), std::sin(angle)};
}

double ExpSumParams::scriptL() const {
  return std::log(static_cast<double>(N)) + std::log(static_cast<double>(q)) - std::log(delta);
}

bool ExpSumParams::exact_fraction() const {
  if (!frak_a.is_exact())
    return false;
  return frak_a.exact() == reals::ExactValue(mpq_class(a, q));
}

void ExpSumParams::validate(bool allow_zero_delta) const {
  require(q >= 1, errc::precondition_violated, "q must be positive");
  require(std::gcd(a, q) == 1, errc::precondition_violated, "a and q must be coprime");
  require(allow_zero_delta ? (delta >= 0 && delta < 0.5) : (delta > 0 && delta < 0.5),
          errc::precondition_violated, "delta out of range");
  require(N >= 1 && N <= desk_cap, errc::precondition_violated, "N out of range");
  require(epsilon > 0, errc::precondition_violated, "eps must be positive");
  // |frak_a - a/q| < 1/q^2
  const mpq_class aq(a, q), tol(1, static_cast<unsigned long>(q) * static_cast<unsigned long>(q));
  if (frak_a.is_exact()) {
    const reals::ExactValue d = frak_a.exact() - reals::ExactValue(aq);
    const reals::ExactValue lo = reals::ExactValue(-tol), hi = reals::ExactValue(tol);
    require(d > lo && d < hi, errc::precondition_violated, "a/q does not approximate frak_a within 1/q^2");
  } else {
    const reals::Interval e = frak_a.enclose();
    if (e.lo - aq > -tol && e.hi - aq < tol)
      return;
    if (e.hi - aq <= -tol || e.lo - aq >= tol)
      fail(errc::precondition_violated, "a/q does not approximate frak_a within 1/q^2");
    fail(errc::precision_exhausted, "enclosure cannot decide the approximation condition");
  }
}

ParamMap ExpSumParams::describe() const {
  ParamMap m;
  m["frak_a"] = frak_a.to_string();
  m["frak_b"] = frak_b;
  m["delta"] = delta;
  m["N"] = static_cast<std::int64_t>(N);
  m["a"] = a;
  m["q"] = q;
  m["eps"] = epsilon;
  return m;
}

std::pair<std::int64_t, std::int64_t> approximation_for(const reals::RealSpec& x, std::int64_t q_max) {
  require(q_max >= 1, errc::precondition_violated, "q_max must be positive");
  // split off the integer part so that the expansion sees a value in [0, 1)
  mpz_class k;
  reals::RealSpec y;
  if (x.is_exact()) {
    k = x.exact().floor();
    y = reals::RealSpec::from_exact(x.exact() - reals::ExactValue(mpq_class(k)));
  } else {
    const reals::Interval e = x.enclose();
    mpz_fdiv_q(k.get_mpz_t(), e.lo.get_num_mpz_t(), e.lo.get_den_mpz_t());
    mpz_class kh;
    mpz_fdiv_q(kh.get_mpz_t(), e.hi.get_num_mpz_t(), e.hi.get_den_mpz_t());
    if (k != kh)
      fail(errc::precision_exhausted, "enclosure straddles an integer");
    y = reals::RealSpec::interval(e.lo - k, e.hi - k);
  }
  require(k.fits_slong_p(), errc::range_too_large, "integer part too large");
  if (y.is_rational() && y.exact().is_zero())
    return {k.get_si(), 1};
  const cf::CFExpansion e = cf::expand(y, 200);
  std::size_t upto = e.quotients.size();
  if (!e.period)
    upto = std::min(upto, e.certified_terms);
  if (upto == 0)
    fail(errc::precision_exhausted, "no certified partial quotient");
  const auto conv = cf::convergents(e, upto - 1);
  std::pair<std::int64_t, std::int64_t> best{0, 0};
  for (const auto& c : conv) {
    if (c.n < 0)
      continue;
    const mpz_class p = c.p + k * c.q;
    if (c.q > q_max || !p.fits_slong_p())
      break;
    best = {p.get_si(), c.q.get_si()};
  }
  require(best.second >= 1, errc::precondition_violated, "no convergent below q_max");
  return best;
}

int chi_delta(double theta, double delta) {
  double t = theta - std::floor(theta);
  if (t > 0.5)
    t -= 1.0;
  return (-delta < t && t <= delta) ? 1 : 0;
}

cplx exp_sum_lambda(const reals::RealSpec& frak_a, std::uint64_t N, std::int64_t h) {
  require(N >= 1, errc::precondition_violated, "N must be positive");
  return lambda_sum(arith::prime_power_table(N), Phase(frak_a, h));
}

std::vector<double> exp_sum_moduli(const reals::RealSpec& frak_a, std::uint64_t N, std::int64_t H,
                                   unsigned workers) {
  return moduli(frak_a, arith::prime_power_table(N), 1, H, workers);
}

VaughanSplit vaughan_split(const reals::RealSpec& frak_a, std::int64_t j, std::uint64_t N,
                           std::optional<double> u_override, std::optional<std::int64_t> q) {
  require(N >= 2 && N <= desk_cap, errc::precondition_violated, "N out of range");
  require(j >= 1, errc::precondition_violated, "j must be positive");
  VaughanSplit out;
  out.q = q ? *q : approximation_for(frak_a, static_cast<std::int64_t>(std::sqrt(static_cast<double>(N)))).second;
  const double Nd = static_cast<double>(N);
  if (u_override) {
    out.u = *u_override;
  } else {
    out.u = std::min({std::pow(Nd, 0.4) * std::pow(static_cast<double>(j), -0.2), static_cast<double>(out.q),
                      Nd / static_cast<double>(out.q)});
  }
  out.u = std::max(out.u, 1.0);
  const double u = out.u;
  const auto U = static_cast<std::uint64_t>(std::min(std::floor(u), Nd));

  const Phase phase(frak_a, j);
  std::vector<cplx> E(N + 1);
  for (std::uint64_t k = 0; k <= N; ++k)
    E[k] = unit(phase.at(k));
  const PrimePowers table = arith::prime_power_table(N);
  const std::vector<int> mu = arith::moebius_table(U);

  CompensatedComplex s1, s2, s3, s4, direct;
  for (const auto& [n, lam] : table) {
    direct.add(lam * E[n]);
    if (n <= U)
      s1.add(lam * E[n]);
  }
  for (std::uint64_t d = 1; d <= U; ++d) {
    if (mu[d] == 0)
      continue;
    for (const auto& [n, lam] : table) {
      if (d * n > N)
        break;
      const std::uint64_t dn = d * n;
      CompensatedComplex inner;
      for (std::uint64_t k = dn; k <= N; k += dn)
        inner.add(E[k]);
      const cplx term = static_cast<double>(mu[d]) * lam * inner.value();
      s3.add(term);
      if (n <= U)
        s2.add(term);
    }
  }
  // c(m) = sum_{d | m, d <= u} mu(d)
  std::vector<int> c(N + 1, 0);
  for (std::uint64_t d = 1; d <= U; ++d)
    if (mu[d] != 0)
      for (std::uint64_t m = d; m <= N; m += d)
        c[m] += mu[d];
  const auto first_big = std::upper_bound(table.begin(), table.end(), U,
                                          [](std::uint64_t v, const auto& e) { return v < e.first; });
  for (std::uint64_t m = U + 1; static_cast<double>(m) * u < Nd; ++m) {
    if (c[m] == 0)
      continue;
    for (auto it = first_big; it != table.end() && it->first * m <= N; ++it)
      s4.add(static_cast<double>(c[m]) * it->second * E[it->first * m]);
  }
  out.S1 = s1.value();
  out.S2 = s2.value();
  out.S3 = s3.value();
  out.S4 = s4.value();
  out.direct = direct.value();
  return out;
}

VerificationRecord check_identity(const reals::RealSpec& frak_a, std::int64_t j, std::uint64_t N,
                                  std::optional<double> u_override) {
  const VaughanSplit s = vaughan_split(frak_a, j, N, u_override);
  const double psi = arith::chebyshev(N).psi;
  ParamMap pm;
  pm["frak_a"] = frak_a.to_string();
  pm["j"] = j;
  pm["N"] = static_cast<std::int64_t>(N);
  pm["u"] = s.u;
  return VerificationRecord::make("vaughan.identity", std::move(pm), std::abs(s.combined() - s.direct),
                                  1e-6 * std::max(1.0, psi));
}

// Vaaler's approximation to the sawtooth weighted by
// phi(t) = pi t (1 - t) cot(pi t) + t, plus half a Fejer kernel at each end.
SandwichCoefficients construct_sandwich(double delta, std::int64_t L) {
  require(delta > 0 && delta < 0.5, errc::precondition_violated, "need 0 < delta < 1/2");
  require(L >= 1, errc::precondition_violated, "need L >= 1");
  SandwichCoefficients s;
  s.delta = delta;
  s.L = L;
  const double K1 = static_cast<double>(L + 1);
  s.upper_constant = 2 * delta + 1 / K1;
  s.lower_constant = 2 * delta - 1 / K1;
  const double pi = std::numbers::pi;
  for (std::int64_t l = 1; l <= L; ++l) {
    const double t = static_cast<double>(l) / K1;
    const double phi = pi * t * (1 - t) / std::tan(pi * t) + t;
    const double ld = static_cast<double>(l);
    const double main = phi * std::sin(2 * pi * ld * delta) / (pi * ld);
    const double fejer = (1 - t) * std::cos(2 * pi * ld * delta) / K1;
    s.upper.emplace_back(main + fejer, 0.0);
    s.lower.emplace_back(main - fejer, 0.0);
  }
  return s;
}

namespace {

double evaluate(double constant, const std::vector<cplx>& c, double y) {
  CompensatedSum acc;
  acc.add(constant);
  for (std::size_t i = 0; i < c.size(); ++i)
    acc.add(2 * (c[i] * unit(static_cast<long double>(i + 1) * y)).real());
  return acc.value();
}

} // namespace

double SandwichCoefficients::evaluate_upper(double y) const { return evaluate(upper_constant, upper, y); }
double SandwichCoefficients::evaluate_lower(double y) const { return evaluate(lower_constant, lower, y); }

std::pair<VerificationRecord, VerificationRecord> check_sandwich(const SandwichCoefficients& s, int grid_points) {
  std::vector<double> ys;
  for (int k = 0; k < grid_points; ++k)
    ys.push_back(-0.5 + static_cast<double>(k) / grid_points);
  for (double e : {-s.delta, s.delta})
    for (double off : {-1e-9, 0.0, 1e-9})
      ys.push_back(e + off);
  double worst = -INFINITY;
  for (double y : ys) {
    const double chi = chi_delta(y, s.delta);
    worst = std::max({worst, s.evaluate_lower(y) - chi, chi - s.evaluate_upper(y)});
  }
  double excess = -INFINITY;
  const double top = 2 * s.delta + 1.0 / static_cast<double>(s.L + 1);
  for (std::int64_t l = 1; l <= s.L; ++l) {
    const double bound = std::min(top, 1.5 / static_cast<double>(l));
    excess = std::max({excess, std::abs(s.upper[l - 1]) - bound, std::abs(s.lower[l - 1]) - bound});
  }
  ParamMap pm;
  pm["delta"] = s.delta;
  pm["L"] = s.L;
  pm["grid"] = static_cast<std::int64_t>(ys.size());
  return {VerificationRecord::make("vaughan.sandwich.grid", pm, worst, 1e-12),
          VerificationRecord::make("vaughan.sandwich.coefficients", pm, excess, 0.0)};
}

std::pair<VerificationRecord, VerificationRecord> check_min_sums(double X, double Y, double beta,
                                                                 const ExpSumParams& params) {
  require(X >= 1 && Y >= 1, errc::precondition_violated, "need X, Y >= 1");
  params.validate();
  const Phase phase(params.frak_a);
  const auto xmax = static_cast<std::uint64_t>(std::floor(X));
  const double q = static_cast<double>(params.q);
  CompensatedSum shifted, hyper;
  for (std::uint64_t x = 1; x <= xmax; ++x) {
    const long double t = phase.at(x);
    const double d1 = norm_dist(t - static_cast<long double>(beta));
    const double d2 = norm_dist(t);
    shifted.add(d1 > 0 ? std::min(Y, 1 / (2 * d1)) : Y);
    const double cap = X * Y / static_cast<double>(x);
    hyper.add(d2 > 0 ? std::min(cap, 1 / (2 * d2)) : cap);
  }
  const double rhs7 = 4 * X * Y / q + 4 * Y + (X + q) * std::log(q);
  const double rhs8 = (10 * X * Y / q + X + 3.5 * q) * std::log(2 * X * Y * q);
  const ParamMap pm = with(params.describe(), {{"X", X}, {"Y", Y}, {"beta", beta}});
  return {VerificationRecord::make("vaughan.min_sum.shifted", pm, shifted.value(), rhs7),
          VerificationRecord::make("vaughan.min_sum.hyperbolic", pm, hyper.value(), rhs8)};
}

std::pair<VerificationRecord, VerificationRecord> check_bilinear_sums(std::int64_t X, std::int64_t Y,
                                                                      const ExpSumParams& params,
                                                                      std::uint64_t coeff_seed, CoefficientMode mode) {
  require(X >= 1 && Y >= 1, errc::precondition_violated, "need X, Y >= 1");
  params.validate();
  std::mt19937_64 gen(coeff_seed);
  auto draw = [&] { return unit(static_cast<long double>(gen() >> 11) * 0x1.0p-53L); };
  std::vector<cplx> a(static_cast<std::size_t>(X) + 1), b(static_cast<std::size_t>(Y) + 1);
  for (std::int64_t x = 1; x <= X; ++x)
    a[x] = mode == CoefficientMode::zero ? cplx(0) : draw();
  for (std::int64_t y = 1; y <= Y; ++y)
    b[y] = draw();

  const double Xd = static_cast<double>(X), Yd = static_cast<double>(Y), q = static_cast<double>(params.q);
  const double l = std::log(2 * Xd * Yd * q);
  const Phase phase(params.frak_a);
  CompensatedSum single, bilinear;
  double max_a = 0, sum_a2 = 0, sum_b2 = 0;
  for (std::int64_t x = 1; x <= X; ++x) {
    max_a = std::max(max_a, std::abs(a[x]));
    sum_a2 += std::norm(a[x]);
    const long double theta = phase.at(static_cast<std::uint64_t>(x));
    const auto zmax = static_cast<std::int64_t>(std::floor(Xd * Yd / static_cast<double>(x)));
    CompensatedComplex run1, run2;
    double best1 = 0, best2 = 0;
    for (std::int64_t y = 1; y <= std::max(zmax, Y); ++y) {
      const cplx e = unit(frac_of(theta * static_cast<long double>(y)));
      if (y <= zmax) {
        run1.add(a[x] * e);
        best1 = std::max(best1, std::abs(run1.value()));
      }
      if (y <= Y) {
        run2.add(a[x] * b[y] * e);
        best2 = std::max(best2, std::abs(run2.value()));
      }
    }
    single.add(best1);
    bilinear.add(best2);
  }
  for (std::int64_t y = 1; y <= Y; ++y)
    sum_b2 += std::norm(b[y]);
  const double rhs_a = l * (10 * Xd * Yd / q + Xd + 3.5 * q) * max_a;
  const double rhs_b = std::pow(l, 1.5) * std::sqrt(sum_a2 * sum_b2) *
                       std::sqrt(167 * Xd * Yd / q + 70 * Xd + 6 * Yd + 10 * q);
  const ParamMap pm = with(params.describe(), {{"X", X},
                                               {"Y", Y},
                                               {"seed", static_cast<std::int64_t>(coeff_seed)},
                                               {"coefficients", std::string(mode == CoefficientMode::zero ? "zero" : "unit_random")}});
  return {VerificationRecord::make("vaughan.bilinear.single", pm, single.value(), rhs_a),
          VerificationRecord::make("vaughan.bilinear.double", pm, bilinear.value(), rhs_b)};
}

namespace {

// log of 10^3 S^7 (c1 H N q^-1/2 + c2 H N^3/4 + c3 (H N q)^1/2 + (c4 + c5 M) H^(3/5 + 3 eps/4) N^(4/5 + eps))
double log_block_bound(const ExpSumParams& p, double H, double c1, double c2, double c3, double c4, double c5) {
  const double S = p.scriptL();
  if (std::isinf(S))
    return S;
  const double lN = std::log(static_cast<double>(p.N)), lq = std::log(static_cast<double>(p.q)), lH = std::log(H);
  const double lM = log_M_for(p.epsilon);
  const double inner = log_sum_exp({
      std::log(c1) + lH + lN - 0.5 * lq,
      std::log(c2) + lH + 0.75 * lN,
      std::log(c3) + 0.5 * (lH + lN + lq),
      log_sum_exp({std::log(c4), std::log(c5) + lM}) + (0.6 + 0.75 * p.epsilon) * lH + (0.8 + p.epsilon) * lN,
  });
  return std::log(C::c_E) + 7 * std::log(S) + inner;
}

} // namespace

VerificationRecord check_dyadic_block(std::int64_t J, std::int64_t Jprime, std::int64_t H,
                                      const ExpSumParams& params) {
  params.validate(true);
  const auto N = static_cast<std::int64_t>(params.N);
  require(J >= 1 && J <= Jprime && Jprime <= H && H <= params.q && params.q <= N, errc::precondition_violated,
          "need J <= J' <= H <= q <= N");
  require(Jprime < 2 * J, errc::precondition_violated, "need J' < 2J");
  const auto mods = moduli(params.frak_a, arith::prime_power_table(params.N), J, Jprime - 1, params.workers);
  CompensatedSum lhs;
  for (double m : mods)
    lhs.add(m);
  const double rhs =
      std::exp(log_block_bound(params, static_cast<double>(J), C::dy_q, C::dy_N34, C::dy_JNq, C::dy_M0, C::dy_M1));
  return VerificationRecord::make("vaughan.dyadic_block", with(params.describe(), {{"J", J}, {"Jprime", Jprime}, {"H", H}}),
                                  lhs.value(), rhs);
}

VerificationRecord s_of_h(const ExpSumParams& params, std::int64_t H) {
  require(H >= 1, errc::precondition_violated, "need H >= 1");
  params.validate();
  const auto mods = moduli(params.frak_a, arith::prime_power_table(params.N), 1, H, params.workers);
  CompensatedSum lhs;
  for (double m : mods)
    lhs.add(m);
  const double rhs =
      std::exp(log_block_bound(params, static_cast<double>(H), C::sh_q, C::sh_N34, C::sh_HNq, C::sh_M0, C::sh_M1));
  return VerificationRecord::make("vaughan.s_of_h", with(params.describe(), {{"H", H}}), lhs.value(), rhs);
}

VerificationRecord partial_summation_bound(const ExpSumParams& params, std::int64_t L) {
  require(L >= 1, errc::precondition_violated, "need L >= 1");
  params.validate();
  const auto mods = moduli(params.frak_a, arith::prime_power_table(params.N), 1, L, params.workers);
  const double K1 = static_cast<double>(L + 1);
  const double top = 2 * params.delta + 1 / K1;
  std::vector<double> S(static_cast<std::size_t>(L) + 1, 0.0); // S(k) for integer k
  CompensatedSum lhs, run;
  for (std::int64_t l = 1; l <= L; ++l) {
    const double m = mods[l - 1];
    lhs.add(2 * std::min(top, 1.5 / static_cast<double>(l)) * m);
    run.add(m);
    S[l] = run.value();
  }
  const double w = 3 / (4 * params.delta + 2 / K1);
  const double Ld = static_cast<double>(L);
  // S is constant on [k, k+1)
  CompensatedSum integral;
  for (std::int64_t k = static_cast<std::int64_t>(std::floor(w)); k < L; ++k) {
    const double lo = std::max(static_cast<double>(k), w), hi = std::min(static_cast<double>(k + 1), Ld);
    if (k < 1 || hi <= lo)
      continue;
    integral.add(S[k] * (1 / lo - 1 / hi));
  }
  const double rhs = 3 * S[L] / Ld + 3 * integral.value();
  const double allowance = 1e-12 * rhs;
  return VerificationRecord::make("vaughan.partial_summation",
                                  with(params.describe(), {{"L", L}, {"varpi", w}, {"allowance", allowance}}),
                                  lhs.value(), rhs + allowance);
}

double log_chi_sum_rhs(const ExpSumParams& params) {
  return bounds::log_chi_sum_bound(std::log(static_cast<double>(params.N)), std::log(static_cast<double>(params.q)),
                                   std::log(params.delta), params.epsilon, log_M_for(params.epsilon));
}

std::pair<VerificationRecord, VerificationRecord> check_chi_sum(const ExpSumParams& params) {
  params.validate();
  const Phase phase(params.frak_a);
  const PrimePowers table = arith::prime_power_table(params.N);
  CompensatedSum acc;
  for (const auto& [n, lam] : table) {
    const double theta = static_cast<double>(phase.at(n) - static_cast<long double>(params.frak_b));
    acc.add(lam * (chi_delta(theta, params.delta) - 2 * params.delta));
  }
  const double lhs = std::abs(acc.value());
  ParamMap pm = params.describe();
  pm["exact_fraction"] = static_cast<std::int64_t>(params.exact_fraction());
  return {VerificationRecord::make("vaughan.chi_sum", pm, lhs, std::exp(log_chi_sum_rhs(params))),
          VerificationRecord::make("vaughan.chi_sum.trivial", pm, lhs, 3 * C::c0 * static_cast<double>(params.N))};
}

} // namespace beattylab::vaughan
