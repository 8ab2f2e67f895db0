#include "doctest.h"
#include "oracles.hpp"

#include <cmath>

#include "beattylab/bounds.hpp"
#include "beattylab/errors.hpp"

using namespace beattylab;
using namespace beattylab::bounds;
using reals::BeattyParams;
using reals::RealSpec;

namespace {

const double log_G = std::log((1 + std::sqrt(5.0)) / 2);

BeattyParams golden0() { return BeattyParams(RealSpec::surd(1, 5, 2), RealSpec::rational(0)); }

errc code_of(auto&& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return errc::parse_error;
}

// F_n by a plain loop
mpz_class fib(unsigned n) {
  mpz_class a = 0, b = 1;
  for (unsigned i = 0; i < n; ++i) {
    mpz_class t = a + b;
    a = b;
    b = t;
  }
  return a;
}

// d(x) for every x <= n
std::vector<std::uint32_t> divisor_table(std::uint32_t n) {
  std::vector<std::uint32_t> d(n + 1, 0);
  for (std::uint32_t i = 1; i <= n; ++i)
    for (std::uint32_t j = i; j <= n; j += i)
      ++d[j];
  return d;
}

// prod over p < e^(1/eps) of max over nu <= 80 of (nu + 1)/p^(eps nu)
double product_oracle(double eps) {
  double lv = 0;
  const double bound = std::exp(1 / eps);
  for (std::uint64_t p = 2; static_cast<double>(p) < bound; ++p) {
    if (!oracle::trial_prime(p))
      continue;
    double best = 0;
    for (int nu = 0; nu <= 80; ++nu)
      best = std::max(best, std::log(nu + 1.0) - eps * nu * std::log(static_cast<double>(p)));
    lv += best;
  }
  return lv;
}

} // namespace

TEST_CASE("M_eps by the formula") {
  CHECK(m_epsilon_vinogradov(1).log_value == doctest::Approx(oracle::log_m_formula(1)).epsilon(1e-12));
  CHECK(std::exp(m_epsilon_vinogradov(1).log_value) == doctest::Approx(1.176).epsilon(1e-3));
  CHECK(m_epsilon_vinogradov(0.025).log_value == doctest::Approx(oracle::log_m_formula(0.025)).epsilon(1e-12));
  CHECK(m_epsilon_vinogradov(0.025).log_value == doctest::Approx(1.404e16).epsilon(1e-3));
  double prev = INFINITY;
  for (double e = 0.05; e < 100; e *= 1.7) {
    const double v = m_epsilon_vinogradov(e).log_value;
    CHECK(v < prev);
    CHECK(v >= 0);
    prev = v;
  }
  CHECK(m_epsilon_vinogradov(1e6).log_value == doctest::Approx(std::log(2 / (std::exp(1.0) * std::log(2.0)))).epsilon(1e-5));
  CHECK(std::isinf(m_epsilon_vinogradov(1e-3).log_value));
}

TEST_CASE("M_eps by the finite product") {
  const auto half = m_epsilon_finite_product(0.5);
  CHECK(half.method == MEpsilonMethod::finite_product);
  CHECK(std::exp(half.log_value) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  for (double e : {0.5, 0.25, 1.0 / 6, 0.1})
    CHECK(m_epsilon_finite_product(e).log_value == doctest::Approx(product_oracle(e)).epsilon(1e-12));
  CHECK(std::exp(m_epsilon_finite_product(0.25).log_value) <= 9);
  CHECK(std::exp(m_epsilon_finite_product(1.0 / 6).log_value) <= 139);
  CHECK(code_of([] { m_epsilon_finite_product(0.05); }) == errc::range_too_large);

  // the formula falls short of the least valid constant at eps = 1/2
  CHECK(m_epsilon_vinogradov(0.5).log_value < half.log_value);
  CHECK(m_epsilon_finite_product(0.25).log_value <= m_epsilon_vinogradov(0.25).log_value);
  CHECK(m_epsilon_finite_product(1.0 / 6).log_value <= m_epsilon_vinogradov(1.0 / 6).log_value);
}

TEST_CASE("finite product dominates d(x) x^-eps up to 10^6") {
  const auto d = divisor_table(1000000);
  for (double e : {0.5, 0.25, 1.0 / 6}) {
    const double lm = m_epsilon_finite_product(e).log_value;
    double worst = -INFINITY;
    for (std::uint32_t x = 1; x <= 1000000; ++x)
      worst = std::max(worst, std::log(static_cast<double>(d[x])) - e * std::log(static_cast<double>(x)));
    CHECK(worst <= lm + 1e-12);
    if (e == 0.5)
      CHECK(worst == doctest::Approx(lm).epsilon(1e-12)); // attained at x = 12
  }
}

TEST_CASE("sufficient ell for small epsilon") {
  const double l = ell_sufficient(0.02);
  CHECK(l == doctest::Approx(oracle::ell_rhs(0.02)).epsilon(1e-9));
  CHECK(l == doctest::Approx(6.3e18).epsilon(0.01));
  const double near = ell_sufficient(0.0217);
  CHECK(std::isfinite(near));
  CHECK(near == doctest::Approx(oracle::ell_rhs(0.0217)).epsilon(1e-9));
  CHECK(near < l);
  CHECK(code_of([] { ell_sufficient(0.03); }) == errc::epsilon_out_of_range);
  CHECK(code_of([] { ell_sufficient(0); }) == errc::epsilon_out_of_range);
  CHECK(code_of([] { ell_sufficient(44.0 / 2025); }) == errc::epsilon_out_of_range);
}

TEST_CASE("eta_0 and the Fibonacci length") {
  const auto r = eta0_sufficient(0.02);
  CHECK(r.log_eta0 == doctest::Approx(oracle::log_eta0(0.02)).epsilon(1e-9));
  CHECK(r.log_eta0 == doctest::Approx(2.8e18).epsilon(0.01));
  CHECK(r.ell_min_fibonacci == doctest::Approx(r.log_eta0 / log_G).epsilon(1e-9));
  CHECK_FALSE(r.exact_requested);

  for (double e : {0.005, 0.01, 0.015, 0.021}) {
    const auto s = eta0_sufficient(e);
    CHECK(s.ell_min_fibonacci == std::ceil(1 + (s.log_eta0 + std::log(std::sqrt(5.0))) / log_G));
  }

  const auto cf = cf::expand(RealSpec::surd(1, 5, 2), 64);
  const auto declined = eta0_sufficient(0.02, ExactEllRequest{&cf, 7, 10000});
  CHECK(declined.exact_requested);
  CHECK(declined.exact_declined);
  CHECK_FALSE(declined.ell_min_exact.has_value());
  CHECK(code_of([] { eta0_sufficient(0.05); }) == errc::epsilon_out_of_range);
}

TEST_CASE("least exact ell against Fibonacci ratios") {
  const auto cf = cf::expand(RealSpec::surd(1, 5, 2), 64);
  for (double log_eta : {0.5, 3.0, 10.0, 40.0, 200.0}) {
    const auto e = least_ell_exact(cf, 7, log_eta, 10000);
    REQUIRE(e.has_value());
    // p_n = F_{n+2}; least ell with F_{ell+9}/F_10 >= eta
    std::uint64_t ell = 1;
    while (std::log(fib(ell + 9).get_d()) - std::log(fib(10).get_d()) < log_eta)
      ++ell;
    CHECK(*e == ell);
    CHECK(static_cast<double>(*e) <= std::ceil(1 + (log_eta + std::log(std::sqrt(5.0))) / log_G));
  }
  CHECK_FALSE(least_ell_exact(cf, 7, 1e5, 1000).has_value());
}

TEST_CASE("headline bound, golden ratio") {
  const auto est = headline_log_bound(golden0(), 0.02);
  CHECK(est.m == 7);
  CHECK(est.threshold == doctest::Approx(34.27).epsilon(1e-3));
  CHECK(est.provenance == Provenance::growth_rate_estimate);
  CHECK_FALSE(est.ell_exact_integer);
  CHECK(est.ell == doctest::Approx(oracle::ell_rhs(0.02)).epsilon(1e-9));
  const double expected = (7 + est.ell + 2) * log_G;
  CHECK(est.log_p_m_ell == doctest::Approx(expected).epsilon(1e-9));
  CHECK(est.log_p_m_ell == doctest::Approx(3.05e18).epsilon(0.01));
  CHECK(est.log_bound == doctest::Approx(1.02 * est.log_p_m_ell).epsilon(1e-6));

  const auto ex = headline_log_bound(golden0(), 0.02, 20);
  CHECK(ex.provenance == Provenance::exact_convergent);
  CHECK(ex.ell_exact_integer);
  CHECK(ex.ell_overridden);
  CHECK(fib(29) == 514229);
  CHECK(ex.log_p_m_ell == doctest::Approx(std::log(514229.0)).epsilon(1e-14));
  const double L = std::log(1 + std::sqrt(5.0));
  const double assembled = (35 - 0.32) * std::log(L) + 2 * 0.98 * log_G + 1.02 * std::log(514229.0);
  CHECK(ex.log_bound == doctest::Approx(assembled).epsilon(1e-13));
  CHECK(ex.log10_bound == doctest::Approx(assembled / std::log(10.0)).epsilon(1e-13));

  CHECK(code_of([] { headline_log_bound(golden0(), 35.0 / 16, 5); }) == errc::epsilon_out_of_range);
  CHECK(code_of([] { headline_log_bound(golden0(), 0.1); }) == errc::epsilon_out_of_range);
  CHECK(code_of([] { headline_log_bound(golden0(), 0.02, std::nullopt, BoundMode::exact); }) == errc::range_too_large);
  CHECK(code_of([] {
          headline_log_bound(BeattyParams(RealSpec::rational(7, 2), RealSpec::rational(0)), 0.02, 5);
        }) == errc::precondition_violated);
  CHECK(code_of([] {
          headline_log_bound(BeattyParams(RealSpec::parse("dec:1.6180339887498948482~19"), RealSpec::rational(0)),
                             0.02, 5, BoundMode::estimate);
        }) == errc::not_periodic);
}

TEST_CASE("exact and growth-rate paths agree") {
  oracle::Rng rng(5);
  std::vector<RealSpec> alphas = {RealSpec::surd(1, 5, 2), RealSpec::surd(0, 2, 1), RealSpec::surd(40, 2, 10)};
  while (alphas.size() < 13) {
    const mpz_class D = static_cast<long>(2 + rng.below(300));
    if (mpz_perfect_square_p(D.get_mpz_t()))
      continue;
    const RealSpec a = RealSpec::surd(static_cast<long>(rng.below(10)), D, 1 + static_cast<long>(rng.below(4)));
    if (a.to_double() > 1.05)
      alphas.push_back(a);
  }
  for (const auto& a : alphas) {
    const BeattyParams p(a, RealSpec::rational(1, 3));
    for (std::uint64_t ell : {5u, 50u, 400u}) {
      const auto ex = headline_log_bound(p, 0.01, ell, BoundMode::exact);
      const auto es = headline_log_bound(p, 0.01, ell, BoundMode::estimate);
      CHECK(es.log_p_m_ell == doctest::Approx(ex.log_p_m_ell).epsilon(0.01));
      CHECK(ex.m == es.m);
    }
  }
}

TEST_CASE("prime certificate") {
  const auto cf = cf::expand(RealSpec::surd(1, 5, 2), 64);
  const auto conv = cf::convergents(cf, 30);
  for (std::size_t i = 3; i < conv.size(); i += 5) {
    const auto r = certify_prime_below(golden0(), 1000000, conv[i], 0.02);
    CHECK_FALSE(r.pass);
    CHECK(r.margin == doctest::Approx(r.rhs - r.lhs));
  }
  // q/p must approximate 1/alpha
  CHECK(code_of([&] { certify_prime_below(golden0(), 1000000, cf::Convergent{3, 7, 5}, 0.02); }) ==
        errc::precondition_violated);

  const double eps = 0.02;
  const auto eta = eta0_sufficient(eps);
  const auto an = ansatz(golden0(), eps, eta.log_eta0);
  const auto probe = certify_prime_below_log(golden0(), an.log_N, an.log_q, eps);
  CHECK(probe.pass);
  CHECK(probe.margin > 0);

  // beta so large that 1.04 (alpha + beta - 1) swamps 0.73 N/alpha
  const BeattyParams heavy(RealSpec::surd(1, 5, 2), RealSpec::parse("rat:1000000000000000000000000000000/1"));
  const auto big = certify_prime_below_log(heavy, std::log(1e20), std::log(1e10), eps);
  CHECK_FALSE(big.pass);
}

TEST_CASE("the small-epsilon inequality in eta") {
  const double eps = 0.02;
  const auto eta = eta0_sufficient(eps);
  CHECK(check_eta_inequality(golden0(), eps, eta.log_eta0).pass);
  CHECK_FALSE(check_eta_inequality(golden0(), eps, 0.0).pass);
  CHECK(code_of([] { check_eta_inequality(golden0(), 0.5, 1); }) == errc::epsilon_out_of_range);

  for (const auto& p : {golden0(), BeattyParams(RealSpec::surd(0, 2, 1), RealSpec::rational(7, 2))}) {
    double prev = -INFINITY;
    for (double le = 1e3; le < 1e20; le *= 3.7) {
      const auto r = check_eta_inequality(p, eps, le);
      CHECK(r.margin >= prev);
      prev = r.margin;
    }
  }
}
