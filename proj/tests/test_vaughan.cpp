#include "doctest.h"
#include "oracles.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "beattylab/arith.hpp"
#include "beattylab/errors.hpp"
#include "beattylab/vaughan.hpp"

using namespace beattylab;
using namespace beattylab::vaughan;
using reals::RealSpec;

namespace {

const double pi = std::numbers::pi;

errc code_of(auto&& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return errc::parse_error;
}

double psi(std::uint64_t N) {
  double s = 0;
  for (std::uint64_t n = 2; n <= N; ++n)
    s += oracle::lambda(n);
  return s;
}

// sum Lambda(n) e(h n x) for x = (P + sqrt D)/Q, phases at 100 digits
std::complex<double> exp_sum_oracle(long P, long D, long Q, long h, std::uint64_t N) {
  long double re = 0, im = 0;
  for (std::uint64_t n = 2; n <= N; ++n) {
    const double lam = oracle::lambda(n);
    if (lam == 0)
      continue;
    const double t = oracle::surd_frac(P, D, Q, h * static_cast<long>(n));
    re += lam * std::cos(2 * pi * t);
    im += lam * std::sin(2 * pi * t);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

RealSpec inv_golden() { return RealSpec::surd(-1, 5, 2); } // 1/G = G - 1
RealSpec half_sqrt2() { return RealSpec::surd(0, 2, 2); }

ExpSumParams params_for(const RealSpec& a, std::uint64_t N, double delta, std::int64_t qmax) {
  ExpSumParams p;
  p.frak_a = a;
  p.N = N;
  p.delta = delta;
  const auto [num, den] = approximation_for(a, qmax);
  p.a = num;
  p.q = den;
  p.epsilon = 0.1;
  return p;
}

} // namespace

TEST_CASE("chi_delta examples") {
  CHECK(chi_delta(0.1, 0.25) == 1);
  CHECK(chi_delta(-0.25, 0.25) == 0);
  CHECK(chi_delta(0.25, 0.25) == 1);
  CHECK(chi_delta(1.1, 0.25) == 1);
  CHECK(chi_delta(0.5, 0.25) == 0);
  CHECK(chi_delta(-3.9, 0.2) == 1);
}

TEST_CASE("exponential sums over prime powers") {
  for (std::uint64_t N : {1u, 2u, 10u, 1000u})
    CHECK(exp_sum_lambda(RealSpec::rational(0), N).real() == doctest::Approx(psi(N)).epsilon(1e-13));
  // (-1)^n weights: 3 log 2 - 2 log 3 - log 5 - log 7
  const auto half = exp_sum_lambda(RealSpec::rational(1, 2), 10);
  const double hand = 3 * std::log(2.0) - 2 * std::log(3.0) - std::log(5.0) - std::log(7.0);
  CHECK(half.real() == doctest::Approx(hand).epsilon(1e-14));
  CHECK(half.real() == doctest::Approx(-3.6731).epsilon(1e-4));
  CHECK(std::abs(half.imag()) < 1e-14);

  for (long h : {1L, 2L, 7L, 31L}) {
    const auto got = exp_sum_lambda(RealSpec::surd(0, 2, 2), 3000, h);
    const auto want = exp_sum_oracle(0, 2, 2, h, 3000);
    CHECK(std::abs(got - want) < 1e-9);
    CHECK(std::abs(got) <= psi(3000) + 1e-9);
  }
}

TEST_CASE("phase folding") {
  // h (P + sqrt D)/Q - k = (hP - kQ + sqrt(h^2 D))/Q
  oracle::Rng rng(17);
  for (int i = 0; i < 20; ++i) {
    const long D = 2 + static_cast<long>(rng.below(50));
    if (static_cast<long>(std::sqrt(static_cast<double>(D))) * static_cast<long>(std::sqrt(static_cast<double>(D))) == D)
      continue;
    const long P = static_cast<long>(rng.below(7)), Q = 1 + static_cast<long>(rng.below(5));
    const long h = 1 + static_cast<long>(rng.below(40));
    const RealSpec x = RealSpec::surd(P, D, Q);
    const long k = static_cast<long>(std::floor(h * x.to_double()));
    const RealSpec folded = RealSpec::surd(h * P - k * Q, h * h * D, Q);
    const auto a = exp_sum_lambda(x, 5000, h), b = exp_sum_lambda(folded, 5000, 1);
    CHECK(std::abs(a - b) < 1e-9);
  }
  const auto r1 = exp_sum_lambda(RealSpec::rational(7, 5), 2000, 3);
  const auto r2 = exp_sum_lambda(RealSpec::rational(1, 5), 2000, 1);
  CHECK(std::abs(r1 - r2) < 1e-9);
}

TEST_CASE("four-way split by hand") {
  const auto s4 = vaughan_split(RealSpec::rational(0), 1, 4, 1.0);
  CHECK(std::abs(s4.S1) < 1e-15);
  CHECK(std::abs(s4.S2) < 1e-15);
  CHECK(s4.S3.real() == doctest::Approx(std::log(24.0)).epsilon(1e-14));
  CHECK(s4.S4.real() == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(s4.direct.real() == doctest::Approx(2 * std::log(2.0) + std::log(3.0)).epsilon(1e-14));
  CHECK(std::abs(s4.combined() - s4.direct) < 1e-14);

  const auto s2 = vaughan_split(RealSpec::rational(0), 1, 2, 1.0);
  CHECK(std::abs(s2.S1) + std::abs(s2.S2) + std::abs(s2.S4) < 1e-15);
  CHECK(s2.S3.real() == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(s2.direct.real() == doctest::Approx(std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("four-way split reproduces the direct sum") {
  const auto s = vaughan_split(half_sqrt2(), 3, 1000);
  CHECK(s.u >= 1);
  CHECK(std::abs(s.combined() - s.direct) <= 1e-7 * std::abs(s.direct));
  CHECK(std::abs(s.direct - exp_sum_oracle(0, 2, 2, 3, 1000)) < 1e-9);

  oracle::Rng rng(2024);
  for (int i = 0; i < 50; ++i) {
    const std::uint64_t N = 2 + rng.below(4999);
    const long j = 1 + static_cast<long>(rng.below(20));
    const RealSpec a = rng.below(3) == 0 ? RealSpec::rational(static_cast<long>(rng.below(50)), 1 + static_cast<long>(rng.below(60)))
                                         : RealSpec::surd(static_cast<long>(rng.below(5)), 2 + static_cast<long>(rng.below(40)) * 2 + 1, 1 + static_cast<long>(rng.below(6)));
    std::optional<double> u;
    if (rng.below(2))
      u = 1 + rng.unit() * 30;
    const auto r = check_identity(a, j, N, u);
    CHECK_MESSAGE(r.pass, format_params(r.params));
  }
}

TEST_CASE("sandwich polynomials") {
  const auto s = construct_sandwich(0.25, 16);
  CHECK(s.upper_constant == 0.5 + 1.0 / 17);
  CHECK(s.lower_constant == 0.5 - 1.0 / 17);
  for (int l = 1; l <= 16; ++l) {
    CHECK(std::abs(s.upper[l - 1]) <= std::min(0.5 + 1.0 / 17, 1.5 / l));
    CHECK(std::abs(s.lower[l - 1]) <= std::min(0.5 + 1.0 / 17, 1.5 / l));
  }
  const auto [grid, coeff] = check_sandwich(s);
  CHECK(grid.pass);
  CHECK(coeff.pass);

  // the mean over a grid finer than the degree is the constant term
  double mean = 0;
  for (int k = 0; k < 64; ++k)
    mean += s.evaluate_upper(k / 64.0);
  CHECK(mean / 64 == doctest::Approx(s.upper_constant).epsilon(1e-12));

  oracle::Rng rng(8);
  for (int i = 0; i < 20; ++i) {
    const double delta = 0.001 + 0.498 * rng.unit();
    const auto L = static_cast<std::int64_t>(1 + rng.below(200));
    const auto [g, c] = check_sandwich(construct_sandwich(delta, L));
    CHECK_MESSAGE(g.pass, format_params(g.params));
    CHECK(c.pass);
  }
  CHECK(code_of([] { construct_sandwich(0.5, 4); }) == errc::precondition_violated);
  CHECK(code_of([] { construct_sandwich(0.2, 0); }) == errc::precondition_violated);
}

TEST_CASE("sums of min{...}") {
  ExpSumParams p;
  p.frak_a = inv_golden();
  p.a = 13;
  p.q = 21;
  p.N = 1000;
  const auto [shifted, hyper] = check_min_sums(100, 100, 0.3, p);
  CHECK(shifted.pass);
  CHECK(hyper.pass);
  CHECK(shifted.margin > 0);
  CHECK(hyper.margin > 0);

  // independent left sides
  double l7 = 0, l8 = 0;
  for (long x = 1; x <= 100; ++x) {
    const double t = oracle::surd_frac(-1, 5, 2, x);
    const double d1 = std::abs(t - 0.3 - std::nearbyint(t - 0.3)), d2 = std::min(t, 1 - t);
    l7 += std::min(100.0, 1 / (2 * d1));
    l8 += std::min(10000.0 / x, 1 / (2 * d2));
  }
  CHECK(shifted.lhs == doctest::Approx(l7).epsilon(1e-10));
  CHECK(hyper.lhs == doctest::Approx(l8).epsilon(1e-10));
  CHECK(shifted.rhs == doctest::Approx(4 * 10000.0 / 21 + 400 + 121 * std::log(21.0)));

  CHECK(code_of([&] { check_min_sums(0.5, 10, 0.3, p); }) == errc::precondition_violated);
  ExpSumParams bad = p;
  bad.a = 8; // 8/21 is nowhere near 1/G
  CHECK(code_of([&] { check_min_sums(10, 10, 0.3, bad); }) == errc::precondition_violated);
  bad.a = 14;
  bad.q = 21;
  CHECK(code_of([&] { check_min_sums(10, 10, 0.3, bad); }) == errc::precondition_violated);
}

TEST_CASE("bilinear sums") {
  const auto p = params_for(half_sqrt2(), 1000, 0.25, 100);
  const auto [single, dbl] = check_bilinear_sums(200, 200, p, 42);
  CHECK(single.pass);
  CHECK(dbl.pass);
  const auto again = check_bilinear_sums(200, 200, p, 42);
  CHECK(again.first.lhs == single.lhs);
  CHECK(again.second.lhs == dbl.lhs);
  const auto [z1, z2] = check_bilinear_sums(50, 60, p, 1, CoefficientMode::zero);
  CHECK(z1.lhs == 0);
  CHECK(z2.lhs == 0);
  CHECK(z1.pass);
  CHECK(z2.pass);
  const double l = std::log(2.0 * 200 * 200 * p.q);
  CHECK(single.rhs == doctest::Approx(l * (10.0 * 40000 / p.q + 200 + 3.5 * p.q)));
}

TEST_CASE("dyadic blocks, S(H) and partial summation") {
  auto p = params_for(half_sqrt2(), 5000, 0.25, 70);
  REQUIRE(p.q == 41);
  const auto r = check_dyadic_block(4, 7, 8, p);
  CHECK(r.pass);
  CHECK(r.rhs > 1e3 * r.lhs);
  double lhs = 0;
  for (long j = 4; j < 7; ++j)
    lhs += std::abs(exp_sum_oracle(0, 2, 2, j, 5000));
  CHECK(r.lhs == doctest::Approx(lhs).epsilon(1e-10));
  CHECK(code_of([&] { check_dyadic_block(4, 8, 8, p); }) == errc::precondition_violated);
  CHECK(code_of([&] { check_dyadic_block(4, 7, 50, p); }) == errc::precondition_violated);
  auto z = p;
  z.delta = 0;
  CHECK(check_dyadic_block(4, 7, 8, z).pass);
  CHECK(code_of([&] { s_of_h(z, 3); }) == errc::precondition_violated);

  const auto sh = s_of_h(p, 8);
  CHECK(sh.pass);
  CHECK(s_of_h(p, 1).lhs == doctest::Approx(std::abs(exp_sum_lambda(half_sqrt2(), 5000))).epsilon(1e-14));
  double prev = 0;
  for (long H = 1; H <= 12; ++H) {
    const double v = s_of_h(p, H).lhs;
    CHECK(v >= prev);
    prev = v;
  }
  auto par = p;
  par.workers = 4;
  CHECK(s_of_h(par, 12).lhs == s_of_h(p, 12).lhs);

  auto q3 = params_for(half_sqrt2(), 3000, 0.25, 60);
  const auto ps = partial_summation_bound(q3, 32);
  CHECK(ps.pass);
  // 3/(4 delta + 2/(L+1)) lies below 3/(4 delta), not above
  CHECK(std::get<double>(ps.params.at("varpi")) <= 3 / (4 * 0.25));
  const auto ps1 = partial_summation_bound(q3, 1);
  CHECK(ps1.pass);

  // the same quantity assembled by hand
  double L2 = 0, S32 = 0;
  std::vector<double> S(33, 0);
  for (long l = 1; l <= 32; ++l) {
    const double m = std::abs(exp_sum_oracle(0, 2, 2, l, 3000));
    L2 += 2 * std::min(0.5 + 1.0 / 33, 1.5 / l) * m;
    S32 += m;
    S[l] = S32;
  }
  const double w = 3 / (1 + 2.0 / 33);
  double integral = 0;
  for (long k = 1; k < 32; ++k) {
    const double lo = std::max<double>(k, w), hi = k + 1.0;
    if (hi > lo)
      integral += S[k] * (1 / lo - 1 / hi);
  }
  CHECK(ps.lhs == doctest::Approx(L2).epsilon(1e-10));
  CHECK(ps.rhs == doctest::Approx(3 * S32 / 32 + 3 * integral).epsilon(1e-10));
}

TEST_CASE("chi-sum bound") {
  const double G = (1 + std::sqrt(5.0)) / 2;
  auto p = params_for(inv_golden(), 100000, 1 / (2 * G), 316);
  p.frak_b = -1 / (2 * G);
  const auto [main, trivial] = check_chi_sum(p);
  CHECK(main.pass);
  CHECK(trivial.pass);
  CHECK(main.rhs > 10 * main.lhs);

  double lhs = 0;
  for (std::uint64_t n = 2; n <= 100000; ++n) {
    const double lam = oracle::lambda(n);
    if (lam == 0)
      continue;
    lhs += lam * (chi_delta(oracle::surd_frac(-1, 5, 2, static_cast<long>(n)) - p.frak_b, p.delta) - 2 * p.delta);
  }
  CHECK(main.lhs == doctest::Approx(std::abs(lhs)).epsilon(1e-9));

  ExpSumParams r;
  r.frak_a = RealSpec::rational(5, 13);
  r.a = 5;
  r.q = 13;
  r.N = 20000;
  r.delta = 0.2;
  CHECK(r.exact_fraction());
  const auto [rm, rt] = check_chi_sum(r);
  CHECK(rm.pass);
  CHECK(rt.pass);
  CHECK(std::get<std::int64_t>(rm.params.at("exact_fraction")) == 1);
}
