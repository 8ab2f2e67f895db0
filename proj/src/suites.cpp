#include "beattylab/suites.hpp"

#include <cmath>

#include "beattylab/beatty.hpp"
#include "beattylab/bounds.hpp"
#include "beattylab/errors.hpp"
#include "beattylab/explicit_checks.hpp"
#include "beattylab/vaughan.hpp"

namespace beattylab::suites {

using reals::RealSpec;
using vaughan::ExpSumParams;

RealSpec random_surd(Rng& rng) {
  for (;;) {
    const auto D = rng.between(2, 200);
    const auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(D)));
    if (r * r == D || (r + 1) * (r + 1) == D)
      continue;
    return RealSpec::surd(rng.between(0, 9), D, rng.between(1, 6));
  }
}

RealSpec random_surd_above(Rng& rng, double min_value) {
  for (;;) {
    RealSpec x = random_surd(rng);
    if (x.to_double() > min_value)
      return x;
  }
}

const std::vector<std::string>& vaughan_suite_names() {
  static const std::vector<std::string> names = {"identity", "min-sums", "bilinear", "dyadic",
                                                 "sh", "chi-sum", "sandwich", "partial-summation"};
  return names;
}

namespace {

ExpSumParams params_for(const RealSpec& a, std::uint64_t N, double delta, std::int64_t q_max, const SuiteConfig& c) {
  ExpSumParams p;
  p.frak_a = a;
  p.N = N;
  p.delta = delta;
  const auto [num, den] = vaughan::approximation_for(a, std::max<std::int64_t>(1, q_max));
  p.a = num;
  p.q = den;
  p.epsilon = c.epsilon;
  p.workers = c.workers;
  return p;
}

std::uint64_t random_N(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  hi = std::max(hi, lo);
  return static_cast<std::uint64_t>(rng.between(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
}

std::int64_t root_of(std::uint64_t N) { return static_cast<std::int64_t>(std::sqrt(static_cast<double>(N))); }

void push(std::vector<VerificationRecord>& out, std::pair<VerificationRecord, VerificationRecord> p) {
  out.push_back(std::move(p.first));
  out.push_back(std::move(p.second));
}

} // namespace

std::vector<VerificationRecord> vaughan_suite(const std::string& name, const SuiteConfig& c) {
  Rng rng(c.seed);
  std::vector<VerificationRecord> out;
  const std::uint64_t n = std::max<std::uint64_t>(c.n, 100);
  for (unsigned i = 0; i < c.cases; ++i) {
    if (name == "identity") {
      const std::uint64_t N = random_N(rng, 2, std::min<std::uint64_t>(n, 1000000));
      const std::int64_t j = rng.between(1, 20);
      const RealSpec a = rng.below(3) == 0 ? RealSpec::rational(rng.between(0, 60), rng.between(1, 60)) : random_surd(rng);
      out.push_back(vaughan::check_identity(a, j, N));
    } else if (name == "min-sums") {
      const auto p = params_for(random_surd(rng), n, 0.25, rng.between(2, 500), c);
      push(out, vaughan::check_min_sums(rng.uniform(1, 300), rng.uniform(1, 300), rng.unit(), p));
    } else if (name == "bilinear") {
      const auto p = params_for(random_surd(rng), n, 0.25, rng.between(2, 200), c);
      push(out, vaughan::check_bilinear_sums(rng.between(1, 200), rng.between(1, 200), p, rng.below(1u << 30)));
    } else if (name == "dyadic") {
      const std::uint64_t N = random_N(rng, n / 10 + 2, n);
      const auto p = params_for(random_surd(rng), N, rng.uniform(0.01, 0.49), root_of(N), c);
      const std::int64_t J = rng.between(1, std::max<std::int64_t>(1, p.q / 2));
      const std::int64_t Jp = rng.between(J, std::min(2 * J - 1, p.q));
      out.push_back(vaughan::check_dyadic_block(J, Jp, rng.between(Jp, p.q), p));
    } else if (name == "sh") {
      const std::uint64_t N = random_N(rng, n / 10 + 2, n);
      const auto p = params_for(random_surd(rng), N, rng.uniform(0.01, 0.49), root_of(N), c);
      out.push_back(vaughan::s_of_h(p, rng.between(1, std::min<std::int64_t>(p.q, 12))));
    } else if (name == "chi-sum") {
      const RealSpec alpha = random_surd_above(rng, 1.05);
      const double beta = static_cast<double>(rng.between(0, 8)) / 3;
      const double ad = alpha.to_double();
      const std::uint64_t N = random_N(rng, n / 10 + 2, n);
      auto p = params_for(RealSpec::from_exact(alpha.exact().reciprocal()), N, 1 / (2 * ad), root_of(N), c);
      p.frak_b = (2 * beta - 1) / (2 * ad);
      push(out, vaughan::check_chi_sum(p));
    } else if (name == "sandwich") {
      push(out, vaughan::check_sandwich(vaughan::construct_sandwich(rng.uniform(0.001, 0.499), rng.between(1, 200))));
    } else if (name == "partial-summation") {
      const std::uint64_t N = random_N(rng, 100, std::min<std::uint64_t>(n, 200000));
      const auto p = params_for(random_surd(rng), N, rng.uniform(0.01, 0.49), root_of(N), c);
      out.push_back(vaughan::partial_summation_bound(p, rng.between(1, 40)));
    } else {
      fail(errc::parse_error, "unknown suite '" + name + "'");
    }
  }
  return out;
}

std::vector<VerificationRecord> full_report(const SuiteConfig& config) {
  std::vector<VerificationRecord> out;
  for (const auto& name : vaughan_suite_names()) {
    auto part = vaughan_suite(name, config);
    out.insert(out.end(), part.begin(), part.end());
  }
  checks::InequalityCheckConfig ic;
  ic.x_max = 100000;
  for (const char* name : {"divisor", "d3sq", "dsq", "rs"}) {
    auto part = checks::run_check(name, ic);
    out.insert(out.end(), part.begin(), part.end());
  }
  const reals::BeattyParams golden(RealSpec::surd(1, 5, 2), RealSpec::rational(0));
  out.push_back(seq::chi_membership_bridge(golden, 100000));
  out.push_back(seq::rayleigh_partition_check(golden.alpha, 100000));
  const double eps = 0.02;
  out.push_back(bounds::check_eta_inequality(golden, eps, bounds::eta0_sufficient(eps).log_eta0));
  return out;
}

} // namespace beattylab::suites
