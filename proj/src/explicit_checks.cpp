#include "beattylab/explicit_checks.hpp"

#include <cmath>

#include "beattylab/constants.hpp"
#include "beattylab/errors.hpp"
#include "beattylab/summation.hpp"

namespace beattylab::checks {

namespace C = constants;

namespace {

constexpr std::size_t max_violation_records = 1000;

// Folds a running sum of f(x) over x <= x_max and compares each prefix
// with bound(X) for X >= 2.
template <class Bound>
std::vector<VerificationRecord> running_sum_check(const std::string& id, std::uint64_t x_max, double analytic_from,
                                                  const std::function<std::uint64_t(std::uint64_t, unsigned)>& local,
                                                  Bound bound, std::size_t segment_size) {
  require(x_max >= 2, errc::precondition_violated, "x_max must be at least 2");
  std::vector<VerificationRecord> violations;
  unsigned __int128 sum = 0;
  double worst = -INFINITY;
  std::uint64_t worst_X = 0, count = 0;
  arith::for_each_multiplicative(
      x_max, local,
      [&](std::uint64_t lo, std::span<const std::uint64_t> vals) {
        for (std::size_t i = 0; i < vals.size(); ++i) {
          const std::uint64_t X = lo + i;
          sum += static_cast<unsigned __int128>(vals[i]) * vals[i];
          if (X < 2)
            continue;
          const double lhs = static_cast<double>(sum), rhs = bound(static_cast<double>(X));
          const double ratio = lhs / rhs;
          if (ratio > worst) {
            worst = ratio;
            worst_X = X;
          }
          if (lhs > rhs) {
            ++count;
            if (violations.size() < max_violation_records) {
              ParamMap pm;
              pm["X"] = static_cast<std::int64_t>(X);
              violations.push_back(VerificationRecord::make(id + ".violation", std::move(pm), lhs, rhs));
            }
          }
        }
      },
      segment_size);
  ParamMap pm;
  pm["x_max"] = static_cast<std::int64_t>(x_max);
  pm["worst_X"] = static_cast<std::int64_t>(worst_X);
  pm["violations"] = static_cast<std::int64_t>(count);
  pm["analytic_from"] = analytic_from;
  std::vector<VerificationRecord> out{VerificationRecord::make(id, std::move(pm), worst, 1.0)};
  out.insert(out.end(), violations.begin(), violations.end());
  return out;
}

struct MaxTracker {
  double worst = -INFINITY;
  std::uint64_t at = 0;
  std::uint64_t violations = 0;
  std::uint64_t first_violation = 0;

  void see(double ratio, std::uint64_t n, bool violated) {
    if (ratio > worst) {
      worst = ratio;
      at = n;
    }
    if (violated && violations++ == 0)
      first_violation = n;
  }

  VerificationRecord record(const std::string& id, std::uint64_t n_max, double rhs) const {
    ParamMap pm;
    pm["n_max"] = static_cast<std::int64_t>(n_max);
    pm["worst_at"] = static_cast<std::int64_t>(at);
    pm["violations"] = static_cast<std::int64_t>(violations);
    if (violations)
      pm["first_violation"] = static_cast<std::int64_t>(first_violation);
    return VerificationRecord::make(id, std::move(pm), worst, rhs);
  }
};

} // namespace

void InequalityCheckConfig::validate() const {
  require(x_max >= 2, errc::precondition_violated, "x_max must be at least 2");
  require(segment_size > 0, errc::precondition_violated, "segment size must be positive");
}

VerificationRecord verify_divisor_pointwise(std::uint64_t x_max, std::size_t segment_size) {
  require(x_max >= 1, errc::precondition_violated, "x_max must be positive");
  MaxTracker t;
  arith::for_each_multiplicative(
      x_max, [](std::uint64_t, unsigned e) -> std::uint64_t { return e + 1; },
      [&](std::uint64_t lo, std::span<const std::uint64_t> vals) {
        for (std::size_t i = 0; i < vals.size(); ++i) {
          const auto x = static_cast<long double>(lo + i);
          const long double bound = std::min({C::d_sixth * std::pow(x, 1.0L / 6), C::d_quarter * std::pow(x, 0.25L),
                                              C::d_half * std::sqrt(x)});
          const long double d = static_cast<long double>(vals[i]);
          t.see(static_cast<double>(d / bound), lo + i, d > bound);
        }
      },
      segment_size);
  ParamMap pm;
  pm["x_max"] = static_cast<std::int64_t>(x_max);
  pm["worst_x"] = static_cast<std::int64_t>(t.at);
  pm["violations"] = static_cast<std::int64_t>(t.violations);
  return VerificationRecord::make("explicit.divisor_pointwise", std::move(pm), t.worst, 1.0);
}

std::vector<VerificationRecord> verify_d3_square_sum(std::uint64_t x_max, std::size_t segment_size) {
  return running_sum_check(
      "explicit.d3sq", x_max, C::d3sq_analytic_from,
      [](std::uint64_t, unsigned e) { return arith::divisor_k_local(3, e); },
      [](double X) { return C::d3sq * X * std::pow(std::log(X), 8); }, segment_size);
}

std::vector<VerificationRecord> verify_d_square_sum(std::uint64_t x_max, std::size_t segment_size) {
  return running_sum_check(
      "explicit.dsq", x_max, C::dsq_analytic_from, [](std::uint64_t, unsigned e) -> std::uint64_t { return e + 1; },
      [](double X) { return C::dsq * X * std::pow(std::log(X), 3); }, segment_size);
}

std::vector<VerificationRecord> verify_rosser_schoenfeld(std::uint64_t n_max, std::size_t segment_size) {
  require(n_max >= static_cast<std::uint64_t>(C::rs_theta_from), errc::precondition_violated, "n_max must be at least 41");
  const std::vector<std::uint64_t> small = arith::small_primes(static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n_max))) + 2);
  MaxTracker psi_t, theta_t, pi_t, pp_t, mertens_t;
  CompensatedSum psi, theta;
  double log_product = 0.0; // log prod_{p <= X} (1 + 1/p)
  std::size_t small_idx = 0; // primes <= floor(sqrt N)
  std::uint64_t root = 1;

  arith::for_each_lambda_segment(
      n_max,
      [&](std::uint64_t lo, std::span<const double> lam) {
        for (std::size_t i = 0; i < lam.size(); ++i) {
          const std::uint64_t N = lo + i;
          const double Nd = static_cast<double>(N);
          if (lam[i] > 0) {
            psi.add(lam[i]);
            if (std::llround(std::exp(lam[i])) == static_cast<long long>(N)) {
              theta.add(lam[i]);
              log_product += std::log1p(1.0 / Nd);
            }
          }
          const double ps = psi.value(), th = theta.value();
          psi_t.see(ps / Nd, N, ps > C::c0 * Nd);
          if (N < 2)
            continue;
          const double lN = std::log(Nd);
          if (N >= static_cast<std::uint64_t>(C::rs_theta_from)) {
            const double target = Nd - Nd / lN;
            theta_t.see(target / th, N, !(th > target));
          }
          while ((root + 1) * (root + 1) <= N)
            ++root;
          while (small_idx < small.size() && small[small_idx] <= root)
            ++small_idx;
          const double chain = (1 + 3 / lN) * std::sqrt(Nd);
          const double stated = static_cast<double>(small_idx) * lN;
          pi_t.see(stated / chain, N, !(stated < chain));
          pp_t.see((ps - th) / chain, N, !(ps - th < chain));
          const double m_rhs = 1 / (lN * lN) + 0.5 + C::mertens + std::log(lN);
          mertens_t.see(std::exp(log_product - m_rhs), N, !(log_product < m_rhs));
        }
      },
      segment_size);

  return {psi_t.record("explicit.rs.psi", n_max, C::c0), theta_t.record("explicit.rs.theta", n_max, 1.0),
          pi_t.record("explicit.rs.prime_powers_stated", n_max, 1.0),
          pp_t.record("explicit.rs.prime_power_sum", n_max, 1.0), mertens_t.record("explicit.rs.mertens", n_max, 1.0)};
}

std::vector<VerificationRecord> run_check(const std::string& name, const InequalityCheckConfig& config) {
  config.validate();
  if (name == "divisor")
    return {verify_divisor_pointwise(config.x_max, config.segment_size)};
  if (name == "d3sq")
    return verify_d3_square_sum(config.x_max, config.segment_size);
  if (name == "dsq")
    return verify_d_square_sum(config.x_max, config.segment_size);
  if (name == "rs")
    return verify_rosser_schoenfeld(config.x_max, config.segment_size);
  fail(errc::parse_error, "unknown check '" + name + "'");
}

} // namespace beattylab::checks
