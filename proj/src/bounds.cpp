#include "beattylab/bounds.hpp"

#include <cmath>
#include <limits>

#include "beattylab/arith.hpp"
#include "beattylab/constants.hpp"
#include "beattylab/errors.hpp"
#include "beattylab/logspace.hpp"

namespace beattylab::bounds {

namespace C = constants;

namespace {

const double log_golden = std::log((1.0 + std::sqrt(5.0)) / 2.0);
const double two_pow_53 = 9007199254740992.0;

// log(3711 + 2 M/17^3), M = M_{5 eps/4} by the formula
double log_bracket(double epsilon) {
  const double log_M = m_epsilon_vinogradov(1.25 * epsilon).log_value;
  return log_sum_exp({std::log(C::bracket_main), std::log(C::bracket_M) + log_M});
}

void require_admissible(double epsilon) {
  if (!epsilon_admissible(epsilon))
    fail(errc::epsilon_out_of_range, "need 0 < eps < 44/2025");
}

std::string spec_text(const reals::RealSpec& x) { return x.to_string(); }

double log_alpha_of(const reals::BeattyParams& p) { return std::log(p.alpha.to_double()); }

} // namespace

std::string to_string(MEpsilonMethod m) {
  return m == MEpsilonMethod::vinogradov_formula ? "vinogradov_formula" : "finite_product";
}

std::string to_string(BoundMode m) {
  switch (m) {
  case BoundMode::automatic:
    return "auto";
  case BoundMode::exact:
    return "exact";
  case BoundMode::estimate:
    return "estimate";
  }
  return "auto";
}

std::string to_string(Provenance p) {
  return p == Provenance::exact_convergent ? "exact_convergent" : "growth_rate_estimate";
}

BoundMode parse_bound_mode(const std::string& s) {
  if (s == "auto")
    return BoundMode::automatic;
  if (s == "exact")
    return BoundMode::exact;
  if (s == "estimate")
    return BoundMode::estimate;
  fail(errc::parse_error, "mode must be auto, exact or estimate");
}

MEpsilonValue m_epsilon_vinogradov(double epsilon) {
  require(epsilon > 0, errc::precondition_violated, "eps must be positive");
  const double c = std::log(2.0 / (std::exp(1.0) * std::log(2.0)));
  // e^(1/eps) * c without forming e^(1/eps) when c * e^(1/eps) is finite
  const double log_log = 1.0 / epsilon + std::log(c);
  return {epsilon, std::exp(log_log), MEpsilonMethod::vinogradov_formula};
}

MEpsilonValue m_epsilon_finite_product(double epsilon) {
  require(epsilon > 0, errc::precondition_violated, "eps must be positive");
  if (1.0 / epsilon > std::log(1e8))
    fail(errc::range_too_large, "e^(1/eps) exceeds 10^8");
  const double bound = std::exp(1.0 / epsilon);
  double log_value = 0.0;
  arith::for_each_segment(static_cast<std::uint64_t>(std::ceil(bound)), [&](const arith::SieveSegment& seg) {
    for (std::uint64_t p : seg.primes()) {
      if (static_cast<double>(p) >= bound)
        continue;
      const double lp = std::log(static_cast<double>(p));
      // log(nu + 1) - eps nu log p is concave in nu; climb while it grows
      unsigned nu = 0;
      while (std::log((nu + 2.0) / (nu + 1.0)) > epsilon * lp)
        ++nu;
      log_value += std::log(nu + 1.0) - epsilon * nu * lp;
    }
  });
  return {epsilon, log_value, MEpsilonMethod::finite_product};
}

MEpsilonValue m_epsilon_best(double epsilon) {
  if (1.0 / epsilon <= std::log(1e8))
    return m_epsilon_finite_product(epsilon);
  return m_epsilon_vinogradov(epsilon);
}

bool epsilon_admissible(double epsilon) { return epsilon > 0 && epsilon < C::eps_max_num / C::eps_max_den; }

double ell_sufficient(double epsilon) {
  require_admissible(epsilon);
  const double rhs =
      C::ell_base + C::ell_factor / epsilon * (C::ell_const + std::log1p(1.0 / epsilon) + log_bracket(epsilon));
  return rhs < two_pow_53 ? std::ceil(rhs) : rhs;
}

EtaSearchResult eta0_sufficient(double epsilon, std::optional<ExactEllRequest> exact) {
  require_admissible(epsilon);
  EtaSearchResult r;
  r.epsilon = epsilon;
  r.log_eta0 = 4.0 / epsilon *
               (std::log(C::eta_two_e3) + 8 * std::log(C::eta_65) + 8 * std::log1p(1.0 / epsilon) +
                log_bracket(epsilon));
  r.ell_min_fibonacci = std::ceil(1.0 + (r.log_eta0 + 0.5 * std::log(5.0)) / log_golden);
  if (exact && exact->cf) {
    r.exact_requested = true;
    r.ell_min_exact = least_ell_exact(*exact->cf, exact->m, r.log_eta0, exact->cap);
    r.exact_declined = !r.ell_min_exact.has_value();
  }
  return r;
}

std::optional<std::uint64_t> least_ell_exact(const cf::CFExpansion& expansion, std::size_t m, double log_eta,
                                             std::size_t cap) {
  if (m + 1 > cap)
    return std::nullopt;
  std::size_t upto = cap;
  if (!expansion.period && expansion.certified_terms != cf::unbounded)
    upto = std::min(upto, expansion.certified_terms == 0 ? 0 : expansion.certified_terms - 1);
  if (upto < m + 1)
    return std::nullopt;
  const auto conv = cf::convergents(expansion, upto);
  // conv[i] is index i - 1
  const double base = cf::log_of(conv[m + 2].p);
  for (std::size_t k = m + 1; k <= upto; ++k)
    if (cf::log_of(conv[k + 1].p) - base >= log_eta)
      return k - m;
  return std::nullopt;
}

BoundReport headline_log_bound(const reals::BeattyParams& params, double epsilon,
                               std::optional<std::uint64_t> ell_override, BoundMode mode, std::size_t cap,
                               unsigned guard_digits) {
  require(epsilon > 0, errc::epsilon_out_of_range, "eps must be positive");
  if (35.0 - 16.0 * epsilon <= 0)
    fail(errc::epsilon_out_of_range, "35 - 16 eps must be positive");
  if (reals::compare(params.alpha, reals::RealSpec::rational(1)) <= 0)
    fail(errc::precondition_violated, "alpha must exceed 1");
  if (params.alpha.is_rational())
    fail(errc::precondition_violated, "alpha must be irrational");

  BoundReport r;
  r.epsilon = epsilon;
  if (ell_override) {
    require(*ell_override >= 1, errc::precondition_violated, "ell must be positive");
    r.ell = static_cast<double>(*ell_override);
    r.ell_overridden = true;
  } else {
    r.ell = ell_sufficient(epsilon);
  }
  r.ell_exact_integer = r.ell < two_pow_53;

  const cf::CFExpansion expansion = cf::expand(params.alpha, cap);
  const cf::MIndex mi = cf::find_m(params, expansion, guard_digits);
  r.m = mi.m;
  r.threshold = mi.threshold;
  r.L = params.L_const();

  const double target = static_cast<double>(r.m) + r.ell;
  std::size_t available = cap;
  if (!expansion.period)
    available = std::min(cap, expansion.certified_terms == 0 ? std::size_t{0} : expansion.certified_terms - 1);
  const bool enumerable = r.ell_exact_integer && target <= static_cast<double>(available);

  bool use_exact = false;
  switch (mode) {
  case BoundMode::exact:
    if (!enumerable)
      fail(errc::range_too_large, "m + ell beyond the enumeration cap");
    use_exact = true;
    break;
  case BoundMode::estimate:
    use_exact = false;
    break;
  case BoundMode::automatic:
    use_exact = enumerable;
    break;
  }

  if (use_exact) {
    const auto idx = static_cast<std::size_t>(target);
    const auto conv = cf::convergents(expansion, idx);
    r.log_p_m_ell = cf::log_of(conv.back().p);
    r.provenance = Provenance::exact_convergent;
  } else {
    if (!expansion.period)
      fail(errc::not_periodic, "growth-rate estimate needs a periodic expansion");
    const cf::GrowthRate g = cf::log_growth_rate(expansion);
    const std::size_t P = g.period_length;
    // a base index past the preperiod where log p_k is already on its asymptote
    std::size_t k = expansion.period->preperiod.size() + P * ((40 + P - 1) / P);
    if (r.ell_exact_integer) {
      // same phase within the period as the target
      const auto t = static_cast<std::uint64_t>(target);
      k += static_cast<std::size_t>((t % P + P - k % P) % P);
    }
    const auto conv = cf::convergents(expansion, k);
    r.log_p_m_ell = cf::log_of(conv.back().p) + (target - static_cast<double>(k)) * g.per_period / P;
    r.provenance = Provenance::growth_rate_estimate;
  }

  const double log_alpha = log_alpha_of(params);
  r.log_bound = (35.0 - 16.0 * epsilon) * std::log(r.L) + 2.0 * (1.0 - epsilon) * log_alpha +
                std::log(params.B()) + (1.0 + epsilon) * r.log_p_m_ell;
  r.log10_bound = r.log_bound / std::log(10.0);
  return r;
}

double log_chi_sum_bound(double log_N, double log_q, double log_delta, double epsilon, double log_M) {
  const double S = log_N + log_q - log_delta;
  const double log_c3 = log_sum_exp({std::log(C::th3_M0), std::log(C::th3_M1) + log_M});
  const double inner = log_sum_exp({
      std::log(C::th3_q) + log_N - 0.5 * log_q,
      std::log(C::th3_N34) + 0.75 * log_N,
      std::log(C::th3_dNq) + 0.5 * (log_delta + log_N + log_q),
      log_c3 + 0.75 * epsilon * S + 0.4 * log_delta + (0.8 + epsilon) * log_N,
  });
  return std::log(C::c_E) + 8.0 * std::log(S) + inner;
}

namespace {

VerificationRecord certify_record(const reals::BeattyParams& params, double log_N, double log_q, double epsilon,
                                  ParamMap pm) {
  const double alpha = params.alpha.to_double();
  const double log_alpha = std::log(alpha);
  const double log_delta = -std::log(2.0 * alpha);
  const double log_M = m_epsilon_vinogradov(1.25 * epsilon).log_value;
  const double log_E = log_chi_sum_bound(log_N, log_q, log_delta, epsilon, log_M);
  const double shift = alpha + params.beta.to_double() - 1.0;
  const double lhs = log_sum_exp({log_E, std::log(C::cert_sqrt) + 0.5 * log_N,
                                  std::log(C::cert_linear) + safe_log(shift)});
  const double rhs = std::log(C::cert_main) + log_N - log_alpha;
  pm["alpha"] = spec_text(params.alpha);
  pm["beta"] = spec_text(params.beta);
  pm["eps"] = epsilon;
  return VerificationRecord::make("bound.certify_prime_below.log", std::move(pm), lhs, rhs);
}

} // namespace

VerificationRecord certify_prime_below(const reals::BeattyParams& params, std::uint64_t N, const cf::Convergent& conv,
                                       double epsilon) {
  require(epsilon > 0, errc::epsilon_out_of_range, "eps must be positive");
  require(N >= 1, errc::precondition_violated, "N must be positive");
  require(conv.p > 0 && conv.q > 0, errc::precondition_violated, "convergent must be positive");
  // |1/alpha - q/p| p^2 < 1
  const mpq_class p2 = mpq_class(conv.p * conv.p);
  const mpq_class qp = mpq_class(conv.q, conv.p);
  bool ok;
  if (params.alpha.is_exact()) {
    reals::ExactValue d = params.alpha.exact().reciprocal() - reals::ExactValue(qp);
    if (d.sign() < 0)
      d = -d;
    ok = (reals::ExactValue(1) - d * reals::ExactValue(p2)).sign() > 0;
  } else {
    const reals::Interval a = params.alpha.enclose();
    require(a.lo > 0, errc::precondition_violated, "alpha must be positive");
    const mpq_class lo = 1 / a.hi - qp, hi = 1 / a.lo - qp;
    const mpq_class worst = abs(lo) > abs(hi) ? mpq_class(abs(lo)) : mpq_class(abs(hi));
    const mpq_class best = (lo <= 0 && hi >= 0) ? mpq_class(0) : (abs(lo) < abs(hi) ? mpq_class(abs(lo)) : mpq_class(abs(hi)));
    if (worst * p2 < 1)
      ok = true;
    else if (best * p2 >= 1)
      ok = false;
    else
      fail(errc::precision_exhausted, "enclosure cannot decide the approximation condition");
  }
  require(ok, errc::precondition_violated, "q/p is not within 1/p^2 of 1/alpha");
  ParamMap pm;
  pm["N"] = static_cast<std::int64_t>(N);
  pm["q"] = conv.p.fits_slong_p() ? ParamValue(static_cast<std::int64_t>(conv.p.get_si())) : ParamValue(conv.p.get_str());
  return certify_record(params, std::log(static_cast<double>(N)), cf::log_of(conv.p), epsilon, std::move(pm));
}

VerificationRecord certify_prime_below_log(const reals::BeattyParams& params, double log_N, double log_q,
                                           double epsilon) {
  require(epsilon > 0, errc::epsilon_out_of_range, "eps must be positive");
  ParamMap pm;
  pm["log_N"] = log_N;
  pm["log_q"] = log_q;
  return certify_record(params, log_N, log_q, epsilon, std::move(pm));
}

VerificationRecord check_eta_inequality(const reals::BeattyParams& params, double epsilon, double log_eta) {
  require_admissible(epsilon);
  const double log_alpha = log_alpha_of(params);
  const double log_B = std::log(params.B());
  const double log_L = std::log(params.L_const());
  const double shift = params.alpha.to_double() + params.beta.to_double() - 1.0;
  const double S = std::log(2.0) + C::scriptL_L * log_L + C::scriptL_alpha * log_alpha + log_B +
                   (2.0 + epsilon) * log_eta;
  const double t1 = std::log(C::cert_sqrt) + C::t1_L * log_L - log_alpha - 0.5 * log_B -
                    0.5 * (1.0 + epsilon) * log_eta;
  const double t2 = std::log(C::cert_linear) + safe_log(shift) + C::t2_L * log_L - 3.0 * log_alpha - log_B -
                    (1.0 + epsilon) * log_eta;
  const double t3 = std::log(C::c_E) + 8.0 * std::log(std::abs(S)) - 8.0 * log_L - 0.5 * epsilon * log_eta +
                    log_bracket(epsilon);
  ParamMap pm;
  pm["alpha"] = spec_text(params.alpha);
  pm["beta"] = spec_text(params.beta);
  pm["eps"] = epsilon;
  pm["log_eta"] = log_eta;
  return VerificationRecord::make("bound.eta_inequality.log", std::move(pm), log_sum_exp({t1, t2, t3}),
                                  std::log(C::cert_main));
}

Ansatz ansatz(const reals::BeattyParams& params, double epsilon, double log_eta) {
  const double log_L = std::log(params.L_const());
  const double log_alpha = log_alpha_of(params);
  Ansatz a;
  a.log_q = C::ansatz_q_L * log_L + 2.0 * log_alpha + log_eta;
  a.log_N = C::ansatz_N_L * log_L + 2.0 * log_alpha + std::log(params.B()) + a.log_q + epsilon * log_eta;
  return a;
}

} // namespace beattylab::bounds
