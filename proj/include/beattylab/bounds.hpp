#pragma once

// The headline bound and everything it is assembled from, evaluated in
// natural-log space: the divisor constants M_eps, the length ell, the
// threshold eta_0, the prime-existence certificate and the small-epsilon
// inequality that makes it work.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "beattylab/continued_fraction.hpp"
#include "beattylab/real_spec.hpp"
#include "beattylab/record.hpp"

namespace beattylab::bounds {

inline constexpr std::size_t default_enumeration_cap = 10000;

enum class MEpsilonMethod { vinogradov_formula, finite_product };
std::string to_string(MEpsilonMethod m);

struct MEpsilonValue {
  double epsilon = 0.0;
  double log_value = 0.0; // log M_eps
  MEpsilonMethod method = MEpsilonMethod::vinogradov_formula;
};

/// log M_eps = e^(1/eps) log(2/(e log 2)); +inf once e^(1/eps) overflows.
MEpsilonValue m_epsilon_vinogradov(double epsilon);

/// prod over p < e^(1/eps) of max_nu (nu + 1)/p^(eps nu), the least M with
/// d(x) <= M x^eps. RangeTooLarge when e^(1/eps) > 10^8.
MEpsilonValue m_epsilon_finite_product(double epsilon);

/// The least valid constant when it is enumerable, else the formula.
MEpsilonValue m_epsilon_best(double epsilon);

/// True when 0 < eps < 44/2025.
bool epsilon_admissible(double epsilon);

/// Least integer ell >= 3 + 9/eps (41 + log(1 + 1/eps) + log(3711 + 2 M/17^3)),
/// M = M_{5 eps/4}. Beyond 2^53 the value is the real bound itself.
/// EpsilonOutOfRange unless eps is admissible.
double ell_sufficient(double epsilon);

struct ExactEllRequest {
  const cf::CFExpansion* cf = nullptr;
  std::size_t m = 0;
  std::size_t cap = default_enumeration_cap;
};

struct EtaSearchResult {
  double epsilon = 0.0;
  double log_eta0 = 0.0;
  double ell_min_fibonacci = 0.0;          // least ell with G^(ell-1)/sqrt5 >= eta_0
  std::optional<std::uint64_t> ell_min_exact; // least ell with p_{m+ell}/p_{m+1} >= eta_0
  bool exact_requested = false;
  bool exact_declined = false; // requested but not reached within the cap
};

/// log eta_0 = (4/eps) log(2 10^3 65^8 (1 + 1/eps)^8 (3711 + 2 M/17^3)).
EtaSearchResult eta0_sufficient(double epsilon, std::optional<ExactEllRequest> exact = std::nullopt);

/// Least ell >= 1 with log p_{m+ell} - log p_{m+1} >= log_eta, looking no
/// further than index cap.
std::optional<std::uint64_t> least_ell_exact(const cf::CFExpansion& cf, std::size_t m, double log_eta,
                                             std::size_t cap);

enum class BoundMode { automatic, exact, estimate };
enum class Provenance { exact_convergent, growth_rate_estimate };
std::string to_string(BoundMode m);
std::string to_string(Provenance p);
BoundMode parse_bound_mode(const std::string& s);

struct BoundReport {
  double epsilon = 0.0;
  std::size_t m = 0;
  double threshold = 0.0; // L^16 alpha^2
  double L = 0.0;         // log(2 alpha B)
  double ell = 0.0;
  bool ell_exact_integer = false;
  bool ell_overridden = false;
  double log_p_m_ell = 0.0;
  Provenance provenance = Provenance::exact_convergent;
  double log_bound = 0.0;
  double log10_bound = 0.0;
};

/// log of L^(35-16 eps) alpha^(2(1-eps)) B p_{m+ell}^(1+eps). Exact
/// convergents are used while m + ell <= cap, the growth rate of a periodic
/// expansion beyond. NotPeriodic when an estimate is needed but impossible,
/// RangeTooLarge when exact mode cannot enumerate, EpsilonOutOfRange when
/// 35 - 16 eps <= 0 or (without an override) eps is not admissible.
BoundReport headline_log_bound(const reals::BeattyParams& params, double epsilon,
                               std::optional<std::uint64_t> ell_override = std::nullopt,
                               BoundMode mode = BoundMode::automatic,
                               std::size_t cap = default_enumeration_cap,
                               unsigned guard_digits = reals::default_guard_digits);

/// 0.73 N/alpha > |E| + 1.81 N^(1/2) + 1.04 (alpha + beta - 1), |E| the
/// chi-sum bound with delta = 1/(2 alpha) and q = conv.p. Log-space record.
/// PreconditionViolated unless |1/alpha - conv.q/conv.p| < 1/conv.p^2.
VerificationRecord certify_prime_below(const reals::BeattyParams& params, std::uint64_t N,
                                       const cf::Convergent& conv, double epsilon);

/// The same inequality for N = e^log_N, q = e^log_q without the
/// approximation check; for astronomically large probes.
VerificationRecord certify_prime_below_log(const reals::BeattyParams& params, double log_N, double log_q,
                                           double epsilon);

/// The three-term inequality in eta that guarantees a prime; log-space record.
VerificationRecord check_eta_inequality(const reals::BeattyParams& params, double epsilon,
                                             double log_eta);

/// log N and log q of the ansatz q = L^16 alpha^2 eta, N = L^35 alpha^2 B q eta^eps.
struct Ansatz {
  double log_q = 0.0;
  double log_N = 0.0;
};
Ansatz ansatz(const reals::BeattyParams& params, double epsilon, double log_eta);

} // namespace beattylab::bounds

namespace beattylab::bounds {

/// log of 10^3 S^8 (3422 N q^-1/2 + 251 N^3/4 + 38 (delta N q)^1/2
///   + (11 + M/17^3) (N q/delta)^(3 eps/4) delta^(2/5) N^(4/5 + eps)),
/// S = log(N q/delta), with log M = log_M.
double log_chi_sum_bound(double log_N, double log_q, double log_delta, double epsilon, double log_M);

} // namespace beattylab::bounds
