#pragma once

// Every explicit constant of the bounds, in one table.

namespace beattylab::constants {

// psi(N) <= c0 N
inline constexpr double c0 = 1.03883;
// Mertens-type product: prod_{p <= X} (1 + 1/p) < exp(1/log^2 X + 1/2 + mertens) log X
inline constexpr double mertens = 0.2614972128;

// prime certification: 0.73 N/alpha > |E| + 1.81 N^(1/2) + 1.04 (alpha + beta - 1)
inline constexpr double cert_main = 0.73;
inline constexpr double cert_sqrt = 1.81;
inline constexpr double cert_linear = 1.04;
inline constexpr double rs_theta_from = 41; // theta(N) > N - N/log N from here on

// the same after the ansatz N = L^35 alpha^2 B q eta^eps, q = L^16 alpha^2 eta
inline constexpr double ansatz_N_L = 35;
inline constexpr double ansatz_q_L = 16;
inline constexpr double t1_L = -51.0 / 2;
inline constexpr double t2_L = -51;
inline constexpr double scriptL_L = 67;
inline constexpr double scriptL_alpha = 7;
inline constexpr double c_E = 1e3;
inline constexpr double bracket_main = 3711;
inline constexpr double bracket_M = 2.0 / 4913; // 2 * 17^-3

// ell and eta_0
inline constexpr double ell_base = 3;
inline constexpr double ell_factor = 9;
inline constexpr double ell_const = 41;
inline constexpr double eta_two_e3 = 2e3;
inline constexpr double eta_65 = 65;
inline constexpr double eps_max_num = 44;
inline constexpr double eps_max_den = 2025;

// exponential sum over the chi_delta indicator
inline constexpr double th3_q = 3422;
inline constexpr double th3_N34 = 251;
inline constexpr double th3_dNq = 38;
inline constexpr double th3_M0 = 11;
inline constexpr double th3_M1 = 1.0 / 4913; // 17^-3

// dyadic block sum over J <= j < J'
inline constexpr double dy_q = 560;
inline constexpr double dy_N34 = 41;
inline constexpr double dy_JNq = 86;
inline constexpr double dy_M0 = 21;
inline constexpr double dy_M1 = 1e-7;

// S(H)
inline constexpr double sh_q = 1120;
inline constexpr double sh_N34 = 82;
inline constexpr double sh_HNq = 294;
inline constexpr double sh_M0 = 62;
inline constexpr double sh_M1 = 1e-6;

// divisor bounds
inline constexpr double d_sixth = 139;
inline constexpr double d_quarter = 9;
inline constexpr double d_half = 2;
inline constexpr double d3sq = 3000;
inline constexpr double dsq = 7;
inline constexpr double d3sq_analytic_from = 6100;
inline constexpr double dsq_analytic_from = 171;

} // namespace beattylab::constants
