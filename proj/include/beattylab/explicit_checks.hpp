#pragma once

// Exhaustive checks of explicit constants: divisor bounds, running sums of
// d_3(x)^2 and d(x)^2, Chebyshev-function inequalities and a Mertens-type
// product. Violations come back as failing records, never as exceptions.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "beattylab/arith.hpp"
#include "beattylab/record.hpp"

namespace beattylab::checks {

struct InequalityCheckConfig {
  std::uint64_t x_max = 100000;
  // where the analytic argument takes over from the computer
  std::map<std::string, double> thresholds = {
      {"d3sq", 6100}, {"dsq", 171}, {"theta", 41}, {"dyadic_trivial", 40000}, {"chi_trivial", 28e22}};
  std::size_t segment_size = arith::default_segment_size;

  /// PreconditionViolated unless x_max >= 2.
  void validate() const;
};

/// d(x) <= min{139 x^(1/6), 9 x^(1/4), 2 x^(1/2)} for x <= x_max; lhs is the
/// largest ratio d(x)/bound attained.
VerificationRecord verify_divisor_pointwise(std::uint64_t x_max,
                                            std::size_t segment_size = arith::default_segment_size);

/// sum_{x <= X} d_3(x)^2 <= 3000 X (log X)^8 for every X in [2, x_max]: a
/// summary record (largest ratio) followed by one record per violating X.
std::vector<VerificationRecord> verify_d3_square_sum(std::uint64_t x_max,
                                                     std::size_t segment_size = arith::default_segment_size);

/// sum_{x <= X} d(x)^2 <= 7 X (log X)^3, reported like the d_3 version.
std::vector<VerificationRecord> verify_d_square_sum(std::uint64_t x_max,
                                                    std::size_t segment_size = arith::default_segment_size);

/// psi(N) <= 1.03883 N; theta(N) > N - N/log N from 41 on;
/// pi(N^(1/2)) log N < (1 + 3/log N) N^(1/2) as stated, and the sum over
/// higher prime powers psi - theta against the same right side;
/// prod_{p <= X} (1 + 1/p) < exp(1/log^2 X + 1/2 + 0.26149...) log X.
std::vector<VerificationRecord> verify_rosser_schoenfeld(std::uint64_t n_max,
                                                         std::size_t segment_size = arith::default_segment_size);

/// Runs one named check ("divisor", "d3sq", "dsq", "rs").
std::vector<VerificationRecord> run_check(const std::string& name, const InequalityCheckConfig& config);

} // namespace beattylab::checks
