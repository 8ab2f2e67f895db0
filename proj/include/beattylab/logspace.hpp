#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>

namespace beattylab {

inline constexpr double neg_inf = -std::numeric_limits<double>::infinity();

/// log(sum exp(x_i)); -inf terms drop out.
inline double log_sum_exp(std::initializer_list<double> xs) {
  double m = neg_inf;
  for (double x : xs)
    m = std::max(m, x);
  if (m == neg_inf || std::isinf(m))
    return m;
  double s = 0.0;
  for (double x : xs)
    s += std::exp(x - m);
  return m + std::log(s);
}

/// log of a positive value, -inf for zero.
inline double safe_log(double x) { return x > 0 ? std::log(x) : neg_inf; }

} // namespace beattylab
