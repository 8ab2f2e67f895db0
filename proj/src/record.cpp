#include "beattylab/record.hpp"

#include <cmath>
#include <cstdio>

namespace beattylab {

VerificationRecord VerificationRecord::make(std::string check_id, ParamMap params, double lhs, double rhs) {
  VerificationRecord r;
  r.check_id = std::move(check_id);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  // inf - inf is nan; equal infinities count as a tie
  r.margin = (lhs == rhs) ? 0.0 : rhs - lhs;
  r.pass = r.margin >= 0.0;
  return r;
}

std::string format_number(double x) {
  if (std::isnan(x))
    return "nan";
  if (std::isinf(x))
    return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_params(const ParamMap& params) {
  std::string out;
  for (const auto& [key, value] : params) {
    if (!out.empty())
      out += ';';
    out += key;
    out += '=';
    if (const auto* i = std::get_if<std::int64_t>(&value))
      out += std::to_string(*i);
    else if (const auto* d = std::get_if<double>(&value))
      out += format_number(*d);
    else
      out += std::get<std::string>(value);
  }
  return out;
}

bool record_less(const VerificationRecord& a, const VerificationRecord& b) {
  if (a.check_id != b.check_id)
    return a.check_id < b.check_id;
  return format_params(a.params) < format_params(b.params);
}

} // namespace beattylab
