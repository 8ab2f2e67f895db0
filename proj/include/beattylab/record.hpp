#pragma once

// One checked inequality lhs <= rhs. Checks evaluated in log space store
// log lhs and log rhs, and say so in their check_id.

#include <cstdint>
#include <map>
#include <string>
#include <variant>

namespace beattylab {

using ParamValue = std::variant<std::int64_t, double, std::string>;
using ParamMap = std::map<std::string, ParamValue>; // keys sorted, so canonical

struct VerificationRecord {
  std::string check_id;
  ParamMap params;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0; // rhs - lhs
  bool pass = false;   // margin >= 0

  static VerificationRecord make(std::string check_id, ParamMap params, double lhs, double rhs);
};

/// Canonical text of a parameter map: k1=v1;k2=v2 with %.17g numbers.
std::string format_params(const ParamMap& params);
std::string format_number(double x);

/// Ordering used by reports: check_id, then canonical params.
bool record_less(const VerificationRecord& a, const VerificationRecord& b);

} // namespace beattylab
