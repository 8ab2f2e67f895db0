#include "beattylab/errors.hpp"

namespace beattylab {

std::string_view to_string(errc code) {
  switch (code) {
  case errc::precision_exhausted: return "PrecisionExhausted";
  case errc::index_beyond_certified: return "IndexBeyondCertified";
  case errc::threshold_below_first_numerator: return "ThresholdBelowFirstNumerator";
  case errc::expansion_too_short: return "ExpansionTooShort";
  case errc::not_periodic: return "NotPeriodic";
  case errc::range_too_large: return "RangeTooLarge";
  case errc::epsilon_out_of_range: return "EpsilonOutOfRange";
  case errc::not_coprime: return "NotCoprime";
  case errc::precondition_violated: return "PreconditionViolated";
  case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

} // namespace beattylab
