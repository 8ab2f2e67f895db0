#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace beattylab {

enum class errc {
  precision_exhausted,
  index_beyond_certified,
  threshold_below_first_numerator,
  expansion_too_short,
  not_periodic,
  range_too_large,
  epsilon_out_of_range,
  not_coprime,
  precondition_violated,
  parse_error,
};

std::string_view to_string(errc code);

// Every failure raised by the library carries one of the codes above so
// callers (and tests) can branch on the kind rather than the message.
class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool cond, errc code, const char* what) {
  if (!cond)
    fail(code, what);
}

} // namespace beattylab
