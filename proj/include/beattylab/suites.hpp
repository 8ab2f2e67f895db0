#pragma once

// Seeded batteries of verification records. Equal seeds give equal
// records, whatever the worker count.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "beattylab/real_spec.hpp"
#include "beattylab/record.hpp"

namespace beattylab::suites {

struct SuiteConfig {
  std::uint64_t seed = 1;
  std::uint64_t n = 5000; // largest N summed to
  unsigned cases = 10;
  unsigned workers = 1;
  double epsilon = 0.1;
};

class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t below(std::uint64_t n) { return gen_() % n; }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

private:
  std::mt19937_64 gen_;
};

/// (P + sqrt D)/Q with D non-square, P in [0, 9], Q in [1, 6].
reals::RealSpec random_surd(Rng& rng);
/// A random surd exceeding min_value.
reals::RealSpec random_surd_above(Rng& rng, double min_value);

const std::vector<std::string>& vaughan_suite_names();

/// One of vaughan_suite_names(); ParseError otherwise.
std::vector<VerificationRecord> vaughan_suite(const std::string& name, const SuiteConfig& config);

/// The default battery behind `report`.
std::vector<VerificationRecord> full_report(const SuiteConfig& config);

} // namespace beattylab::suites
