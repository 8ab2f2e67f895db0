#include "beattylab/arith.hpp"

#include <algorithm>
#include <cmath>

#include "beattylab/errors.hpp"

namespace beattylab::arith {

namespace {

std::uint64_t isqrt64(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n)
    --r;
  while ((r + 1) * (r + 1) <= n)
    ++r;
  return r;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (e > 0) {
    if (e & 1)
      result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return result;
}

} // namespace

std::vector<std::uint64_t> SieveSegment::primes() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = lo; n < hi; ++n)
    if (flags[n - lo])
      out.push_back(n);
  return out;
}

std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2)
    return primes;
  std::vector<std::uint8_t> composite(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i])
      continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i)
      composite[j] = 1;
  }
  return primes;
}

void scan_segments(std::uint64_t limit, const std::function<bool(const SieveSegment&)>& visit,
                   std::size_t segment_size) {
  if (limit < 2)
    return;
  require(segment_size > 0, errc::precondition_violated, "segment size must be positive");
  const auto base = small_primes(isqrt64(limit));
  SieveSegment seg;
  for (std::uint64_t lo = 1; lo <= limit; lo += segment_size) {
    const std::uint64_t hi = std::min<std::uint64_t>(lo + segment_size, limit + 1);
    seg.lo = lo;
    seg.hi = hi;
    seg.flags.assign(hi - lo, 1);
    if (lo == 1)
      seg.flags[0] = 0;
    for (std::uint64_t p : base) {
      if (p * p >= hi)
        break;
      std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
      for (std::uint64_t j = start; j < hi; j += p)
        seg.flags[j - lo] = 0;
    }
    if (!visit(seg))
      return;
  }
}

void for_each_segment(std::uint64_t limit, const std::function<void(const SieveSegment&)>& visit,
                      std::size_t segment_size) {
  scan_segments(
      limit,
      [&](const SieveSegment& s) {
        visit(s);
        return true;
      },
      segment_size);
}

std::vector<SieveSegment> sieve_primes(std::uint64_t limit, std::size_t segment_size) {
  std::vector<SieveSegment> out;
  for_each_segment(limit, [&](const SieveSegment& s) { out.push_back(s); }, segment_size);
  return out;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit, std::size_t segment_size) {
  std::vector<std::uint64_t> out;
  for_each_segment(
      limit,
      [&](const SieveSegment& s) {
        for (std::uint64_t n = s.lo; n < s.hi; ++n)
          if (s.flags[n - s.lo])
            out.push_back(n);
      },
      segment_size);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0)
      return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool witness = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness)
      return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n) {
  require(n >= 1, errc::precondition_violated, "factorize needs n >= 1");
  Factorization f;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0)
      continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.emplace_back(p, e);
  }
  if (n > 1)
    f.emplace_back(n, 1u);
  return f;
}

double von_mangoldt(std::uint64_t n) {
  require(n >= 1, errc::precondition_violated, "von_mangoldt needs n >= 1");
  const auto f = factorize(n);
  return f.size() == 1 ? std::log(static_cast<double>(f.front().first)) : 0.0;
}

int moebius(std::uint64_t n) {
  require(n >= 1, errc::precondition_violated, "moebius needs n >= 1");
  const auto f = factorize(n);
  for (const auto& [p, e] : f)
    if (e > 1)
      return 0;
  return f.size() % 2 == 0 ? 1 : -1;
}

mpz_class divisor_k(std::uint64_t n, unsigned k) {
  require(n >= 1, errc::precondition_violated, "divisor_k needs n >= 1");
  require(k >= 1, errc::precondition_violated, "divisor_k needs k >= 1");
  mpz_class result = 1;
  for (const auto& [p, e] : factorize(n)) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), e + k - 1, k - 1);
    result *= b;
  }
  return result;
}

std::uint64_t divisor_k_local(unsigned k, unsigned e) {
  // C(e + k - 1, k - 1), exact for the small arguments sieves produce
  std::uint64_t r = 1;
  for (unsigned i = 1; i < k; ++i)
    r = r * (e + i) / i;
  return r;
}

std::vector<std::pair<std::uint64_t, double>> prime_power_table(std::uint64_t limit) {
  std::vector<std::pair<std::uint64_t, double>> out;
  if (limit < 2)
    return out;
  for (std::uint64_t p : primes_up_to(limit)) {
    const double lp = std::log(static_cast<double>(p));
    for (std::uint64_t q = p;; q *= p) {
      out.emplace_back(q, lp);
      if (q > limit / p)
        break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_lambda_segment(std::uint64_t limit,
                             const std::function<void(std::uint64_t, std::span<const double>)>& visit,
                             std::size_t segment_size) {
  if (limit < 1)
    return;
  // higher powers p^k (k >= 2) need p <= sqrt(limit)
  std::vector<std::pair<std::uint64_t, double>> powers;
  for (std::uint64_t p : small_primes(isqrt64(limit))) {
    const double lp = std::log(static_cast<double>(p));
    for (std::uint64_t q = p; q <= limit / p;) {
      q *= p;
      powers.emplace_back(q, lp);
    }
  }
  std::sort(powers.begin(), powers.end());

  std::vector<double> values;
  if (limit == 1) {
    values.assign(1, 0.0);
    visit(1, values);
    return;
  }
  auto next_power = powers.begin();
  for_each_segment(
      limit,
      [&](const SieveSegment& s) {
        values.assign(s.hi - s.lo, 0.0);
        for (std::uint64_t n = s.lo; n < s.hi; ++n)
          if (s.flags[n - s.lo])
            values[n - s.lo] = std::log(static_cast<double>(n));
        for (; next_power != powers.end() && next_power->first < s.hi; ++next_power)
          values[next_power->first - s.lo] = next_power->second;
        visit(s.lo, values);
      },
      segment_size);
}

void for_each_multiplicative(std::uint64_t limit,
                             const std::function<std::uint64_t(std::uint64_t, unsigned)>& local,
                             const std::function<void(std::uint64_t, std::span<const std::uint64_t>)>& visit,
                             std::size_t segment_size) {
  if (limit < 1)
    return;
  const auto base = small_primes(isqrt64(limit));
  std::vector<std::uint64_t> rest;
  std::vector<std::uint64_t> value;
  for (std::uint64_t lo = 1; lo <= limit; lo += segment_size) {
    const std::uint64_t hi = std::min<std::uint64_t>(lo + segment_size, limit + 1);
    rest.resize(hi - lo);
    value.assign(hi - lo, 1);
    for (std::uint64_t n = lo; n < hi; ++n)
      rest[n - lo] = n;
    for (std::uint64_t p : base) {
      if (p * p >= hi)
        break;
      for (std::uint64_t j = (lo + p - 1) / p * p; j < hi; j += p) {
        std::uint64_t& r = rest[j - lo];
        unsigned e = 0;
        while (r % p == 0) {
          r /= p;
          ++e;
        }
        value[j - lo] *= local(p, e);
      }
    }
    for (std::size_t i = 0; i < rest.size(); ++i)
      if (rest[i] > 1)
        value[i] *= local(rest[i], 1);
    visit(lo, value);
  }
}

std::vector<std::uint64_t> multiplicative_table(std::uint64_t limit,
                                                const std::function<std::uint64_t(std::uint64_t, unsigned)>& local) {
  std::vector<std::uint64_t> table(limit + 1, 0);
  for_each_multiplicative(limit, local, [&](std::uint64_t lo, std::span<const std::uint64_t> v) {
    std::copy(v.begin(), v.end(), table.begin() + static_cast<std::ptrdiff_t>(lo));
  });
  return table;
}

std::vector<int> moebius_table(std::uint64_t limit) {
  std::vector<int> mu(limit + 1, 0);
  std::vector<std::uint8_t> sign(limit + 1, 0);
  std::vector<std::uint8_t> squareful(limit + 1, 0);
  for (std::uint64_t p : small_primes(limit)) {
    for (std::uint64_t j = p; j <= limit; j += p)
      sign[j] ^= 1;
    if (p <= limit / p)
      for (std::uint64_t j = p * p; j <= limit; j += p * p)
        squareful[j] = 1;
  }
  for (std::uint64_t n = 1; n <= limit; ++n)
    mu[n] = squareful[n] ? 0 : (sign[n] ? -1 : 1);
  return mu;
}

ArithSummary chebyshev(std::uint64_t N) {
  require(N >= 1, errc::precondition_violated, "chebyshev needs N >= 1");
  ArithSummary s;
  s.N = N;
  double psi = 0.0, psi_c = 0.0, theta = 0.0, theta_c = 0.0;
  auto kahan = [](double& sum, double& c, double x) {
    const double y = x - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  };
  for_each_segment(N, [&](const SieveSegment& seg) {
    for (std::uint64_t n = seg.lo; n < seg.hi; ++n) {
      if (!seg.flags[n - seg.lo])
        continue;
      ++s.pi_count;
      const double lp = std::log(static_cast<double>(n));
      kahan(theta, theta_c, lp);
      for (std::uint64_t q = n;; q *= n) {
        kahan(psi, psi_c, lp);
        if (q > N / n)
          break;
      }
    }
  });
  s.psi = psi;
  s.theta = theta;
  return s;
}

mpz_class fibonacci(unsigned n) {
  mpz_class prev = 0, cur = 1;
  if (n == 0)
    return prev;
  for (unsigned i = 1; i < n; ++i) {
    mpz_class next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

} // namespace beattylab::arith
