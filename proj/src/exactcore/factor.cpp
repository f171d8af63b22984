#include "factor.hpp"

#include <algorithm>
#include <map>

namespace rbmod::detail {

namespace {

constexpr unsigned long kTrialLimit = 20000;

bool probably_prime(const mpz_class& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// Pollard-Brent; n is odd, composite and has no factor below kTrialLimit.
mpz_class pollard_brent(const mpz_class& n) {
  for (unsigned long c = 1;; ++c) {
    mpz_class y = 2;
    mpz_class x;
    mpz_class g = 1;
    mpz_class q = 1;
    mpz_class ys;
    unsigned long r = 1;
    constexpr unsigned long m = 64;
    auto f = [&](const mpz_class& v) { return mpz_class((v * v + c) % n); };
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = (q * abs(x - y)) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        mpz_class diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const mpz_class& n, std::map<mpz_class, unsigned>& out) {
  if (n == 1) return;
  if (probably_prime(n)) {
    ++out[n];
    return;
  }
  const mpz_class d = pollard_brent(n);
  factor_into(d, out);
  factor_into(mpz_class(n / d), out);
}

}  // namespace

std::vector<mpz_class> divisors(const mpz_class& value) {
  mpz_class n = abs(value);
  std::map<mpz_class, unsigned> primes;
  for (unsigned long p = 2; p <= kTrialLimit && mpz_class(p) * p <= n; ++p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      ++primes[mpz_class(p)];
      n /= p;
    }
  }
  factor_into(n, primes);

  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : primes) {
    const std::size_t base = divs.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace rbmod::detail
