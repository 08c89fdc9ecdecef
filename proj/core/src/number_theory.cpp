#include "cyclotome/number_theory.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "cyclotome/error.hpp"

namespace cyclotome {

namespace {

constexpr std::uint64_t kTrialLimit = 1'000'000;

std::uint64_t pollard_rho(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  // Brent's cycle detection with batched gcds.
  for (std::uint64_t c = 1;; ++c) {
    auto step = [&](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    constexpr std::uint64_t batch = 128;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      for (std::uint64_t k = 0; k < r && g == 1; k += batch) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(batch, r - k); ++i) {
          y = step(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_rec(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  std::uint64_t d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

__extension__ using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp, std::uint64_t limit) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && result > limit / base) return std::nullopt;
    result *= base;
  }
  if (result > limit) return std::nullopt;
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned r = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++r;
  }
  // This base set is a witness set for all n < 2^64.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> factorize(std::uint64_t n, std::uint64_t bound) {
  if (n == 0 || n > bound) {
    throw Error(ErrorCode::OutOfRange, "cannot factorize " + std::to_string(n));
  }
  static const std::vector<std::uint32_t> small_primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<std::uint32_t> ps;
    for (std::uint64_t d = 2; d <= kTrialLimit; ++d) {
      if (composite[d]) continue;
      ps.push_back(static_cast<std::uint32_t>(d));
      for (std::uint64_t m = d * d; m <= kTrialLimit; m += d) composite[m] = true;
    }
    return ps;
  }();
  std::vector<std::uint64_t> out;
  for (const std::uint64_t d : small_primes) {
    if (d * d > n) break;
    if (n % d != 0) continue;
    do {
      out.push_back(d);
      n /= d;
    } while (n % d == 0);
    if (is_prime(n)) break;
  }
  if (n > 1) {
    std::vector<std::uint64_t> rest;
    factor_rec(n, rest);
    out.insert(out.end(), rest.begin(), rest.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  auto f = factorize(n);
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  auto f = factorize(n);
  for (std::size_t i = 0; i < f.size();) {
    std::size_t j = i;
    while (j < f.size() && f[j] == f[i]) ++j;
    const std::size_t base_count = out.size();
    std::uint64_t pk = 1;
    for (std::size_t e = i; e < j; ++e) {
      pk *= f[i];
      for (std::size_t b = 0; b < base_count; ++b) out.push_back(out[b] * pk);
    }
    i = j;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<PrimePower> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  auto f = factorize(q);
  if (f.front() != f.back()) return std::nullopt;
  return PrimePower{f.front(), static_cast<unsigned>(f.size())};
}

std::uint64_t least_primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  const auto primes = prime_divisors(p - 1);
  for (std::uint64_t g = 2;; ++g) {
    if (std::all_of(primes.begin(), primes.end(),
                    [&](std::uint64_t l) { return powmod(g, (p - 1) / l, p) != 1; })) {
      return g;
    }
  }
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m < 2 || std::gcd(a, m) != 1) {
    throw Error(ErrorCode::InvalidParams, "order of " + std::to_string(a) + " mod " +
                                              std::to_string(m) + " undefined");
  }
  // phi(m) from the factorization, then strip prime factors while the power stays 1.
  std::uint64_t phi = m;
  for (auto p : prime_divisors(m)) phi = phi / p * (p - 1);
  std::uint64_t ord = phi;
  for (auto p : prime_divisors(phi)) {
    while (ord % p == 0 && powmod(a, ord / p, m) == 1) ord /= p;
  }
  return ord;
}

}  // namespace cyclotome
