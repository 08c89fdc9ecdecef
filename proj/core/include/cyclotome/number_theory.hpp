#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace cyclotome {

/// Largest input accepted by factorize() unless a smaller bound is given.
inline constexpr std::uint64_t kFactorBound = (std::uint64_t{1} << 63) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// base^exp, or nullopt when the result exceeds `limit`.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp,
                                         std::uint64_t limit = kFactorBound);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Prime factors of n with multiplicity, ascending. factorize(1) is empty.
/// Throws OutOfRange for n == 0 or n > bound.
std::vector<std::uint64_t> factorize(std::uint64_t n, std::uint64_t bound = kFactorBound);

/// Distinct prime divisors, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// All positive divisors, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

struct PrimePower {
  std::uint64_t p;
  unsigned s;
};

/// Decomposes q = p^s with p prime; nullopt when q is not a prime power.
std::optional<PrimePower> as_prime_power(std::uint64_t q);

/// Least generator of (Z/pZ)^*, p prime (1 for p = 2).
std::uint64_t least_primitive_root(std::uint64_t p);

/// Multiplicative order of a modulo m (gcd(a, m) must be 1, m >= 2).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

}  // namespace cyclotome
