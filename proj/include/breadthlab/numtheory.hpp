#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace breadthlab {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct PrimePower {
  u64 prime;
  unsigned exponent;

  bool operator==(const PrimePower&) const = default;
};

/// Prime factorization sorted by strictly increasing prime.
using Factorization = std::vector<PrimePower>;

/// Trial-division factorization. Throws DomainError for n == 0.
Factorization factorize(u64 n);

/// All divisors of n in ascending order. Throws DomainError for n == 0.
std::vector<u64> divisors(u64 n);

/// Euler's totient. Throws DomainError for n == 0.
u64 euler_phi(u64 n);

bool is_prime(u64 n);

/// Returns (p, e) when q = p^e with e >= 1, nullopt otherwise (including q <= 1).
std::optional<PrimePower> as_prime_power(u64 q);

/// Sorted prime divisors of n.
std::vector<u64> prime_divisors(u64 n);

/// The largest power of p dividing n.
u64 p_part(u64 n, u64 p);

/// b^e, throwing DomainError on 64-bit overflow.
u64 checked_pow(u64 base, unsigned exp);

u64 product(const Factorization& f);

}  // namespace breadthlab
