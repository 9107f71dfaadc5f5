#include "breadthlab/numtheory.hpp"

#include <algorithm>
#include <limits>

#include "breadthlab/error.hpp"

namespace breadthlab {

namespace {

void require_positive(u64 n, const char* op) {
  if (n == 0) throw DomainError(std::string(op) + ": argument must be >= 1");
}

}  // namespace

Factorization factorize(u64 n) {
  require_positive(n, "factorize");
  Factorization out;
  for (u64 p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<u64> divisors(u64 n) {
  require_positive(n, "divisors");
  std::vector<u64> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    u64 pk = 1;
    for (unsigned i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 euler_phi(u64 n) {
  require_positive(n, "euler_phi");
  u64 phi = n;
  for (const auto& pe : factorize(n)) phi = phi / pe.prime * (pe.prime - 1);
  return phi;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::optional<PrimePower> as_prime_power(u64 q) {
  if (q < 2) return std::nullopt;
  const auto f = factorize(q);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (const auto& pe : factorize(n)) out.push_back(pe.prime);
  return out;
}

u64 p_part(u64 n, u64 p) {
  require_positive(n, "p_part");
  u64 r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

u64 checked_pow(u64 base, unsigned exp) {
  u64 r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<u64>::max() / base)
      throw DomainError("checked_pow: 64-bit overflow");
    r *= base;
  }
  return r;
}

u64 product(const Factorization& f) {
  u64 r = 1;
  for (const auto& [p, e] : f) r *= checked_pow(p, e);
  return r;
}

}  // namespace breadthlab
