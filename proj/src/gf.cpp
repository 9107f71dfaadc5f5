#include "breadthlab/gf.hpp"

#include <cassert>

#include "breadthlab/error.hpp"

namespace breadthlab {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial f.
Poly poly_mod(Poly a, const Poly& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  while (a.size() > df) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * std::uint64_t{f[i]}) % p);
    trim(a);
  }
  return a;
}

Poly digits(std::uint32_t index, std::uint32_t p, unsigned m) {
  Poly d(m, 0);
  for (unsigned i = 0; i < m; ++i) {
    d[i] = index % p;
    index /= p;
  }
  return d;
}

std::uint32_t encode(const Poly& a, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
  return v;
}

std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, const Poly& f, std::uint32_t p, unsigned m) {
  const Poly da = digits(a, p, m), db = digits(b, p, m);
  Poly prod(2 * m, 0);
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p);
  return encode(poly_mod(std::move(prod), f, p), p);
}

std::uint32_t slow_pow(std::uint32_t a, u64 e, const Poly& f, std::uint32_t p, unsigned m) {
  std::uint32_t r = 1;
  while (e) {
    if (e & 1) r = slow_mul(r, a, f, p, m);
    a = slow_mul(a, a, f, p, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_irreducible(const std::vector<std::uint32_t>& monic, std::uint32_t p) {
  const std::size_t deg = monic.size() - 1;
  if (deg <= 1) return deg == 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly g = digits(static_cast<std::uint32_t>(low), p, static_cast<unsigned>(d));
      g.push_back(1);
      if (poly_mod(monic, g, p).empty()) return false;
    }
  }
  return true;
}

FieldSpec FieldSpec::make(u64 p, unsigned m) {
  if (!is_prime(p)) throw DomainError("field_make: p = " + std::to_string(p) + " is not prime");
  if (m == 0) throw DomainError("field_make: extension degree must be >= 1");
  u64 q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) throw DomainError("field_make: q exceeds 2^20");
  }

  FieldSpec F;
  F.p_ = static_cast<std::uint32_t>(p);
  F.m_ = m;
  F.q_ = static_cast<std::uint32_t>(q);

  for (std::uint32_t low = 0; low < F.q_; ++low) {
    Poly f = digits(low, F.p_, m);
    f.push_back(1);
    if (is_irreducible(f, F.p_)) {
      F.modulus_ = std::move(f);
      break;
    }
  }
  if (F.modulus_.empty()) throw InvariantViolation("field_make: no irreducible polynomial found");

  const u64 group = q - 1;
  const auto primes = prime_divisors(group == 0 ? 1 : group);
  for (std::uint32_t g = 1; g < F.q_; ++g) {
    bool primitive = true;
    for (u64 r : primes)
      if (slow_pow(g, group / r, F.modulus_, F.p_, m) == 1) {
        primitive = false;
        break;
      }
    if (primitive) {
      F.primitive_ = g;
      break;
    }
  }
  if (F.primitive_ == 0) throw InvariantViolation("field_make: no primitive element");

  auto tables = std::make_shared<Tables>();
  tables->exp.resize(2 * group);
  tables->log.assign(F.q_, 0);
  std::uint32_t x = 1;
  for (u64 i = 0; i < group; ++i) {
    tables->exp[i] = x;
    tables->exp[i + group] = x;
    tables->log[x] = static_cast<std::uint32_t>(i);
    x = slow_mul(x, F.primitive_, F.modulus_, F.p_, m);
  }
  if (x != 1) throw InvariantViolation("field_make: primitive element has wrong order");
  F.tables_ = std::move(tables);
  return F;
}

FieldSpec FieldSpec::of_order(u64 q) {
  const auto pp = as_prime_power(q);
  if (!pp) throw DomainError("field order " + std::to_string(q) + " is not a prime power");
  return make(pp->prime, pp->exponent);
}

FieldElem FieldSpec::element(std::uint32_t index) const {
  if (index >= q_) throw DomainError("field element index out of range");
  return FieldElem{index};
}

FieldElem FieldSpec::add(FieldElem a, FieldElem b) const {
  std::uint32_t x = index_of(a), y = index_of(b);
  if (p_ == 2) return FieldElem{x ^ y};
  std::uint32_t r = 0, scale = 1;
  for (unsigned i = 0; i < m_; ++i) {
    r += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return FieldElem{r};
}

FieldElem FieldSpec::neg(FieldElem a) const {
  std::uint32_t x = index_of(a);
  if (p_ == 2) return a;
  std::uint32_t r = 0, scale = 1;
  for (unsigned i = 0; i < m_; ++i) {
    r += ((p_ - x % p_) % p_) * scale;
    x /= p_;
    scale *= p_;
  }
  return FieldElem{r};
}

FieldElem FieldSpec::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem FieldSpec::mul(FieldElem a, FieldElem b) const {
  const std::uint32_t x = index_of(a), y = index_of(b);
  if (x == 0 || y == 0) return FieldElem{0};
  const auto& t = *tables_;
  return FieldElem{t.exp[t.log[x] + t.log[y]]};
}

FieldElem FieldSpec::inv(FieldElem a) const {
  const std::uint32_t x = index_of(a);
  if (x == 0) throw DomainError("field inverse of zero");
  const auto& t = *tables_;
  const std::uint32_t l = t.log[x];
  return FieldElem{t.exp[l == 0 ? 0 : (q_ - 1) - l]};
}

FieldElem FieldSpec::pow(FieldElem a, u64 e) const {
  const std::uint32_t x = index_of(a);
  if (e == 0) return FieldElem{1};
  if (x == 0) return FieldElem{0};
  const auto& t = *tables_;
  const u64 l = (u64{t.log[x]} * (e % (q_ - 1))) % (q_ - 1);
  return FieldElem{t.exp[l]};
}

u64 FieldSpec::mult_order(FieldElem a) const {
  if (index_of(a) == 0) throw DomainError("multiplicative order of zero");
  const u64 group = q_ - 1;
  u64 ord = group;
  for (u64 r : prime_divisors(group == 0 ? 1 : group))
    while (ord % r == 0 && index_of(pow(a, ord / r)) == 1) ord /= r;
  return ord;
}

FieldElem FieldSpec::theta(FieldElem t) const {
  if (p_ != 2 || m_ % 2 == 0)
    throw DomainError("theta requires GF(2^(2n+1))");
  const unsigned n = (m_ - 1) / 2;
  return pow(t, u64{1} << (n + 1));
}

}  // namespace breadthlab
