#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "breadthlab/numtheory.hpp"

namespace breadthlab {

/// Element of GF(p^m), encoded as the base-p value of its coefficient vector
/// (constant term is the least significant digit). 0 and 1 encode themselves.
enum class FieldElem : std::uint32_t {};

constexpr std::uint32_t index_of(FieldElem e) { return static_cast<std::uint32_t>(e); }
constexpr FieldElem field_elem(std::uint32_t i) { return FieldElem{i}; }

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 20;

/// GF(p^m) modelled as GF(p)[x]/(f) with f the monic irreducible of degree m
/// whose lower coefficients have the smallest base-p encoding. Immutable;
/// copies share the log/antilog tables.
class FieldSpec {
 public:
  /// Throws DomainError if p is not prime, m == 0 or p^m > 2^20.
  static FieldSpec make(u64 p, unsigned m);

  /// Convenience for a prime power q.
  static FieldSpec of_order(u64 q);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return m_; }
  std::uint32_t order() const { return q_; }

  /// Coefficients of the modulus, constant term first; length degree() + 1, last entry 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElem zero() const { return FieldElem{0}; }
  FieldElem one() const { return FieldElem{1}; }

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const;
  FieldElem neg(FieldElem a) const;
  FieldElem mul(FieldElem a, FieldElem b) const;
  /// Throws DomainError on zero.
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
  /// a^e with 0^0 = 1.
  FieldElem pow(FieldElem a, u64 e) const;

  /// Multiplicative order of a nonzero element.
  u64 mult_order(FieldElem a) const;

  /// Smallest-index element of multiplicative order q - 1.
  FieldElem primitive_element() const { return FieldElem{primitive_}; }

  /// The Suzuki twist t -> t^(2^(n+1)) for q = 2^(2n+1). Throws DomainError
  /// unless the characteristic is 2 and the degree is odd.
  FieldElem theta(FieldElem t) const;

  /// Checks 0 <= index < q.
  FieldElem element(std::uint32_t index) const;

 private:
  struct Tables {
    std::vector<std::uint32_t> exp;  // exp[i] = g^i, length 2(q-1)
    std::vector<std::uint32_t> log;  // log[x] for x != 0
  };

  FieldSpec() = default;

  std::uint32_t p_ = 0;
  unsigned m_ = 0;
  std::uint32_t q_ = 0;
  std::uint32_t primitive_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::shared_ptr<const Tables> tables_;
};

/// True iff the monic polynomial (coefficients constant-first) is irreducible
/// over GF(p), decided by trial division with every monic polynomial of degree
/// 1..deg/2.
bool is_irreducible(const std::vector<std::uint32_t>& monic, std::uint32_t p);

}  // namespace breadthlab
