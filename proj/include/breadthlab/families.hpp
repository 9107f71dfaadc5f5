#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "breadthlab/group.hpp"

namespace breadthlab {

// Every constructor checks the order of the group it built against the
// family's order formula and throws InvariantViolation on disagreement.
// Constructors throw CapExceeded before enumerating when the formula order
// exceeds `cap`, and DomainError for parameters outside their range.

Group cyclic(u64 n, u64 cap = kDefaultCap);
/// Dihedral group of order two_n (symmetries of the two_n/2-gon).
Group dihedral(u64 two_n, u64 cap = kDefaultCap);
Group quaternion8();
Group symmetric(u64 n, u64 cap = kDefaultCap);
Group alternating(u64 n, u64 cap = kDefaultCap);

/// Hol(C_p) = C_p x| C_{p-1}, as x -> ax + b on Z/p.
Group hol_cyclic(u64 p, u64 cap = kDefaultCap);
/// C_p x| C_d with d | p - 1: a restricted to the order-d subgroup of (Z/p)^*.
Group hol_sub(u64 p, u64 d, u64 cap = kDefaultCap);

/// Aff(F_q) = {x -> ax + b : a != 0} acting on the q field elements.
Group affine_field(u64 q, u64 cap = kDefaultCap);

/// N x| C_k with N the additive group of the product of fields GF(p_i^n_i)
/// and C_k acting by multiplication with elements of order k. Requires
/// p_i^n_i = 1 (mod k) for every factor.
Group frobenius_extension(const Factorization& s, u64 k, u64 cap = kDefaultCap);

/// Möbius actions on the q + 1 points of the projective line; infinity is point q.
Group psl2(u64 q, u64 cap = kDefaultCap);
Group pgl2(u64 q, u64 cap = kDefaultCap);

/// Sz(q), q = 2^(2n+1), on the q^2 + 1 points of its ovoid. q = 32 requires
/// allow_large (tens of GB of element table).
Group suzuki(u64 q, bool allow_large = false, u64 cap = kDefaultCap);

/// SL(2,3) and GL(2,3) on the 8 nonzero vectors of GF(3)^2.
Group sl23();
Group gl23();

/// Formula orders, used for the pre-enumeration cap check.
u64 psl2_order(u64 q);
u64 pgl2_order(u64 q);
u64 suzuki_order(u64 q);

// ------------------------------------------------------------ family specs

/// One factor of a family expression, e.g. {"holsub", {7, 3}}.
struct FamilyId {
  std::string tag;
  std::vector<u64> params;

  bool operator==(const FamilyId&) const = default;
};

/// A direct product of one or more family factors.
using FamilyExpr = std::vector<FamilyId>;

/// Parses `cyclic:12`, `holsub:7:3`, `q8`, `dihedral:6xcyclic:3`, ...
/// Throws ParseError.
FamilyExpr parse_family(std::string_view spec);

std::string to_string(const FamilyId& id);
std::string to_string(const FamilyExpr& expr);

/// Formula order of the expression (throws DomainError on invalid parameters).
u128 expected_order(const FamilyExpr& expr);

Group build(const FamilyId& id, u64 cap = kDefaultCap, bool allow_large = false);
Group build(const FamilyExpr& expr, u64 cap = kDefaultCap, bool allow_large = false);

}  // namespace breadthlab
