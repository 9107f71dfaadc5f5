#pragma once

#include <map>
#include <span>
#include <vector>

#include "breadthlab/group.hpp"

namespace breadthlab {

/// Histogram of element orders: counts[d] = #{x : o(x) = d}.
struct OrderCensus {
  u64 group_order = 0;
  u64 exponent = 1;
  std::map<u64, u64> counts;

  /// O_d, zero when no element has order d.
  u64 count(u64 d) const;

  bool operator==(const OrderCensus&) const = default;
};

/// Counts perm_order over the element table, split across `jobs` workers.
/// The result does not depend on `jobs`.
OrderCensus order_census(const Group& g, unsigned jobs = 1);

/// Builds a census from raw counts (e.g. a cache file), checking that the
/// counts sum to the order, O_1 = 1 and every d divides the order.
/// Throws InvariantViolation.
OrderCensus make_census(u64 group_order, std::map<u64, u64> counts);

/// |L_k| = #{x : x^k = 1} = sum of O_m over m | k.
u64 l_count(const OrderCensus& c, u64 k);

/// b_k = |L_k| / k for k | |G|. DomainError if k does not divide |G|;
/// InvariantViolation if the division is not exact.
u64 local_breadth(const OrderCensus& c, u64 k);

/// c_d = O_d / phi(d), the number of cyclic subgroups of order d.
u64 cyclic_count(const OrderCensus& c, u64 d);

struct BreadthRow {
  u64 d;
  u64 c;  // cyclic subgroups of order d
  u64 L;  // |L_d|
  u64 b;  // local breadth

  bool operator==(const BreadthRow&) const = default;
};

struct BreadthReport {
  u64 group_order = 0;
  u64 exponent = 1;
  std::vector<BreadthRow> rows;  // one per divisor of |G|, ascending d
  u64 B = 0;
  std::vector<u64> argmax;  // every d | exp(G) with b_d = B, ascending
  std::vector<u64> maximal_cyclic_orders;
};

/// Global breadth: the maximum of b_k over k | exp(G). Rows still cover every
/// divisor of |G|. `maximal_cyclic_orders` is carried through unchanged.
BreadthReport global_breadth(const OrderCensus& c, std::vector<u64> maximal_cyclic_orders = {});

std::vector<BreadthRow> breadth_table(const OrderCensus& c);
std::vector<BreadthRow> breadth_table(const Group& g, unsigned jobs = 1);

struct FastBreadth {
  u64 B = 0;
  u64 witness_order = 0;       // smallest scanned order attaining B
  std::vector<u64> scanned;    // the maximal cyclic orders that were evaluated
};

enum class FastPath {
  require_partition,  // verify the maximal cyclic subgroups partition G nontrivially
  assume_applicable,  // caller vouches for applicability
};

/// Evaluates b_k only at the orders of maximal cyclic subgroups. With
/// require_partition, throws DomainError when G has no nontrivial
/// maximal-cyclic partition.
FastBreadth global_breadth_fast(const Group& g, FastPath mode = FastPath::require_partition);

/// Same scan given the census and maximal cyclic orders directly.
FastBreadth global_breadth_fast(const OrderCensus& c, std::span<const u64> maximal_cyclic_orders);

// -------------------------------------------------------------- closed forms

enum class ClosedFormFamily { psl2, pgl2, suzuki };

const char* family_name(ClosedFormFamily f);

/// Whether q lies in the family's closed-form range: psl2 needs q = 2^m
/// (m >= 2) or an odd prime power q >= 5; pgl2 the same; suzuki q = 2^(2n+1),
/// n >= 1.
bool closed_form_applies(ClosedFormFamily f, u64 q);

/// B(G) from the family's closed form. Throws DomainError outside the range.
u128 closed_form_B(ClosedFormFamily f, u64 q);

/// Formula order of the family member (u128: suzuki orders grow as q^5).
u128 family_order(ClosedFormFamily f, u64 q);

// ---------------------------------------------------------------- class H

/// Exact rational p/q in lowest terms.
struct Ratio {
  u128 num = 0;
  u128 den = 1;
};

struct HVerdict {
  u128 group_order = 0;
  u128 B = 0;
  u128 bound_BB1 = 0;          // B(B+1)
  bool in_H = false;           // |G| <= B(B+1)
  bool sqrt_bound_holds = false;  // |G|^2 <= 8 B^3
  Ratio c_squared;             // |G|^2 / B^3; |G| <= c B sqrt(B) iff c^2 >= this
};

/// Throws DomainError for B = 0 or when |G|^2 or B^3 overflows 128 bits.
HVerdict h_class_test(u128 group_order, u128 B);

std::string to_decimal(u128 v);

}  // namespace breadthlab
