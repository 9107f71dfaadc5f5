#pragma once

// Brute-force reference computations, kept independent of the library's
// own algorithms.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "breadthlab/group.hpp"

namespace oracle {

using breadthlab::ElemId;
using breadthlab::Group;
using breadthlab::u64;

inline std::vector<u64> divisors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

inline u64 phi(u64 n) {
  u64 c = 0;
  for (u64 i = 1; i <= n; ++i) c += std::gcd(i, n) == 1;
  return c;
}

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d < n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Element order by repeated multiplication through the group's table.
inline u64 order_by_powers(const Group& g, ElemId x) {
  u64 k = 1;
  for (ElemId y = x; y != Group::identity(); y = g.multiply(y, x)) ++k;
  return k;
}

/// #{x : x^k = 1}, by raising every element to the k-th power.
inline u64 solutions_of_xk(const Group& g, u64 k) {
  u64 c = 0;
  for (ElemId x = 0; x < g.order(); ++x) {
    ElemId y = Group::identity();
    for (u64 i = 0; i < k; ++i) y = g.multiply(y, x);
    c += y == Group::identity();
  }
  return c;
}

/// Conjugacy class sizes by conjugating with every element.
inline std::multiset<u64> class_sizes(const Group& g) {
  std::vector<bool> seen(g.order(), false);
  std::multiset<u64> sizes;
  for (ElemId x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::set<ElemId> cls;
    for (ElemId b = 0; b < g.order(); ++b) cls.insert(g.conjugate(x, b));
    for (ElemId y : cls) seen[y] = true;
    sizes.insert(cls.size());
  }
  return sizes;
}

/// Nilpotency as "elements of coprime order commute".
inline bool coprime_commuting(const Group& g) {
  std::vector<u64> ord(g.order());
  for (ElemId x = 0; x < g.order(); ++x) ord[x] = g.element_order(x);
  for (ElemId x = 0; x < g.order(); ++x)
    for (ElemId y = 0; y < g.order(); ++y)
      if (std::gcd(ord[x], ord[y]) == 1 && g.multiply(x, y) != g.multiply(y, x)) return false;
  return true;
}

}  // namespace oracle
