#include "breadthlab/breadth.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <thread>

#include "breadthlab/cyclic.hpp"
#include "breadthlab/error.hpp"
#include "breadthlab/structure.hpp"

namespace breadthlab {

u64 OrderCensus::count(u64 d) const {
  const auto it = counts.find(d);
  return it == counts.end() ? 0 : it->second;
}

OrderCensus make_census(u64 group_order, std::map<u64, u64> counts) {
  OrderCensus c;
  c.group_order = group_order;
  u64 total = 0;
  for (auto it = counts.begin(); it != counts.end();) {
    if (it->second == 0) {
      it = counts.erase(it);
      continue;
    }
    if (it->first == 0 || group_order % it->first != 0)
      throw InvariantViolation("census: order " + std::to_string(it->first) + " does not divide |G|");
    total += it->second;
    c.exponent = std::lcm(c.exponent, it->first);
    ++it;
  }
  if (total != group_order) throw InvariantViolation("census: counts do not sum to |G|");
  if (counts[1] != 1) throw InvariantViolation("census: O_1 != 1");
  c.counts = std::move(counts);
  return c;
}

OrderCensus order_census(const Group& g, unsigned jobs) {
  const u64 n = g.order();
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<u64>(1, n / 1024))));
  std::vector<std::map<u64, u64>> partial(jobs);
  auto work = [&](unsigned w) {
    const u64 lo = n * w / jobs, hi = n * (w + 1) / jobs;
    for (u64 x = lo; x < hi; ++x) ++partial[w][g.element_order(static_cast<ElemId>(x))];
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
  }
  std::map<u64, u64> merged;
  for (const auto& p : partial)
    for (const auto& [d, k] : p) merged[d] += k;
  return make_census(n, std::move(merged));
}

u64 l_count(const OrderCensus& c, u64 k) {
  if (k == 0) throw DomainError("l_count: k must be >= 1");
  u64 total = 0;
  for (const auto& [d, k_d] : c.counts)
    if (k % d == 0) total += k_d;
  return total;
}

u64 local_breadth(const OrderCensus& c, u64 k) {
  if (k == 0 || c.group_order % k != 0)
    throw DomainError("local_breadth: " + std::to_string(k) + " does not divide |G|");
  const u64 L = l_count(c, k);
  if (L % k != 0)
    throw InvariantViolation("local_breadth: |L_" + std::to_string(k) + "| = " + std::to_string(L) +
                             " is not divisible by " + std::to_string(k));
  return L / k;
}

u64 cyclic_count(const OrderCensus& c, u64 d) {
  if (d == 0 || c.group_order % d != 0)
    throw DomainError("cyclic_count: " + std::to_string(d) + " does not divide |G|");
  const u64 o = c.count(d), phi = euler_phi(d);
  if (o % phi != 0) throw InvariantViolation("cyclic_count: O_d not divisible by phi(d)");
  return o / phi;
}

std::vector<BreadthRow> breadth_table(const OrderCensus& c) {
  std::vector<BreadthRow> rows;
  for (u64 d : divisors(c.group_order)) rows.push_back({d, cyclic_count(c, d), l_count(c, d), local_breadth(c, d)});
  return rows;
}

std::vector<BreadthRow> breadth_table(const Group& g, unsigned jobs) {
  return breadth_table(order_census(g, jobs));
}

BreadthReport global_breadth(const OrderCensus& c, std::vector<u64> maximal_cyclic_orders) {
  BreadthReport r;
  r.group_order = c.group_order;
  r.exponent = c.exponent;
  r.rows = breadth_table(c);
  r.maximal_cyclic_orders = std::move(maximal_cyclic_orders);
  for (const auto& row : r.rows)
    if (c.exponent % row.d == 0) r.B = std::max(r.B, row.b);
  for (const auto& row : r.rows)
    if (c.exponent % row.d == 0 && row.b == r.B) r.argmax.push_back(row.d);
  return r;
}

FastBreadth global_breadth_fast(const OrderCensus& c, std::span<const u64> maximal_cyclic_orders) {
  FastBreadth f;
  f.scanned.assign(maximal_cyclic_orders.begin(), maximal_cyclic_orders.end());
  std::sort(f.scanned.begin(), f.scanned.end());
  for (u64 k : f.scanned) {
    const u64 b = local_breadth(c, k);
    if (b > f.B) {
      f.B = b;
      f.witness_order = k;
    }
  }
  return f;
}

FastBreadth global_breadth_fast(const Group& g, FastPath mode) {
  const auto cyc = cyclic_subgroups(g);
  if (mode == FastPath::require_partition) {
    const PartitionReport p = maximal_cyclic_partition_check(g, cyc);
    if (!p.is_partition || !p.is_nontrivial)
      throw DomainError("global_breadth_fast: " + g.label() +
                        " has no nontrivial maximal-cyclic partition (pass assume_applicable to override)");
  }
  const auto orders = maximal_cyclic_orders(cyc);
  return global_breadth_fast(order_census(g), orders);
}

// ------------------------------------------------------------- closed forms

const char* family_name(ClosedFormFamily f) {
  switch (f) {
    case ClosedFormFamily::psl2: return "psl2";
    case ClosedFormFamily::pgl2: return "pgl2";
    case ClosedFormFamily::suzuki: return "suzuki";
  }
  return "?";
}

bool closed_form_applies(ClosedFormFamily f, u64 q) {
  const auto pp = as_prime_power(q);
  if (!pp) return false;
  switch (f) {
    case ClosedFormFamily::psl2:
    case ClosedFormFamily::pgl2:
      return pp->prime == 2 ? pp->exponent >= 2 : q >= 5;
    case ClosedFormFamily::suzuki:
      return pp->prime == 2 && pp->exponent % 2 == 1 && pp->exponent >= 3;
  }
  return false;
}

u128 closed_form_B(ClosedFormFamily f, u64 q) {
  if (!closed_form_applies(f, q))
    throw DomainError(std::string("closed_form_B: q = ") + std::to_string(q) + " outside the " + family_name(f) +
                      " range");
  const u128 Q = q;
  switch (f) {
    case ClosedFormFamily::psl2:
      return q % 2 == 0 ? Q * Q / 2 : Q * (Q - 1) / 2 - 2;
    case ClosedFormFamily::pgl2:
      return q % 2 == 0 ? Q * Q / 2 : (Q * Q + Q - 2) / 2;
    case ClosedFormFamily::suzuki:
      return (Q * Q * Q * Q - Q * Q * Q - 2 * (Q + 1)) / 2;
  }
  return 0;
}

u128 family_order(ClosedFormFamily f, u64 q) {
  const u128 Q = q;
  switch (f) {
    case ClosedFormFamily::psl2: return Q * (Q * Q - 1) / (q % 2 ? 2 : 1);
    case ClosedFormFamily::pgl2: return Q * (Q - 1) * (Q + 1);
    case ClosedFormFamily::suzuki: return Q * Q * (Q * Q + 1) * (Q - 1);
  }
  return 0;
}

// ------------------------------------------------------------------ class H

namespace {

u128 mul_checked(u128 a, u128 b) {
  if (a != 0 && b > std::numeric_limits<u128>::max() / a) throw DomainError("h_class_test: 128-bit overflow");
  return a * b;
}

u128 gcd128(u128 a, u128 b) {
  while (b) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

HVerdict h_class_test(u128 group_order, u128 B) {
  if (B == 0) throw DomainError("h_class_test: B must be >= 1");
  HVerdict v;
  v.group_order = group_order;
  v.B = B;
  v.bound_BB1 = mul_checked(B, B + 1);
  v.in_H = group_order <= v.bound_BB1;
  const u128 g2 = mul_checked(group_order, group_order);
  const u128 b3 = mul_checked(mul_checked(B, B), B);
  v.sqrt_bound_holds = g2 / 8 < b3 || (g2 / 8 == b3 && g2 % 8 == 0);
  const u128 gcd = gcd128(g2, b3);
  v.c_squared = {g2 / gcd, b3 / gcd};
  return v;
}

std::string to_decimal(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return {s.rbegin(), s.rend()};
}

}  // namespace breadthlab
