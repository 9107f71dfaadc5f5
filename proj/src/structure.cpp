#include "breadthlab/structure.hpp"

#include <algorithm>

#include "breadthlab/breadth.hpp"
#include "breadthlab/error.hpp"

namespace breadthlab {

std::vector<u64> PartitionReport::component_orders() const { return maximal_cyclic_orders(components); }

PartitionReport maximal_cyclic_partition_check(const Group& g, const std::vector<CyclicSubgroup>& cyclic) {
  PartitionReport r;
  for (const auto& c : cyclic)
    if (c.maximal) r.components.push_back(c);

  std::vector<std::uint32_t> hits(g.order(), 0);
  for (const auto& c : r.components)
    for (ElemId x : c.members) ++hits[x];
  r.is_partition = true;
  for (ElemId x = 1; x < g.order(); ++x)
    if (hits[x] != 1) {
      r.is_partition = false;
      break;
    }
  r.is_nontrivial = r.is_partition && r.components.size() >= 2;
  return r;
}

PartitionReport maximal_cyclic_partition_check(const Group& g) {
  return maximal_cyclic_partition_check(g, cyclic_subgroups(g));
}

Subgroup hughes_subgroup(const Group& g, u64 p) {
  if (!is_prime(p)) throw DomainError("hughes_subgroup: p must be prime");
  std::vector<ElemId> outside;
  for (ElemId x = 0; x < g.order(); ++x) {
    const u64 o = g.element_order(x);
    if (p % o != 0) outside.push_back(x);  // x^p != 1
  }
  Subgroup h = generate(g, outside);
  if (!is_normal(g, h.members)) throw InvariantViolation("hughes_subgroup: result is not normal");
  return h;
}

HughesThompsonReport is_hughes_thompson(const Group& g, u64 p) {
  HughesThompsonReport r;
  r.is_p_group = p_part(g.order(), p) == g.order();
  const Subgroup h = hughes_subgroup(g, p);
  r.hughes_order = h.order();
  r.index = g.order() / h.order();
  r.verdict = !r.is_p_group && h.order() != g.order();
  if (r.verdict) {
    r.index_is_p = r.index == p;
    r.hughes_nilpotent = is_nilpotent(subgroup_group(g, h));
    if (!r.index_is_p) r.findings.push_back("index of H_p is " + std::to_string(r.index) + ", not p");
    if (!r.hughes_nilpotent) r.findings.push_back("H_p is not nilpotent");
  }
  return r;
}

RefinedReport is_refined(const Group& g, u64 cap) {
  RefinedReport r;
  r.B = global_breadth(order_census(g)).B;
  r.refined = true;
  for (const auto& n : normal_subgroups(g, cap)) {
    if (n.order() == 1 || n.order() == g.order()) continue;
    const u64 bq = global_breadth(order_census(quotient(g, n.members))).B;
    r.quotient_breadths.emplace_back(n.order(), bq);
    if (bq == r.B) r.refined = false;
  }
  return r;
}

std::vector<std::string> refined_sanity(const Group& g, u64 cap) {
  const RefinedReport r = is_refined(g, cap);
  if (!r.refined) throw DomainError("refined_sanity: " + g.label() + " is not refined");
  std::vector<std::string> findings;
  for (u64 p : prime_divisors(g.order()))
    if (p > 2 * r.B - 1)
      findings.push_back("prime " + std::to_string(p) + " divides |G| but exceeds 2B-1 = " +
                         std::to_string(2 * r.B - 1));
  return findings;
}

}  // namespace breadthlab
