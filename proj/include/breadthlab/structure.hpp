#pragma once

#include <string>
#include <vector>

#include "breadthlab/cyclic.hpp"
#include "breadthlab/group.hpp"

namespace breadthlab {

/// Whether the maximal cyclic subgroups partition G.
struct PartitionReport {
  std::vector<CyclicSubgroup> components;  // the maximal cyclic subgroups
  bool is_partition = false;  // every nontrivial element lies in exactly one component
  bool is_nontrivial = false;  // a partition with at least two components

  /// Sorted distinct component orders.
  std::vector<u64> component_orders() const;
};

PartitionReport maximal_cyclic_partition_check(const Group& g);
/// Reuses an already computed cyclic_subgroups(g).
PartitionReport maximal_cyclic_partition_check(const Group& g, const std::vector<CyclicSubgroup>& cyclic);

/// H_p(G): the subgroup generated by every element with x^p != 1.
Subgroup hughes_subgroup(const Group& g, u64 p);

struct HughesThompsonReport {
  bool verdict = false;  // G not a p-group and H_p(G) != G
  bool is_p_group = false;
  u64 hughes_order = 0;
  u64 index = 0;  // |G : H_p(G)|
  bool index_is_p = false;
  bool hughes_nilpotent = false;
  /// Non-empty only if a Hughes-Thompson group fails index p or nilpotency.
  std::vector<std::string> findings;
};

HughesThompsonReport is_hughes_thompson(const Group& g, u64 p);

struct RefinedReport {
  bool refined = false;
  u64 B = 0;
  /// (|N|, B(G/N)) for every normal N with 1 < N < G, in normal_subgroups order.
  std::vector<std::pair<u64, u64>> quotient_breadths;
};

/// B(G) != B(G/N) for all normal N with 1 < N < G. Throws CapExceeded
/// above the normal-subgroup cap.
RefinedReport is_refined(const Group& g, u64 cap = kNormalSubgroupCap);

/// For a refined G with B(G) = m, one finding per prime divisor p of |G|
/// with p > 2m - 1. Throws DomainError if G is not refined.
std::vector<std::string> refined_sanity(const Group& g, u64 cap = kNormalSubgroupCap);

}  // namespace breadthlab
