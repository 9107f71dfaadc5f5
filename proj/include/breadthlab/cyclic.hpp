#pragma once

#include <vector>

#include "breadthlab/group.hpp"

namespace breadthlab {

struct CyclicSubgroup {
  ElemId generator;             // smallest-id generator
  u64 order;
  std::vector<ElemId> members;  // sorted; also the canonical key
  bool maximal;
};

/// Every cyclic subgroup <x> exactly once, ordered by (order, members).
/// A subgroup is flagged maximal unless it is <y^p> for some element y and
/// prime p dividing o(y).
std::vector<CyclicSubgroup> cyclic_subgroups(const Group& g);

std::vector<CyclicSubgroup> maximal_cyclic_subgroups(const Group& g);

/// Sorted distinct orders of the maximal cyclic subgroups.
std::vector<u64> maximal_cyclic_orders(const Group& g);
std::vector<u64> maximal_cyclic_orders(const std::vector<CyclicSubgroup>& cyclic);

}  // namespace breadthlab
