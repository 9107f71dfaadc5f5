#include "breadthlab/cyclic.hpp"

#include <algorithm>
#include <numeric>

namespace breadthlab {

std::vector<CyclicSubgroup> cyclic_subgroups(const Group& g) {
  constexpr std::uint32_t kUnset = ~0u;
  // owner[x] = index of <x> in `subs`. Each element generates exactly one
  // cyclic subgroup, so scanning ids in order builds each subgroup once,
  // from its smallest generator.
  std::vector<std::uint32_t> owner(g.order(), kUnset);
  std::vector<CyclicSubgroup> subs;

  for (ElemId x = 0; x < g.order(); ++x) {
    if (owner[x] != kUnset) continue;
    std::vector<ElemId> powers{Group::identity()};
    for (ElemId y = x; y != Group::identity(); y = g.multiply(y, x)) powers.push_back(y);
    const u64 n = powers.size();
    const auto id = static_cast<std::uint32_t>(subs.size());
    owner[x] = id;
    for (u64 k = 2; k < n; ++k)
      if (std::gcd(k, n) == 1) owner[powers[k]] = id;
    std::vector<ElemId> members = powers;
    std::sort(members.begin(), members.end());
    subs.push_back({x, n, std::move(members), true});
  }

  for (auto& s : subs) {
    for (u64 p : prime_divisors(s.order)) {
      const ElemId sub_gen = g.power(s.generator, p);
      subs[owner[sub_gen]].maximal = false;
    }
  }

  std::vector<std::size_t> idx(subs.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (subs[a].order != subs[b].order) return subs[a].order < subs[b].order;
    return subs[a].members < subs[b].members;
  });
  std::vector<CyclicSubgroup> out;
  out.reserve(subs.size());
  for (std::size_t i : idx) out.push_back(std::move(subs[i]));
  return out;
}

std::vector<CyclicSubgroup> maximal_cyclic_subgroups(const Group& g) {
  auto all = cyclic_subgroups(g);
  std::erase_if(all, [](const CyclicSubgroup& c) { return !c.maximal; });
  return all;
}

std::vector<u64> maximal_cyclic_orders(const std::vector<CyclicSubgroup>& cyclic) {
  std::vector<u64> out;
  for (const auto& c : cyclic)
    if (c.maximal) out.push_back(c.order);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<u64> maximal_cyclic_orders(const Group& g) {
  return maximal_cyclic_orders(cyclic_subgroups(g));
}

}  // namespace breadthlab
