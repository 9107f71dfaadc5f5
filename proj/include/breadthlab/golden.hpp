#pragma once

#include <span>
#include <string_view>
#include <utility>

#include "breadthlab/breadth.hpp"

namespace breadthlab::golden {

/// Reference local-breadth table of psl2:9: 23 rows (no d = 45 row).
std::span<const BreadthRow> psl2_9_rows();

/// Reference local-breadth table of pgl2:64: 19 rows, cell values kept
/// verbatim.
std::span<const BreadthRow> pgl2_64_rows();

struct BreadthSpot {
  std::string_view spec;
  u64 B;
};

/// Reference global breadths of small groups.
std::span<const BreadthSpot> breadth_list();

/// (s, k) instances of the Frobenius-extension identity k B = (k-1) s + 1.
std::span<const std::pair<u64, u64>> frobenius_instances();

/// q values on which closed-form B is compared with a full census.
std::span<const u64> closed_form_q(ClosedFormFamily f);

}  // namespace breadthlab::golden
