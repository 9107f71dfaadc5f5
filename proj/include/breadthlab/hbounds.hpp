#pragma once

#include <vector>

#include "breadthlab/breadth.hpp"

namespace breadthlab {

/// Outcome of checking the closed-form class-H inequalities for every q in a
/// family's range up to q_max, in exact 256-bit integer arithmetic.
struct HBoundSweep {
  ClosedFormFamily family = ClosedFormFamily::psl2;
  u64 q_max = 0;
  u64 instances = 0;
  std::vector<u64> in_h_violations;      // |G| > B(B+1)
  std::vector<u64> sqrt_violations;      // |G|^2 > 8 B^3
  std::vector<u64> polynomial_violations;  // family polynomial inequality fails

  bool ok() const { return in_h_violations.empty() && sqrt_violations.empty() && polynomial_violations.empty(); }
};

/// Prime powers in [lo, hi], ascending.
std::vector<u64> prime_powers(u64 lo, u64 hi);

HBoundSweep sweep_h_bounds(ClosedFormFamily f, u64 q_max = u64{1} << 20);

}  // namespace breadthlab
