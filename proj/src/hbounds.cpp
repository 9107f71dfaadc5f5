#include "breadthlab/hbounds.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace breadthlab {

namespace {

using Big = boost::multiprecision::checked_uint256_t;

Big big(u128 v) {
  Big r = static_cast<std::uint64_t>(v >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(v);
  return r;
}

// The family-specific polynomial forms of |G|^2 <= 8 B^3.
bool polynomial_form_holds(ClosedFormFamily f, u64 q) {
  const Big Q = q;
  const Big Q2 = Q * Q;
  switch (f) {
    case ClosedFormFamily::psl2:
      if (q % 2 == 0) return Q2 * Q2 >= (Q2 - 1) * (Q2 - 1);
      // gcd(2, q-1)^2 (q^2 - q - 4)^3 >= q^6 - 2q^4 + q^2
      return 4 * pow(Q2 - Q - 4, 3) >= Q2 * Q2 * Q2 - 2 * Q2 * Q2 + Q2;
    case ClosedFormFamily::pgl2:
      if (q % 2 == 0) return Q2 * Q2 * Q2 >= Q2 * (Q + 1) * (Q + 1) * (Q - 1) * (Q - 1);
      return pow(Q2 + Q - 2, 3) >= Q2 * (Q + 1) * (Q + 1) * (Q - 1) * (Q - 1);
    case ClosedFormFamily::suzuki:
      // 8 B^3 = (q^4 - q^3 - 2(q+1))^3
      return pow(Q2 * Q2 - Q2 * Q - 2 * (Q + 1), 3) >= Q2 * Q2 * (Q2 + 1) * (Q2 + 1) * (Q - 1) * (Q - 1);
  }
  return false;
}

}  // namespace

std::vector<u64> prime_powers(u64 lo, u64 hi) {
  std::vector<bool> composite(hi + 1, false);
  std::vector<u64> out;
  for (u64 p = 2; p <= hi; ++p) {
    if (composite[p]) continue;
    for (u64 m = p * p; m <= hi; m += p) composite[m] = true;
    for (u64 pk = p;; pk *= p) {
      if (pk >= lo) out.push_back(pk);
      if (pk > hi / p) break;
    }
  }
  std::erase_if(out, [&](u64 v) { return v < lo || v > hi; });
  std::sort(out.begin(), out.end());
  return out;
}

HBoundSweep sweep_h_bounds(ClosedFormFamily f, u64 q_max) {
  HBoundSweep s;
  s.family = f;
  s.q_max = q_max;
  for (u64 q : prime_powers(2, q_max)) {
    if (!closed_form_applies(f, q)) continue;
    ++s.instances;
    const Big B = big(closed_form_B(f, q));
    const Big G = big(family_order(f, q));
    if (G > B * (B + 1)) s.in_h_violations.push_back(q);
    if (G * G > 8 * B * B * B) s.sqrt_violations.push_back(q);
    if (!polynomial_form_holds(f, q)) s.polynomial_violations.push_back(q);
  }
  return s;
}

}  // namespace breadthlab
