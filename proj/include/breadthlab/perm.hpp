#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "breadthlab/kernels.hpp"
#include "breadthlab/numtheory.hpp"

namespace breadthlab {

/// A bijection of {0, ..., n-1}. Storage carries one trailing padding slot
/// (see kernels.hpp).
class Perm {
 public:
  /// Validates that `image` is a bijection; throws DomainError otherwise.
  explicit Perm(std::span<const Point> image);
  explicit Perm(std::initializer_list<Point> image)
      : Perm(std::span<const Point>(image.begin(), image.size())) {}

  static Perm identity(std::size_t n);

  /// Builds a permutation of n points from disjoint cycles.
  static Perm from_cycles(std::size_t n, std::initializer_list<std::initializer_list<Point>> cycles);

  std::size_t degree() const { return storage_.size() - 1; }
  std::span<const Point> image() const { return {storage_.data(), degree()}; }
  Point operator()(Point x) const { return storage_[x]; }

  bool is_identity() const;

  bool operator==(const Perm& o) const;
  std::strong_ordering operator<=>(const Perm& o) const;

  std::string cycle_string() const;

 private:
  Perm() = default;
  friend Perm compose(const Perm&, const Perm&);
  friend Perm inverse(const Perm&);

  std::vector<Point> storage_;
};

/// Function composition: compose(a, b)(x) = a(b(x)).
/// Throws DomainError on degree mismatch.
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);

/// Least k >= 1 with a^k = 1, as the lcm of the cycle lengths.
u64 perm_order(std::span<const Point> image);
inline u64 perm_order(const Perm& a) { return perm_order(a.image()); }

/// Sorted cycle lengths (including fixed points as 1-cycles).
std::vector<std::size_t> cycle_type(std::span<const Point> image);

}  // namespace breadthlab
