#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "breadthlab/perm.hpp"

namespace breadthlab {

/// Index of an element in a Group's canonical (lexicographic) element table.
using ElemId = std::uint32_t;

inline constexpr u64 kDefaultCap = u64{1} << 22;

/// Fixed-universe bitset over the element ids of one group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return universe_; }
  void insert(ElemId x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  bool contains(ElemId x) const { return (words_[x >> 6] >> (x & 63)) & 1; }
  std::size_t size() const;
  bool is_subset_of(const ElementSet& o) const;
  std::vector<ElemId> members() const;

  bool operator==(const ElementSet&) const = default;
  std::strong_ordering operator<=>(const ElementSet& o) const;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// A finite permutation group held as its full element table, sorted
/// lexicographically by image array. Element 0 is the identity. Immutable
/// once enumerated.
class Group {
 public:
  /// Breadth-first closure of `generators` under right multiplication.
  /// Throws CapExceeded once more than `cap` elements are found and
  /// DomainError for an empty or mixed-degree generator list.
  static Group enumerate(std::span<const Perm> generators, u64 cap = kDefaultCap,
                         std::string label = {});

  std::size_t degree() const { return degree_; }
  u64 order() const { return order_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  static constexpr ElemId identity() { return 0; }

  std::span<const Point> element(ElemId i) const {
    return {data_.data() + std::size_t{i} * degree_, degree_};
  }
  Perm perm(ElemId i) const { return Perm(element(i)); }

  /// Generator ids, in the order the generators were supplied.
  std::span<const ElemId> generators() const { return generators_; }
  std::vector<Perm> generator_perms() const;

  std::optional<ElemId> find(std::span<const Point> image) const;
  /// Like find, but throws InvariantViolation when absent.
  ElemId index_of(std::span<const Point> image) const;

  /// a * b with (a * b)(x) = a(b(x)).
  ElemId multiply(ElemId a, ElemId b) const;
  ElemId inverse(ElemId a) const;
  ElemId power(ElemId a, u64 k) const;
  /// b^-1 a b.
  ElemId conjugate(ElemId a, ElemId b) const;
  bool commute(ElemId a, ElemId b) const;
  u64 element_order(ElemId a) const { return perm_order(element(a)); }

 private:
  Group() = default;

  std::uint64_t hash_row(const Point* row) const;
  std::optional<ElemId> lookup(const Point* row) const;
  void insert_slot(ElemId id);
  void rebuild_index();

  std::size_t degree_ = 0;
  u64 order_ = 0;
  std::string label_;
  // order_ * degree_ points followed by one padding slot.
  std::vector<Point> data_;
  std::vector<ElemId> generators_;
  std::vector<ElemId> slots_;
  std::uint64_t mask_ = 0;
};

/// A subgroup as an element set plus a small generating list drawn from it.
struct Subgroup {
  ElementSet members;
  std::vector<ElemId> generators;

  u64 order() const { return members.size(); }
};

/// Closure of `candidates` under multiplication; the generator list keeps
/// only the candidates that enlarged the subgroup.
Subgroup generate(const Group& g, std::span<const ElemId> candidates);

Subgroup trivial_subgroup(const Group& g);
Subgroup whole_group(const Group& g);

bool is_normal(const Group& g, const ElementSet& n);

/// {b^-1 x b : x in s}.
ElementSet conjugate_set(const Group& g, const ElementSet& s, ElemId b);

/// Conjugacy classes as sorted id lists, ordered by smallest member
/// (so the identity class comes first).
std::vector<std::vector<ElemId>> conjugacy_classes(const Group& g);

inline constexpr u64 kNormalSubgroupCap = 5000;

/// Every normal subgroup, ordered by (order, members). Joins of normal
/// closures of conjugacy classes, closed under pairwise join.
/// Throws CapExceeded when |G| > cap.
std::vector<Subgroup> normal_subgroups(const Group& g, u64 cap = kNormalSubgroupCap);

/// G/N acting on the right cosets of N. Throws DomainError if N is not normal.
Group quotient(const Group& g, const ElementSet& n);

/// The subgroup as a permutation group of the same degree.
Group subgroup_group(const Group& g, const Subgroup& h);

/// G x H acting on the disjoint union of their point sets.
Group direct_product(const Group& a, const Group& b, u64 cap = kDefaultCap);

/// True iff elements of coprime order always commute.
bool is_nilpotent(const Group& g);

/// One Sylow p-subgroup, grown one factor p at a time inside its normalizer.
/// Throws DomainError when p is not a prime dividing |G|.
Subgroup sylow_subgroup(const Group& g, u64 p);

/// Number of Sylow p-subgroups (size of the conjugation orbit of one of them).
u64 sylow_count(const Group& g, u64 p);

/// lcm of all element orders.
u64 group_exponent(const Group& g);

}  // namespace breadthlab
