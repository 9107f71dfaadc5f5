#include "breadthlab/group.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "breadthlab/error.hpp"

namespace breadthlab {

namespace {

constexpr ElemId kEmpty = ~ElemId{0};

std::vector<Point>& scratch(std::size_t n) {
  thread_local std::vector<Point> buf;
  if (buf.size() < n + 1) buf.assign(n + 1, 0);
  return buf;
}

}  // namespace

// ---------------------------------------------------------------- ElementSet

std::size_t ElementSet::size() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ElementSet::is_subset_of(const ElementSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

std::vector<ElemId> ElementSet::members() const {
  std::vector<ElemId> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      out.push_back(static_cast<ElemId>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::strong_ordering ElementSet::operator<=>(const ElementSet& o) const {
  if (auto c = universe_ <=> o.universe_; c != 0) return c;
  return words_ <=> o.words_;
}

// --------------------------------------------------------------------- Group

std::uint64_t Group::hash_row(const Point* row) const {
  std::uint64_t h = 0x243F6A8885A308D3ull ^ degree_;
  std::size_t i = 0;
  for (; i + 4 <= degree_; i += 4) {
    std::uint64_t w;
    std::memcpy(&w, row + i, sizeof w);
    h = (h ^ w) * 0x9E3779B97F4A7C15ull;
    h ^= h >> 31;
  }
  for (; i < degree_; ++i) {
    h = (h ^ row[i]) * 0x9E3779B97F4A7C15ull;
    h ^= h >> 31;
  }
  h ^= h >> 29;
  h *= 0xBF58476D1CE4E5B9ull;
  return h ^ (h >> 32);
}

std::optional<ElemId> Group::lookup(const Point* row) const {
  for (std::uint64_t s = hash_row(row) & mask_;; s = (s + 1) & mask_) {
    const ElemId id = slots_[s];
    if (id == kEmpty) return std::nullopt;
    if (std::memcmp(data_.data() + std::size_t{id} * degree_, row, degree_ * sizeof(Point)) == 0)
      return id;
  }
}

void Group::insert_slot(ElemId id) {
  if (2 * (std::size_t{id} + 1) > slots_.size()) {
    slots_.assign(std::max<std::size_t>(64, slots_.size() * 2), kEmpty);
    mask_ = slots_.size() - 1;
    for (ElemId j = 0; j < id; ++j) {
      std::uint64_t s = hash_row(data_.data() + std::size_t{j} * degree_) & mask_;
      while (slots_[s] != kEmpty) s = (s + 1) & mask_;
      slots_[s] = j;
    }
  }
  std::uint64_t s = hash_row(data_.data() + std::size_t{id} * degree_) & mask_;
  while (slots_[s] != kEmpty) s = (s + 1) & mask_;
  slots_[s] = id;
}

void Group::rebuild_index() {
  slots_.assign(std::bit_ceil(std::max<std::size_t>(64, 2 * order_)), kEmpty);
  mask_ = slots_.size() - 1;
  for (ElemId j = 0; j < order_; ++j) {
    std::uint64_t s = hash_row(data_.data() + std::size_t{j} * degree_) & mask_;
    while (slots_[s] != kEmpty) s = (s + 1) & mask_;
    slots_[s] = j;
  }
}

Group Group::enumerate(std::span<const Perm> generators, u64 cap, std::string label) {
  if (generators.empty()) throw DomainError("enumerate: empty generator list");
  if (cap < 1) throw DomainError("enumerate: cap must be >= 1");
  const std::size_t n = generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != n) throw DomainError("enumerate: generators of mixed degree");

  Group G;
  G.degree_ = n;
  G.label_ = std::move(label);
  const Perm id = Perm::identity(n);
  G.data_.assign(id.image().begin(), id.image().end());
  G.data_.push_back(0);
  G.order_ = 1;
  G.insert_slot(0);

  std::vector<Point> next(n + 1, 0);
  for (u64 head = 0; head < G.order_; ++head) {
    for (const auto& gen : generators) {
      kernels::compose(G.element(static_cast<ElemId>(head)), gen.image(), std::span<Point>(next.data(), n));
      if (G.lookup(next.data())) continue;
      if (G.order_ >= cap) throw CapExceeded("group exceeds element cap " + std::to_string(cap), G.order_ + 1);
      G.data_.insert(G.data_.end() - 1, next.begin(), next.begin() + static_cast<std::ptrdiff_t>(n));
      G.insert_slot(static_cast<ElemId>(G.order_));
      ++G.order_;
    }
  }

  // Canonical order: lexicographic on image arrays.
  std::vector<ElemId> perm(G.order_);
  std::iota(perm.begin(), perm.end(), ElemId{0});
  std::sort(perm.begin(), perm.end(), [&](ElemId a, ElemId b) {
    const auto ea = G.element(a), eb = G.element(b);
    return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
  });
  std::vector<Point> sorted;
  sorted.reserve(G.data_.size());
  for (ElemId old : perm) {
    const auto e = G.element(old);
    sorted.insert(sorted.end(), e.begin(), e.end());
  }
  sorted.push_back(0);
  G.data_ = std::move(sorted);
  G.rebuild_index();

  for (const auto& gen : generators) G.generators_.push_back(G.index_of(gen.image()));
  return G;
}

std::vector<Perm> Group::generator_perms() const {
  std::vector<Perm> out;
  for (ElemId g : generators_) out.push_back(perm(g));
  return out;
}

std::optional<ElemId> Group::find(std::span<const Point> image) const {
  if (image.size() != degree_) return std::nullopt;
  return lookup(image.data());
}

ElemId Group::index_of(std::span<const Point> image) const {
  if (auto id = find(image)) return *id;
  throw InvariantViolation("element not in group " + label_);
}

ElemId Group::multiply(ElemId a, ElemId b) const {
  auto& buf = scratch(degree_);
  kernels::compose(element(a), element(b), std::span<Point>(buf.data(), degree_));
  return index_of(std::span<const Point>(buf.data(), degree_));
}

ElemId Group::inverse(ElemId a) const {
  auto& buf = scratch(degree_);
  const auto e = element(a);
  for (std::size_t i = 0; i < degree_; ++i) buf[e[i]] = static_cast<Point>(i);
  return index_of(std::span<const Point>(buf.data(), degree_));
}

ElemId Group::power(ElemId a, u64 k) const {
  ElemId result = identity(), base = a;
  while (k) {
    if (k & 1) result = multiply(result, base);
    base = multiply(base, base);
    k >>= 1;
  }
  return result;
}

ElemId Group::conjugate(ElemId a, ElemId b) const { return multiply(inverse(b), multiply(a, b)); }

bool Group::commute(ElemId a, ElemId b) const {
  const auto ea = element(a), eb = element(b);
  for (std::size_t i = 0; i < degree_; ++i)
    if (ea[eb[i]] != eb[ea[i]]) return false;
  return true;
}

// ---------------------------------------------------------------- subgroups

namespace {

// Extends `members` (already closed under `gens` minus the newest one) to
// the closure under all of `gens`.
void close_under(const Group& g, ElementSet& members, std::span<const ElemId> gens) {
  std::deque<ElemId> queue;
  for (ElemId x : members.members()) queue.push_back(x);
  while (!queue.empty()) {
    const ElemId x = queue.front();
    queue.pop_front();
    for (ElemId s : gens) {
      const ElemId y = g.multiply(x, s);
      if (!members.contains(y)) {
        members.insert(y);
        queue.push_back(y);
      }
    }
  }
}

}  // namespace

Subgroup generate(const Group& g, std::span<const ElemId> candidates) {
  Subgroup h = trivial_subgroup(g);
  for (ElemId c : candidates) {
    if (h.members.contains(c)) continue;
    h.generators.push_back(c);
    close_under(g, h.members, h.generators);
  }
  return h;
}

Subgroup trivial_subgroup(const Group& g) {
  Subgroup h{ElementSet(g.order()), {}};
  h.members.insert(Group::identity());
  return h;
}

Subgroup whole_group(const Group& g) {
  const auto gens = g.generators();
  return generate(g, gens);
}

bool is_normal(const Group& g, const ElementSet& n) {
  const auto members = n.members();
  for (ElemId s : g.generators())
    for (ElemId x : members)
      if (!n.contains(g.conjugate(x, s))) return false;
  return true;
}

ElementSet conjugate_set(const Group& g, const ElementSet& s, ElemId b) {
  ElementSet out(g.order());
  const ElemId binv = g.inverse(b);
  for (ElemId x : s.members()) out.insert(g.multiply(binv, g.multiply(x, b)));
  return out;
}

std::vector<std::vector<ElemId>> conjugacy_classes(const Group& g) {
  std::vector<bool> done(g.order(), false);
  std::vector<ElemId> gen_inv;
  for (ElemId s : g.generators()) gen_inv.push_back(g.inverse(s));
  const auto gens = g.generators();

  std::vector<std::vector<ElemId>> classes;
  for (ElemId x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    std::vector<ElemId> cls{x};
    done[x] = true;
    for (std::size_t head = 0; head < cls.size(); ++head) {
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const ElemId y = g.multiply(gen_inv[k], g.multiply(cls[head], gens[k]));
        if (!done[y]) {
          done[y] = true;
          cls.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<Subgroup> normal_subgroups(const Group& g, u64 cap) {
  if (g.order() > cap)
    throw CapExceeded("normal subgroup enumeration limited to order " + std::to_string(cap), g.order());

  std::vector<Subgroup> found;
  std::set<ElementSet> seen;
  auto add = [&](Subgroup h) {
    if (seen.insert(h.members).second) found.push_back(std::move(h));
  };

  add(trivial_subgroup(g));
  for (const auto& cls : conjugacy_classes(g)) add(generate(g, cls));

  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (found[i].members.is_subset_of(found[j].members) ||
          found[j].members.is_subset_of(found[i].members))
        continue;
      std::vector<ElemId> gens = found[i].generators;
      gens.insert(gens.end(), found[j].generators.begin(), found[j].generators.end());
      add(generate(g, gens));
    }
  }

  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members < b.members;
  });
  return found;
}

Group quotient(const Group& g, const ElementSet& n) {
  if (!is_normal(g, n)) throw DomainError("quotient: subgroup is not normal");
  const u64 index = g.order() / n.size();
  if (index > kMaxDegree) throw CapExceeded("quotient: too many cosets", index);

  // Label right cosets Nx by scanning x in id order.
  std::vector<std::uint32_t> coset(g.order(), ~0u);
  std::vector<ElemId> reps;
  const auto nmembers = n.members();
  for (ElemId x = 0; x < g.order(); ++x) {
    if (coset[x] != ~0u) continue;
    const auto c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (ElemId m : nmembers) coset[g.multiply(m, x)] = c;
  }

  std::vector<Perm> gens;
  std::vector<Point> img(index);
  for (ElemId s : g.generators()) {
    for (std::size_t c = 0; c < index; ++c) img[c] = static_cast<Point>(coset[g.multiply(reps[c], s)]);
    gens.emplace_back(std::span<const Point>(img));
  }
  Group q = Group::enumerate(gens, kDefaultCap, g.label() + "/N");
  if (q.order() != index)
    throw InvariantViolation("quotient: coset action has order " + std::to_string(q.order()) +
                             ", expected " + std::to_string(index));
  return q;
}

Group subgroup_group(const Group& g, const Subgroup& h) {
  std::vector<Perm> gens;
  for (ElemId x : h.generators) gens.push_back(g.perm(x));
  if (gens.empty()) gens.push_back(Perm::identity(g.degree()));
  Group sub = Group::enumerate(gens, h.order());
  if (sub.order() != h.order()) throw InvariantViolation("subgroup_group: order mismatch");
  return sub;
}

Group direct_product(const Group& a, const Group& b, u64 cap) {
  const u128 ord = u128{a.order()} * b.order();
  if (ord > cap) throw CapExceeded("direct product exceeds element cap " + std::to_string(cap), cap);
  const std::size_t na = a.degree(), nb = b.degree();
  if (na + nb > kMaxDegree) throw DomainError("direct product degree exceeds 2^16");

  std::vector<Perm> gens;
  std::vector<Point> img(na + nb);
  for (ElemId s : a.generators()) {
    const auto e = a.element(s);
    for (std::size_t i = 0; i < na; ++i) img[i] = e[i];
    for (std::size_t i = 0; i < nb; ++i) img[na + i] = static_cast<Point>(na + i);
    gens.emplace_back(std::span<const Point>(img));
  }
  for (ElemId s : b.generators()) {
    const auto e = b.element(s);
    for (std::size_t i = 0; i < na; ++i) img[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < nb; ++i) img[na + i] = static_cast<Point>(na + e[i]);
    gens.emplace_back(std::span<const Point>(img));
  }
  Group p = Group::enumerate(gens, cap, a.label() + " x " + b.label());
  if (u128{p.order()} != ord) throw InvariantViolation("direct product order mismatch");
  return p;
}

u64 group_exponent(const Group& g) {
  u64 e = 1;
  for (ElemId x = 0; x < g.order(); ++x) e = std::lcm(e, g.element_order(x));
  return e;
}

bool is_nilpotent(const Group& g) {
  // A finite group is nilpotent iff each Sylow subgroup is normal, i.e. the
  // elements of p-power order number exactly |G|_p for every prime p.
  std::map<u64, u64> p_elements;
  const auto primes = prime_divisors(g.order());
  for (ElemId x = 0; x < g.order(); ++x) {
    const u64 o = g.element_order(x);
    for (u64 p : primes)
      if (p_part(o, p) == o) ++p_elements[p];
  }
  for (u64 p : primes)
    if (p_elements[p] != p_part(g.order(), p)) return false;
  return true;
}

Subgroup sylow_subgroup(const Group& g, u64 p) {
  if (!is_prime(p) || g.order() % p != 0)
    throw DomainError("sylow: " + std::to_string(p) + " is not a prime divisor of |G|");
  const u64 target = p_part(g.order(), p);
  Subgroup P = trivial_subgroup(g);
  while (P.order() < target) {
    // Some x outside P normalizes P and has x^p in P; P<x> is a p-group of order p|P|.
    bool grown = false;
    for (ElemId x = 0; x < g.order() && !grown; ++x) {
      if (P.members.contains(x) || !P.members.contains(g.power(x, p))) continue;
      bool normalizes = true;
      for (ElemId h : P.generators)
        if (!P.members.contains(g.conjugate(h, x))) {
          normalizes = false;
          break;
        }
      if (!normalizes) continue;
      std::vector<ElemId> gens = P.generators;
      gens.push_back(x);
      P = generate(g, gens);
      grown = true;
    }
    if (!grown) throw InvariantViolation("sylow: could not extend p-subgroup");
  }
  return P;
}

u64 sylow_count(const Group& g, u64 p) {
  const Subgroup P = sylow_subgroup(g, p);
  std::set<ElementSet> orbit{P.members};
  std::vector<ElementSet> queue{P.members};
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (ElemId s : g.generators()) {
      ElementSet c = conjugate_set(g, queue[head], s);
      if (orbit.insert(c).second) queue.push_back(std::move(c));
    }
  return orbit.size();
}

}  // namespace breadthlab
