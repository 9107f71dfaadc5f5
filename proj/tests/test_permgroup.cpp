#include <doctest.h>

#include <random>

#include "breadthlab/breadth.hpp"
#include "breadthlab/cyclic.hpp"
#include "breadthlab/error.hpp"
#include "breadthlab/families.hpp"
#include "breadthlab/group.hpp"
#include "breadthlab/perm.hpp"
#include "oracles.hpp"

using namespace breadthlab;

namespace {

Group s3() { return Group::enumerate(std::vector{Perm{1, 0, 2}, Perm{1, 2, 0}}); }

std::vector<u64> orders_of(const std::vector<Subgroup>& subs) {
  std::vector<u64> out;
  for (const auto& s : subs) out.push_back(s.order());
  return out;
}

std::vector<Group> corpus() {
  std::vector<Group> out;
  for (const char* s : {"cyclic:12", "dihedral:6", "dihedral:8", "dihedral:12", "q8", "sym:4", "alt:4", "alt:5",
                        "hol:7", "aff:9", "sl23", "gl23", "psl2:7", "dihedral:6xcyclic:3", "cyclic:2xcyclic:2"})
    out.push_back(build(parse_family(s)));
  return out;
}

}  // namespace

TEST_CASE("perm basics") {
  const Perm id = Perm::identity(5);
  CHECK(id.is_identity());
  CHECK(perm_order(id) == 1);
  CHECK(perm_order(Perm::from_cycles(5, {{0, 1}, {2, 3, 4}})) == 6);
  CHECK(perm_order(Perm::from_cycles(4, {{0, 1, 2, 3}})) == 4);
  CHECK(cycle_type(Perm::from_cycles(5, {{0, 1}, {2, 3, 4}}).image()) == std::vector<std::size_t>{2, 3});
  const Perm a{1, 2, 0}, b{1, 0, 2};
  CHECK(compose(a, b) == Perm{2, 1, 0});  // a(b(x))
  CHECK(compose(a, inverse(a)).is_identity());
  CHECK(Perm::from_cycles(3, {{0, 1, 2}}).cycle_string() == "(0 1 2)");
  CHECK_THROWS_AS(Perm({0, 0, 1}), DomainError);
  CHECK_THROWS_AS(compose(a, Perm::identity(4)), DomainError);
}

TEST_CASE("enumerate") {
  const Group g = s3();
  CHECK(g.order() == 6);
  CHECK(g.element(0).size() == 3);
  CHECK(Perm(g.element(Group::identity())).is_identity());
  for (ElemId i = 1; i < g.order(); ++i) CHECK(Perm(g.element(i - 1)) < Perm(g.element(i)));
  for (std::size_t n : {1, 5, 12, 97}) {
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
    CHECK(Group::enumerate(std::vector{Perm(img)}).order() == n);
  }
  CHECK_THROWS_AS(Group::enumerate(std::vector{Perm{1, 2, 3, 4, 5, 6, 0}, Perm{1, 0, 2, 3, 4, 5, 6}}, 100),
                  CapExceeded);
  try {
    Group::enumerate(std::vector{Perm{1, 2, 3, 4, 5, 6, 0}, Perm{1, 0, 2, 3, 4, 5, 6}}, 100);
  } catch (const CapExceeded& e) {
    CHECK(e.partial_count() > 100);
  }
  CHECK_THROWS_AS(Group::enumerate(std::vector<Perm>{}), DomainError);
  CHECK_THROWS_AS(Group::enumerate(std::vector{Perm{1, 0}, Perm{1, 2, 0}}), DomainError);
}

TEST_CASE("group closure and Lagrange") {
  std::mt19937 rng(7);
  for (const Group& g : corpus()) {
    CAPTURE(g.label());
    std::uniform_int_distribution<ElemId> pick(0, static_cast<ElemId>(g.order() - 1));
    for (int i = 0; i < 10000 / 15; ++i) {
      const ElemId x = pick(rng), y = pick(rng);
      const Perm xy = compose(g.perm(x), g.perm(y));
      REQUIRE(g.find(xy.image()).has_value());
      CHECK(*g.find(xy.image()) == g.multiply(x, y));
    }
    for (ElemId gen : g.generators()) CHECK(gen < g.order());
    for (ElemId x = 0; x < g.order(); ++x) {
      CHECK(g.order() % g.element_order(x) == 0);
      CHECK(g.multiply(x, g.inverse(x)) == Group::identity());
    }
    const OrderCensus c = order_census(g);
    u64 total = 0;
    for (const auto& [d, n] : c.counts) total += n;
    CHECK(total == g.order());
  }
}

TEST_CASE("element order matches repeated multiplication") {
  const Group g = build(parse_family("gl23"));
  for (ElemId x = 0; x < g.order(); ++x) CHECK(g.element_order(x) == oracle::order_by_powers(g, x));
  CHECK(g.power(1, 0) == Group::identity());
}

TEST_CASE("conjugacy classes") {
  const auto sizes = [](const Group& g) {
    std::multiset<u64> s;
    for (const auto& cls : conjugacy_classes(g)) s.insert(cls.size());
    return s;
  };
  CHECK(sizes(s3()) == std::multiset<u64>{1, 2, 3});
  CHECK(sizes(symmetric(4)) == std::multiset<u64>{1, 3, 6, 6, 8});
  const Group c12 = cyclic(12);
  CHECK(conjugacy_classes(c12).size() == 12);
  CHECK(conjugacy_classes(c12).front() == std::vector<ElemId>{0});
  for (const Group& g : corpus()) CHECK(sizes(g) == oracle::class_sizes(g));
}

TEST_CASE("normal subgroups") {
  CHECK(orders_of(normal_subgroups(cyclic(6))) == std::vector<u64>{1, 2, 3, 6});
  CHECK(orders_of(normal_subgroups(symmetric(4))) == std::vector<u64>{1, 4, 12, 24});
  CHECK(orders_of(normal_subgroups(alternating(5))) == std::vector<u64>{1, 60});
  CHECK(orders_of(normal_subgroups(quaternion8())) == std::vector<u64>{1, 2, 4, 4, 4, 8});
  for (const Group& g : corpus())
    for (const auto& n : normal_subgroups(g)) CHECK(is_normal(g, n.members));
  CHECK_THROWS_AS(normal_subgroups(symmetric(7)), CapExceeded);
}

TEST_CASE("quotients") {
  const Group s4 = symmetric(4);
  const auto ns = normal_subgroups(s4);
  CHECK(quotient(s4, ns[0].members).order() == 24);
  const Group q = quotient(s4, ns[1].members);  // V4
  CHECK(q.order() == 6);
  bool abelian = true;
  for (ElemId x = 0; x < q.order(); ++x)
    for (ElemId y = 0; y < q.order(); ++y) abelian &= q.commute(x, y);
  CHECK_FALSE(abelian);
  CHECK(orders_of(normal_subgroups(q)) == std::vector<u64>{1, 3, 6});
  const Group c6 = cyclic(6);
  CHECK(quotient(c6, normal_subgroups(c6)[2].members).order() == 2);
  // a non-normal subgroup is rejected
  const Group g3 = s3();
  const auto refl = generate(g3, std::vector<ElemId>{*g3.find(Perm{1, 0, 2}.image())});
  CHECK_THROWS_AS(quotient(g3, refl.members), DomainError);
}

TEST_CASE("direct products") {
  CHECK(direct_product(s3(), cyclic(1)).order() == 6);
  CHECK(build(parse_family("dihedral:6xcyclic:3")).order() == 18);
  CHECK(build(parse_family("hol:5xcyclic:2")).order() == 40);
  CHECK_THROWS_AS(direct_product(symmetric(6), symmetric(6), 1000), CapExceeded);
}

TEST_CASE("cyclic subgroups") {
  const auto c4 = maximal_cyclic_subgroups(cyclic(4));
  REQUIRE(c4.size() == 1);
  CHECK(c4[0].order == 4);
  CHECK(maximal_cyclic_orders(psl2(9)) == std::vector<u64>{3, 4, 5});
  for (const Group& g : corpus()) {
    CAPTURE(g.label());
    const auto all = cyclic_subgroups(g);
    const u64 e = group_exponent(g);
    std::vector<int> covered(g.order(), 0);
    for (const auto& c : all) {
      CHECK(c.members.size() == c.order);
      if (!c.maximal) continue;
      CHECK(e % c.order == 0);
      for (ElemId x : c.members) covered[x] = 1;
    }
    CHECK(std::count(covered.begin(), covered.end(), 1) == static_cast<long>(g.order()));
    // number of cyclic subgroups of order d is O_d / phi(d)
    const OrderCensus cen = order_census(g);
    for (u64 d : divisors(g.order())) {
      const auto n = std::count_if(all.begin(), all.end(), [&](const CyclicSubgroup& c) { return c.order == d; });
      CHECK(static_cast<u64>(n) == cyclic_count(cen, d));
    }
  }
}

TEST_CASE("maximal cyclic orders of pgl2:64") {
  CHECK(maximal_cyclic_orders(pgl2(64)) == std::vector<u64>{2, 63, 65});
}

TEST_CASE("nilpotency") {
  CHECK(is_nilpotent(quaternion8()));
  CHECK_FALSE(is_nilpotent(s3()));
  CHECK(is_nilpotent(cyclic(6)));
  for (const Group& g : corpus()) {
    CAPTURE(g.label());
    CHECK(is_nilpotent(g) == oracle::coprime_commuting(g));
  }
}

TEST_CASE("sylow subgroups") {
  CHECK(sylow_count(alternating(4), 3) == 4);
  CHECK(sylow_count(quaternion8(), 2) == 1);
  CHECK(sylow_count(s3(), 2) == 3);
  CHECK(sylow_count(alternating(5), 5) == 6);
  CHECK_THROWS_AS(sylow_count(s3(), 5), DomainError);
  for (const Group& g : corpus()) {
    for (u64 p : prime_divisors(g.order())) {
      CAPTURE(g.label());
      CAPTURE(p);
      const u64 np = sylow_count(g, p);
      CHECK(np % p == 1);
      CHECK((g.order() / p_part(g.order(), p)) % np == 0);
      CHECK(sylow_subgroup(g, p).order() == p_part(g.order(), p));
    }
  }
}
