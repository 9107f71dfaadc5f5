#include <doctest.h>

#include <set>

#include "breadthlab/breadth.hpp"
#include "breadthlab/error.hpp"
#include "breadthlab/families.hpp"

using namespace breadthlab;

namespace {

std::set<u64> element_orders(const Group& g) {
  std::set<u64> out;
  for (const auto& [d, n] : order_census(g).counts) out.insert(d);
  return out;
}

u64 B_of(const Group& g) { return global_breadth(order_census(g)).B; }

}  // namespace

TEST_CASE("small families") {
  CHECK(dihedral(6).order() == 6);
  CHECK(dihedral(2).order() == 2);
  CHECK(dihedral(4).order() == 4);
  CHECK(element_orders(dihedral(4)) == std::set<u64>{1, 2});
  CHECK(alternating(5).order() == 60);
  CHECK(symmetric(4).order() == 24);
  CHECK(quaternion8().order() == 8);
  CHECK(order_census(quaternion8()).count(2) == 1);
  CHECK(cyclic(1).order() == 1);
  CHECK_THROWS_AS(symmetric(10), DomainError);
  CHECK_THROWS_AS(dihedral(5), DomainError);
  CHECK_THROWS_AS(symmetric(8, 1000), CapExceeded);
}

TEST_CASE("holomorphs and affine groups") {
  CHECK(hol_cyclic(5).order() == 20);
  CHECK(hol_cyclic(7).order() == 42);
  CHECK(hol_sub(7, 3).order() == 21);
  CHECK_THROWS_AS(hol_sub(7, 4), DomainError);
  CHECK_THROWS_AS(hol_cyclic(9), DomainError);
  CHECK(affine_field(8).order() == 56);
  CHECK(affine_field(9).order() == 72);
  CHECK(affine_field(2).order() == 2);
  CHECK_THROWS_AS(affine_field(6), DomainError);
  // hol_sub with the full multiplier group is the holomorph
  CHECK(order_census(hol_sub(11, 10)) == order_census(hol_cyclic(11)));
}

TEST_CASE("frobenius extensions") {
  const Group g54 = frobenius_extension(factorize(5), 4);
  CHECK(g54.order() == 20);
  CHECK(B_of(g54) == 4);
  const Group g76 = frobenius_extension(factorize(7), 6);
  CHECK(g76.order() == 42);
  CHECK(B_of(g76) == 6);
  const Group g98 = frobenius_extension(factorize(9), 8);
  CHECK(g98.order() == 72);
  CHECK(B_of(g98) == 8);
  // mixed summands: s = 5 * 13 with k = 4
  const Group g = frobenius_extension(Factorization{{5, 1}, {13, 1}}, 4);
  CHECK(g.order() == 260);
  CHECK(4 * B_of(g) == 3 * 65 + 1);
  CHECK_THROWS_AS(frobenius_extension(factorize(7), 4), DomainError);
  CHECK_THROWS_AS(frobenius_extension(factorize(7), 1), DomainError);
}

TEST_CASE("projective linear groups") {
  CHECK(psl2(4).order() == 60);
  CHECK(psl2(9).order() == 360);
  CHECK(psl2(9).degree() == 10);
  CHECK(pgl2(3).order() == 24);
  CHECK(psl2_order(27) == 9828);
  CHECK(pgl2_order(64) == 262080);
  CHECK_THROWS_AS(psl2(3), DomainError);
  CHECK_THROWS_AS(psl2(6), DomainError);
  CHECK_THROWS_AS(pgl2(256), DomainError);
  // psl2 and pgl2 coincide in characteristic 2
  CHECK(order_census(psl2(8)) == order_census(pgl2(8)));
}

TEST_CASE("pgl2:64") {
  const Group g = pgl2(64);
  CHECK(g.order() == 262080);
  CHECK(g.degree() == 65);
}

TEST_CASE("suzuki:8") {
  const Group g = suzuki(8);
  CHECK(g.order() == 29120);
  CHECK(g.degree() == 65);
  CHECK(element_orders(g) == std::set<u64>{1, 2, 4, 5, 7, 13});
  CHECK(suzuki_order(8) == 29120);
  CHECK_THROWS_AS(suzuki(32), DomainError);
  CHECK_THROWS_AS(suzuki(32, true), CapExceeded);
  CHECK_THROWS_AS(suzuki(16), DomainError);
  CHECK_THROWS_AS(suzuki(128), DomainError);
}

TEST_CASE("suzuki:8 is 2-transitive") {
  const Group g = suzuki(8);
  std::set<std::pair<Point, Point>> images;
  for (ElemId x = 0; x < g.order(); ++x) images.emplace(g.element(x)[0], g.element(x)[1]);
  CHECK(images.size() == 65u * 64u);
}

TEST_CASE("GL(2,3) and SL(2,3)") {
  CHECK(gl23().order() == 48);
  CHECK(sl23().order() == 24);
  CHECK(order_census(sl23()).count(2) == 1);
  CHECK(gl23().degree() == 8);
}

TEST_CASE("family specs") {
  CHECK(parse_family("holsub:7:3") == FamilyExpr{{"holsub", {7, 3}}});
  CHECK(parse_family("dihedral:6xcyclic:3") == FamilyExpr{{"dihedral", {6}}, {"cyclic", {3}}});
  CHECK(parse_family("frobext:5:4") == FamilyExpr{{"frobext", {5, 4}}});
  CHECK(parse_family("q8xq8").size() == 2);
  for (const char* s : {"cyclic:12", "dihedral:30", "psl2:9", "pgl2:64", "suzuki:8", "hol:7", "holsub:7:3", "aff:9",
                        "frobext:5:4", "sym:4", "alt:5", "q8", "sl23", "gl23", "dihedral:6xcyclic:3"})
    CHECK(to_string(parse_family(s)) == s);
  for (const char* s : {"", "bogus:1", "cyclic", "cyclic:", "cyclic:1:2", "q8:1", "cyclic:3x", "cyclic:-3",
                        "cyclic:3y", "xcyclic:3"})
    CHECK_THROWS_AS(parse_family(s), ParseError);
  CHECK(expected_order(parse_family("pgl2:64xcyclic:2")) == 524160);
  CHECK(expected_order(parse_family("suzuki:32")) == 32537600);
  CHECK(expected_order(parse_family("frobext:9:8")) == 72);
  const Group g = build(parse_family("hol:5xcyclic:2"));
  CHECK(g.label() == "hol:5xcyclic:2");
  CHECK(g.order() == 40);
  CHECK_THROWS_AS(build(parse_family("pgl2:64xcyclic:64")), CapExceeded);
}

TEST_CASE("every corpus constructor passes its self-check") {
  for (const char* s : {"cyclic:30", "dihedral:30", "psl2:5", "psl2:7", "psl2:8", "psl2:11", "psl2:13", "psl2:16",
                        "psl2:25", "psl2:27", "pgl2:5", "pgl2:7", "pgl2:9", "pgl2:11", "pgl2:13", "pgl2:16",
                        "hol:13", "holsub:13:4", "aff:16", "aff:27", "frobext:13:12", "frobext:13:6", "sym:5",
                        "alt:6"}) {
    CAPTURE(s);
    const auto e = parse_family(s);
    CHECK(u128{build(e).order()} == expected_order(e));
  }
}
