#include "breadthlab/families.hpp"

#include <array>
#include <charconv>
#include <map>
#include <numeric>

#include "breadthlab/error.hpp"
#include "breadthlab/gf.hpp"

namespace breadthlab {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

void check_cap(u128 expected, u64 cap, const std::string& name) {
  if (expected > cap)
    throw CapExceeded(name + " has order above the element cap " + std::to_string(cap), cap);
}

Group checked(std::vector<Perm> gens, u64 expected, u64 cap, std::string label) {
  check_cap(expected, cap, label);
  Group g = Group::enumerate(gens, cap, label);
  if (g.order() != expected)
    throw InvariantViolation(label + ": enumerated order " + std::to_string(g.order()) +
                             " differs from expected " + std::to_string(expected));
  return g;
}

template <class F>
Perm perm_from(std::size_t n, F&& f) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(f(i));
  return Perm(std::span<const Point>(img));
}

u64 factorial(u64 n) {
  u64 r = 1;
  for (u64 i = 2; i <= n; ++i) r *= i;
  return r;
}

// Smallest generator of (Z/p)^*.
u64 primitive_root(u64 p) {
  if (p == 2) return 1;
  const auto primes = prime_divisors(p - 1);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 r : primes) {
      u64 acc = 1, b = g, e = (p - 1) / r;
      while (e) {
        if (e & 1) acc = acc * b % p;
        b = b * b % p;
        e >>= 1;
      }
      if (acc == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw InvariantViolation("no primitive root");
}

// Additive basis of GF(p^m) in index encoding: 1, p, p^2, ...
std::vector<std::uint32_t> additive_basis(const FieldSpec& F) {
  std::vector<std::uint32_t> basis;
  std::uint32_t b = 1;
  for (unsigned i = 0; i < F.degree(); ++i, b *= F.characteristic()) basis.push_back(b);
  return basis;
}

// ---- 2x2 matrices over GF(3) acting on row vectors

using Mat2 = std::array<int, 4>;  // row-major

Perm gf3_action(const Mat2& m) {
  // point index v0 + 3 v1 - 1 over nonzero vectors
  return perm_from(8, [&](std::size_t i) {
    const int v = static_cast<int>(i) + 1, v0 = v % 3, v1 = v / 3;
    const int w0 = (v0 * m[0] + v1 * m[2]) % 3, w1 = (v0 * m[1] + v1 * m[3]) % 3;
    return w0 + 3 * w1 - 1;
  });
}

// ---- projective line

struct ProjectiveLine {
  const FieldSpec& F;
  std::size_t infinity() const { return F.order(); }

  template <class Map>
  Perm action(Map&& map) const {
    return perm_from(F.order() + 1, map);
  }

  Perm translate() const {
    return action([&](std::size_t x) -> std::size_t {
      if (x == infinity()) return x;
      return index_of(F.add(field_elem(static_cast<std::uint32_t>(x)), F.one()));
    });
  }
  Perm scale(FieldElem a) const {
    return action([&, a](std::size_t x) -> std::size_t {
      if (x == infinity()) return x;
      return index_of(F.mul(a, field_elem(static_cast<std::uint32_t>(x))));
    });
  }
  // x -> c / x
  Perm invert(FieldElem c) const {
    return action([&, c](std::size_t x) -> std::size_t {
      if (x == infinity()) return 0;
      if (x == 0) return infinity();
      return index_of(F.div(c, field_elem(static_cast<std::uint32_t>(x))));
    });
  }
};

void require_prime_power(u64 q, const std::string& who) {
  require(as_prime_power(q).has_value(), who + ": q = " + std::to_string(q) + " is not a prime power");
}

}  // namespace

// ------------------------------------------------------------ small families

Group cyclic(u64 n, u64 cap) {
  require(n >= 1 && n <= kMaxDegree, "cyclic: n out of range");
  const std::string label = "cyclic:" + std::to_string(n);
  return checked({perm_from(n, [n](std::size_t i) { return (i + 1) % n; })}, n, cap, label);
}

Group dihedral(u64 two_n, u64 cap) {
  require(two_n >= 2 && two_n % 2 == 0 && two_n / 2 <= kMaxDegree, "dihedral: order must be even and >= 2");
  const u64 n = two_n / 2;
  const std::string label = "dihedral:" + std::to_string(two_n);
  if (n == 1) return checked({Perm::from_cycles(2, {{0, 1}})}, 2, cap, label);
  if (n == 2)  // the 2-gon action is not faithful; use the regular action of V_4
    return checked({Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})}, 4, cap,
                   label);
  Perm rot = perm_from(n, [n](std::size_t i) { return (i + 1) % n; });
  Perm ref = perm_from(n, [n](std::size_t i) { return (n - i) % n; });
  return checked({rot, ref}, two_n, cap, label);
}

Group quaternion8() {
  // i and j in SL(2,3): i^2 = j^2 = -1.
  return checked({gf3_action({0, 2, 1, 0}), gf3_action({1, 1, 1, 2})}, 8, kDefaultCap, "q8");
}

Group symmetric(u64 n, u64 cap) {
  require(n >= 1 && n <= 9, "symmetric: n must be in 1..9");
  const std::string label = "sym:" + std::to_string(n);
  if (n == 1) return checked({Perm::identity(1)}, 1, cap, label);
  Perm swap = perm_from(n, [](std::size_t i) { return i < 2 ? 1 - i : i; });
  Perm cyc = perm_from(n, [n](std::size_t i) { return (i + 1) % n; });
  return checked({swap, cyc}, factorial(n), cap, label);
}

Group alternating(u64 n, u64 cap) {
  require(n >= 1 && n <= 9, "alternating: n must be in 1..9");
  const std::string label = "alt:" + std::to_string(n);
  if (n <= 2) return checked({Perm::identity(n)}, 1, cap, label);
  Perm three = perm_from(n, [](std::size_t i) { return i < 3 ? (i + 1) % 3 : i; });
  // An odd-length cycle: (0 .. n-1) for n odd, (1 .. n-1) for n even.
  Perm longc = n % 2 ? perm_from(n, [n](std::size_t i) { return (i + 1) % n; })
                     : perm_from(n, [n](std::size_t i) { return i == 0 ? 0 : (i % (n - 1)) + 1; });
  return checked({three, longc}, factorial(n) / 2, cap, label);
}

Group hol_cyclic(u64 p, u64 cap) {
  require(is_prime(p) && p % 2 == 1 && p <= 101, "hol: p must be an odd prime <= 101");
  Group g = hol_sub(p, p - 1, cap);
  g.set_label("hol:" + std::to_string(p));
  return g;
}

Group hol_sub(u64 p, u64 d, u64 cap) {
  require(is_prime(p) && p % 2 == 1 && p <= 101, "holsub: p must be an odd prime <= 101");
  require(d >= 1 && (p - 1) % d == 0, "holsub: d must divide p - 1");
  u64 a = 1;
  const u64 g = primitive_root(p);
  for (u64 i = 0; i < (p - 1) / d; ++i) a = a * g % p;
  Perm shift = perm_from(p, [p](std::size_t x) { return (x + 1) % p; });
  Perm scale = perm_from(p, [p, a](std::size_t x) { return x * a % p; });
  return checked({shift, scale}, p * d, cap, "holsub:" + std::to_string(p) + ":" + std::to_string(d));
}

Group affine_field(u64 q, u64 cap) {
  require_prime_power(q, "aff");
  require(q <= (1u << 12), "aff: q must be <= 2^12");
  const FieldSpec F = FieldSpec::of_order(q);
  std::vector<Perm> gens;
  for (std::uint32_t b : additive_basis(F))
    gens.push_back(perm_from(q, [&](std::size_t x) {
      return index_of(F.add(field_elem(static_cast<std::uint32_t>(x)), field_elem(b)));
    }));
  const FieldElem nu = F.primitive_element();
  gens.push_back(perm_from(q, [&](std::size_t x) { return index_of(F.mul(nu, field_elem(static_cast<std::uint32_t>(x)))); }));
  return checked(gens, q * (q - 1), cap, "aff:" + std::to_string(q));
}

Group frobenius_extension(const Factorization& s, u64 k, u64 cap) {
  require(k >= 2, "frobext: k must be >= 2");
  require(!s.empty(), "frobext: s must be > 1");
  std::vector<FieldSpec> fields;
  for (const auto& [p, e] : s) {
    const u64 q = checked_pow(p, e);
    require(q % k == 1, "frobext: " + std::to_string(q) + " is not 1 mod " + std::to_string(k));
    fields.push_back(FieldSpec::make(p, e));
  }
  u64 npoints = 1;
  for (const auto& F : fields) npoints *= F.order();
  require(npoints <= kMaxDegree, "frobext: s too large");

  // Mixed-radix encoding of N = GF(q_1) + ... + GF(q_r).
  std::vector<u64> radix{1};
  for (const auto& F : fields) radix.push_back(radix.back() * F.order());
  auto coord = [&](std::size_t x, std::size_t i) { return field_elem(static_cast<std::uint32_t>(x / radix[i] % fields[i].order())); };

  std::vector<FieldElem> omega;
  for (const auto& F : fields) {
    const FieldElem w = F.pow(F.primitive_element(), (F.order() - 1) / k);
    if (F.mult_order(w) != k) throw InvariantViolation("frobext: no element of order k");
    omega.push_back(w);
  }

  std::vector<Perm> gens;
  for (std::size_t i = 0; i < fields.size(); ++i)
    for (std::uint32_t b : additive_basis(fields[i]))
      gens.push_back(perm_from(npoints, [&, i, b](std::size_t x) {
        const FieldElem c = coord(x, i);
        const u64 nc = index_of(fields[i].add(c, field_elem(b)));
        return x + (nc - index_of(c)) * radix[i];
      }));
  auto mult_by = [&](u64 j) {
    return perm_from(npoints, [&, j](std::size_t x) {
      u64 y = 0;
      for (std::size_t i = 0; i < fields.size(); ++i)
        y += index_of(fields[i].mul(fields[i].pow(omega[i], j), coord(x, i))) * radix[i];
      return y;
    });
  };
  gens.push_back(mult_by(1));

  // Nontrivial elements of the complement fix only 0.
  for (u64 j = 1; j < k; ++j)
    if (kernels::count_fixed_points(mult_by(j).image()) != 1)
      throw InvariantViolation("frobext: complement is not fixed-point-free");

  return checked(gens, npoints * k, cap, "frobext:" + std::to_string(product(s)) + ":" + std::to_string(k));
}

// ------------------------------------------------------------- linear groups

u64 psl2_order(u64 q) { return q * (q * q - 1) / std::gcd(u64{2}, q - 1); }
u64 pgl2_order(u64 q) { return q * (q - 1) * (q + 1); }
u64 suzuki_order(u64 q) { return q * q * (q * q + 1) * (q - 1); }

Group psl2(u64 q, u64 cap) {
  require_prime_power(q, "psl2");
  require(q >= 4 && q <= 128, "psl2: q must be in 4..128");
  check_cap(psl2_order(q), cap, "psl2:" + std::to_string(q));
  const FieldSpec F = FieldSpec::of_order(q);
  const ProjectiveLine line{F};
  const FieldElem nu = F.primitive_element();
  return checked({line.translate(), line.scale(F.mul(nu, nu)), line.invert(F.neg(F.one()))}, psl2_order(q), cap,
                 "psl2:" + std::to_string(q));
}

Group pgl2(u64 q, u64 cap) {
  require_prime_power(q, "pgl2");
  require(q >= 3 && q <= 128, "pgl2: q must be in 3..128");
  check_cap(pgl2_order(q), cap, "pgl2:" + std::to_string(q));
  const FieldSpec F = FieldSpec::of_order(q);
  const ProjectiveLine line{F};
  return checked({line.translate(), line.scale(F.primitive_element()), line.invert(F.one())}, pgl2_order(q), cap,
                 "pgl2:" + std::to_string(q));
}

Group sl23() {
  return checked({gf3_action({1, 1, 0, 1}), gf3_action({1, 0, 1, 1})}, 24, kDefaultCap, "sl23");
}

Group gl23() {
  return checked({gf3_action({1, 1, 0, 1}), gf3_action({2, 0, 0, 1}), gf3_action({0, 1, 1, 0})}, 48, kDefaultCap,
                 "gl23");
}

// ------------------------------------------------------------------- Suzuki

namespace {

using Vec4 = std::array<FieldElem, 4>;
using Mat4 = std::array<std::array<FieldElem, 4>, 4>;

Vec4 row_times(const FieldSpec& F, const Vec4& v, const Mat4& m) {
  Vec4 r{F.zero(), F.zero(), F.zero(), F.zero()};
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) r[j] = F.add(r[j], F.mul(v[i], m[i][j]));
  return r;
}

Vec4 normalize(const FieldSpec& F, Vec4 v) {
  for (int i = 0; i < 4; ++i)
    if (index_of(v[i]) != 0) {
      const FieldElem s = F.inv(v[i]);
      for (auto& c : v) c = F.mul(c, s);
      return v;
    }
  throw InvariantViolation("suzuki: zero vector");
}

std::size_t encode(const FieldSpec& F, const Vec4& v) {
  std::size_t k = 0;
  for (int i = 3; i >= 0; --i) k = k * F.order() + index_of(v[i]);
  return k;
}

}  // namespace

Group suzuki(u64 q, bool allow_large, u64 cap) {
  const auto pp = as_prime_power(q);
  require(pp && pp->prime == 2 && pp->exponent % 2 == 1 && pp->exponent >= 3, "suzuki: q must be 2^(2n+1), n >= 1");
  require(q == 8 || q == 32, "suzuki: only q in {8, 32} is supported");
  require(q == 8 || allow_large, "suzuki:32 needs the high-memory flag (--allow-large)");
  const u64 expected = suzuki_order(q);
  const std::string label = "suzuki:" + std::to_string(q);
  check_cap(expected, cap, label);

  const FieldSpec F = FieldSpec::of_order(q);
  const unsigned n = (pp->exponent - 1) / 2;
  const u64 two_n = u64{1} << n;
  const FieldElem O = F.zero(), I = F.one();

  auto U = [&](FieldElem a, FieldElem b) {
    const FieldElem at = F.theta(a), bt = F.theta(b);
    const FieldElem a_t2 = F.mul(at, F.mul(a, a));                // a^(theta+2)
    const FieldElem a_t1 = F.mul(at, a);                          // a^(theta+1)
    return Mat4{{{I, O, O, O},
                 {a, I, O, O},
                 {b, at, I, O},
                 {F.add(F.add(a_t2, F.mul(a, b)), bt), F.add(a_t1, b), a, I}}};
  };
  auto D = [&](FieldElem l) {
    const FieldElem li = F.inv(l);
    return Mat4{{{F.pow(l, 1 + two_n), O, O, O},
                 {O, F.pow(l, two_n), O, O},
                 {O, O, F.pow(li, two_n), O},
                 {O, O, O, F.pow(li, 1 + two_n)}}};
  };
  const Mat4 T{{{O, O, O, I}, {O, O, I, O}, {O, I, O, O}, {I, O, O, O}}};
  const FieldElem nu = F.primitive_element();
  const std::vector<Mat4> mats{U(I, O), U(O, I), U(nu, O), U(O, nu), D(nu), T};

  // Ovoid = orbit of <e_1> under the matrix group.
  std::vector<Vec4> points{{I, O, O, O}};
  std::map<std::size_t, std::size_t> where{{encode(F, points[0]), 0}};
  for (std::size_t head = 0; head < points.size(); ++head)
    for (const auto& m : mats) {
      const Vec4 w = normalize(F, row_times(F, points[head], m));
      if (where.emplace(encode(F, w), points.size()).second) points.push_back(w);
    }
  if (points.size() != q * q + 1)
    throw InvariantViolation(label + ": orbit has " + std::to_string(points.size()) + " points, expected q^2+1");

  std::vector<Perm> gens;
  for (const auto& m : mats)
    gens.push_back(perm_from(points.size(), [&](std::size_t i) {
      return where.at(encode(F, normalize(F, row_times(F, points[i], m))));
    }));
  Group g = checked(gens, expected, cap, label);

  // 2-transitivity: every ordered pair of distinct points is the image of (0, 1).
  const std::size_t np = points.size();
  std::vector<bool> hit(np * np, false);
  std::size_t distinct = 0;
  for (ElemId x = 0; x < g.order(); ++x) {
    const auto e = g.element(x);
    const std::size_t key = std::size_t{e[0]} * np + e[1];
    if (!hit[key]) {
      hit[key] = true;
      ++distinct;
    }
  }
  if (distinct != np * (np - 1)) throw InvariantViolation(label + ": action is not 2-transitive");
  return g;
}

// -------------------------------------------------------------- spec parsing

namespace {

struct TagInfo {
  std::size_t arity;
};

const std::map<std::string, TagInfo, std::less<>>& tags() {
  static const std::map<std::string, TagInfo, std::less<>> t{
      {"cyclic", {1}}, {"dihedral", {1}}, {"psl2", {1}}, {"pgl2", {1}}, {"suzuki", {1}},
      {"hol", {1}},    {"holsub", {2}},   {"aff", {1}},  {"frobext", {2}}, {"sym", {1}},
      {"alt", {1}},    {"q8", {0}},       {"sl23", {0}}, {"gl23", {0}}};
  return t;
}

}  // namespace

// Factors are read left to right: a tag (longest known match), then
// ":<digits>" per parameter, then either the end or 'x' and the next factor.
// Tags such as "frobext" contain 'x', so the string cannot simply be split.
FamilyExpr parse_family(std::string_view spec) {
  if (spec.empty()) throw ParseError("empty family spec");
  const std::string full(spec);
  FamilyExpr expr;
  std::size_t pos = 0;
  while (true) {
    std::string tag;
    for (const auto& [name, info] : tags())
      if (spec.substr(pos).starts_with(name) && name.size() > tag.size()) tag = name;
    if (tag.empty()) throw ParseError("unknown family at '" + std::string(spec.substr(pos)) + "' in '" + full + "'");
    pos += tag.size();
    FamilyId id{tag, {}};
    while (pos < spec.size() && spec[pos] == ':') {
      ++pos;
      u64 v = 0;
      const auto* b = spec.data() + pos;
      const auto [ptr, ec] = std::from_chars(b, spec.data() + spec.size(), v);
      if (ptr == b || ec != std::errc{}) throw ParseError("bad parameter in '" + full + "'");
      pos += static_cast<std::size_t>(ptr - b);
      id.params.push_back(v);
    }
    if (id.params.size() != tags().at(tag).arity)
      throw ParseError("family '" + tag + "' takes " + std::to_string(tags().at(tag).arity) + " parameter(s)");
    expr.push_back(std::move(id));
    if (pos == spec.size()) break;
    if (spec[pos] != 'x' || pos + 1 == spec.size()) throw ParseError("unexpected '" + std::string(spec.substr(pos)) + "' in '" + full + "'");
    ++pos;
  }
  return expr;
}

std::string to_string(const FamilyId& id) {
  std::string s = id.tag;
  for (u64 p : id.params) s += ":" + std::to_string(p);
  return s;
}

std::string to_string(const FamilyExpr& expr) {
  std::string s;
  for (const auto& f : expr) s += (s.empty() ? "" : "x") + to_string(f);
  return s;
}

namespace {

u128 factor_order(const FamilyId& id) {
  const auto& t = id.tag;
  const auto P = [&](std::size_t i) { return id.params.at(i); };
  if (t == "cyclic") return P(0);
  if (t == "dihedral") return P(0);
  if (t == "q8") return 8;
  if (t == "sl23") return 24;
  if (t == "gl23") return 48;
  if (t == "sym" || t == "alt") {
    require(P(0) >= 1 && P(0) <= 9, t + ": n must be in 1..9");
    return t == "sym" ? factorial(P(0)) : std::max<u64>(1, factorial(P(0)) / 2);
  }
  if (t == "hol") return u128{P(0)} * (P(0) - 1);
  if (t == "holsub") return u128{P(0)} * P(1);
  if (t == "aff") return u128{P(0)} * (P(0) - 1);
  if (t == "frobext") return u128{P(0)} * P(1);
  if (t == "psl2") {
    require(P(0) >= 2 && P(0) < (1u << 20), "psl2: q out of range");
    return psl2_order(P(0));
  }
  if (t == "pgl2") {
    require(P(0) >= 2 && P(0) < (1u << 20), "pgl2: q out of range");
    return pgl2_order(P(0));
  }
  if (t == "suzuki") {
    require(P(0) >= 2 && P(0) < (1u << 12), "suzuki: q out of range");
    return suzuki_order(P(0));
  }
  throw ParseError("unknown family " + t);
}

}  // namespace

u128 expected_order(const FamilyExpr& expr) {
  u128 r = 1;
  for (const auto& f : expr) r *= factor_order(f);
  return r;
}

Group build(const FamilyId& id, u64 cap, bool allow_large) {
  const auto& t = id.tag;
  const auto P = [&](std::size_t i) { return id.params.at(i); };
  if (t == "cyclic") return cyclic(P(0), cap);
  if (t == "dihedral") return dihedral(P(0), cap);
  if (t == "q8") return quaternion8();
  if (t == "sl23") return sl23();
  if (t == "gl23") return gl23();
  if (t == "sym") return symmetric(P(0), cap);
  if (t == "alt") return alternating(P(0), cap);
  if (t == "hol") return hol_cyclic(P(0), cap);
  if (t == "holsub") return hol_sub(P(0), P(1), cap);
  if (t == "aff") return affine_field(P(0), cap);
  if (t == "frobext") {
    require(P(0) >= 2, "frobext: s must be >= 2");
    return frobenius_extension(factorize(P(0)), P(1), cap);
  }
  if (t == "psl2") return psl2(P(0), cap);
  if (t == "pgl2") return pgl2(P(0), cap);
  if (t == "suzuki") return suzuki(P(0), allow_large, cap);
  throw ParseError("unknown family " + t);
}

Group build(const FamilyExpr& expr, u64 cap, bool allow_large) {
  if (expr.empty()) throw ParseError("empty family expression");
  if (expected_order(expr) > cap)
    throw CapExceeded(to_string(expr) + " has order above the element cap " + std::to_string(cap), cap);
  Group g = build(expr.front(), cap, allow_large);
  for (std::size_t i = 1; i < expr.size(); ++i) g = direct_product(g, build(expr[i], cap, allow_large), cap);
  g.set_label(to_string(expr));
  return g;
}

}  // namespace breadthlab
