// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance [--only N]

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "breadthlab/breadth.hpp"
#include "breadthlab/cyclic.hpp"
#include "breadthlab/families.hpp"
#include "breadthlab/golden.hpp"
#include "breadthlab/hbounds.hpp"
#include "breadthlab/structure.hpp"
#include "breadthlab/verify.hpp"

using namespace breadthlab;

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kFig2Seconds = 1.0;
constexpr double kFig1Seconds = 60.0;
constexpr double kClosedFormSeconds = 300.0;
constexpr int kRandomGroups = 200;
constexpr u64 kRandomMaxOrder = 5000;
constexpr std::uint64_t kSeed = 0x5eed2026;
constexpr u64 kSweepMax = u64{1} << 20;

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  std::function<Outcome()> run;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string secs(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << " s";
  return os.str();
}

// Builds without touching any census cache.
Group make(const std::string& spec) { return build(parse_family(spec)); }

std::vector<std::string> closed_form_instances() {
  std::vector<std::string> out;
  for (auto f : {ClosedFormFamily::psl2, ClosedFormFamily::pgl2, ClosedFormFamily::suzuki})
    for (u64 q : golden::closed_form_q(f)) out.push_back(std::string(family_name(f)) + ":" + std::to_string(q));
  return out;
}

std::string first_lines(const std::vector<std::string>& v, std::size_t n = 5) {
  std::string s;
  for (std::size_t i = 0; i < std::min(n, v.size()); ++i) s += (i ? "; " : "") + v[i];
  if (v.size() > n) s += "; ...";
  return s;
}

Outcome verify_scope(const char* scope, double limit) {
  const auto t0 = Clock::now();
  const VerifyReport r = run_verify(scope, BuildOptions{});
  const double t = seconds_since(t0);
  std::vector<std::string> bad;
  for (const auto& c : r.checks)
    if (!c.pass)
      for (const auto& d : c.details) bad.push_back(d);
  std::string summary = r.checks.empty() ? "" : r.checks.front().summary;
  const bool fast = t < limit;
  if (!fast) bad.push_back("took " + secs(t) + ", limit " + secs(limit));
  return {r.ok() && fast, summary + ", " + secs(t) + (bad.empty() ? "" : "; " + first_lines(bad))};
}

Outcome criterion_closed_forms() {
  const auto t0 = Clock::now();
  std::vector<std::string> bad;
  std::size_t n = 0;
  for (auto f : {ClosedFormFamily::psl2, ClosedFormFamily::pgl2, ClosedFormFamily::suzuki})
    for (u64 q : golden::closed_form_q(f)) {
      const std::string spec = std::string(family_name(f)) + ":" + std::to_string(q);
      const u64 B = global_breadth(order_census(make(spec))).B;
      const u128 cf = closed_form_B(f, q);
      ++n;
      if (cf != B) bad.push_back(spec + ": closed form " + to_decimal(cf) + " vs census " + std::to_string(B));
      if (f == ClosedFormFamily::suzuki && q == 8 && B != 1783) bad.push_back("suzuki:8 B = " + std::to_string(B));
    }
  const double t = seconds_since(t0);
  if (t >= kClosedFormSeconds) bad.push_back("took " + secs(t));
  return {bad.empty(), std::to_string(n) + " instances, " + secs(t) + (bad.empty() ? "" : "; " + first_lines(bad))};
}

Outcome criterion_h_membership() {
  std::vector<std::string> bad;
  auto specs = closed_form_instances();
  specs.push_back("sym:4");
  for (const auto& spec : specs) {
    const Group g = make(spec);
    const u64 B = global_breadth(order_census(g)).B;
    const HVerdict v = h_class_test(g.order(), B);
    if (!v.in_H) bad.push_back(spec + " not in H");
    if (!v.sqrt_bound_holds) bad.push_back(spec + " violates |G|^2 <= 8B^3");
    if (spec == "sym:4" && v.bound_BB1 != 30) bad.push_back("sym:4 B(B+1) = " + to_decimal(v.bound_BB1));
  }
  return {bad.empty(), std::to_string(specs.size()) + " instances" + (bad.empty() ? "" : "; " + first_lines(bad))};
}

Outcome criterion_fast_path() {
  std::vector<std::string> specs = closed_form_instances();
  for (u64 n = 2; n <= 30; ++n) specs.push_back("dihedral:" + std::to_string(2 * n));
  for (u64 p : {2, 3, 5}) specs.push_back("cyclic:" + std::to_string(p) + "xcyclic:" + std::to_string(p));
  std::vector<std::string> bad, excluded;
  std::size_t tested = 0;
  for (const auto& spec : specs) {
    const Group g = make(spec);
    const auto cyc = cyclic_subgroups(g);
    const PartitionReport p = maximal_cyclic_partition_check(g, cyc);
    if (!p.is_nontrivial) {
      excluded.push_back(spec);
      continue;
    }
    ++tested;
    const OrderCensus c = order_census(g);
    const auto mco = maximal_cyclic_orders(cyc);
    const u64 B = global_breadth(c).B;
    const FastBreadth f = global_breadth_fast(g);
    if (f.B != B) bad.push_back(spec + ": fast " + std::to_string(f.B) + " vs full " + std::to_string(B));
    if (std::find(mco.begin(), mco.end(), f.witness_order) == mco.end())
      bad.push_back(spec + ": witness " + std::to_string(f.witness_order) + " is not a maximal cyclic order");
  }
  std::string detail = std::to_string(tested) + " partitioned instances";
  if (!excluded.empty()) detail += ", no partition: " + first_lines(excluded);
  return {bad.empty() && tested > 0, detail + (bad.empty() ? "" : "; " + first_lines(bad))};
}

// Random family parameters with formula order <= kRandomMaxOrder.
std::vector<std::string> random_corpus(std::mt19937_64& rng) {
  const std::vector<u64> odd_primes = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
  std::vector<u64> pp;
  for (u64 q = 2; q <= 71; ++q)
    if (as_prime_power(q)) pp.push_back(q);
  auto pick = [&](const auto& v) { return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)]; };
  auto range = [&](u64 lo, u64 hi) { return std::uniform_int_distribution<u64>(lo, hi)(rng); };
  auto divisor_of = [&](u64 n) { return pick(divisors(n)); };

  auto one = [&]() -> std::string {
    switch (range(0, 12)) {
      case 0: return "cyclic:" + std::to_string(range(1, 300));
      case 1: return "dihedral:" + std::to_string(2 * range(1, 150));
      case 2: return "sym:" + std::to_string(range(1, 7));
      case 3: return "alt:" + std::to_string(range(1, 7));
      case 4: return "hol:" + std::to_string(pick(odd_primes));
      case 5: {
        const u64 p = pick(odd_primes);
        return "holsub:" + std::to_string(p) + ":" + std::to_string(divisor_of(p - 1));
      }
      case 6: return "aff:" + std::to_string(pick(pp));
      case 7: {
        const u64 s = pick(pp);
        const auto ks = divisors(s - 1);
        std::vector<u64> ok;
        for (u64 k : ks)
          if (k >= 2) ok.push_back(k);
        if (ok.empty()) return "frobext:5:4";
        return "frobext:" + std::to_string(s) + ":" + std::to_string(pick(ok));
      }
      case 8: return "psl2:" + std::to_string(pick(std::vector<u64>{4, 5, 7, 8, 9, 11, 13, 16, 17, 19}));
      case 9: return "pgl2:" + std::to_string(pick(std::vector<u64>{3, 4, 5, 7, 8, 9, 11, 13, 16, 17}));
      case 10: return pick(std::vector<std::string>{"q8", "sl23", "gl23"});
      default: return "dihedral:" + std::to_string(2 * range(1, 12)) + "xcyclic:" + std::to_string(range(1, 12));
    }
  };

  std::vector<std::string> out;
  while (out.size() < static_cast<std::size_t>(kRandomGroups)) {
    std::string spec = one();
    if (range(0, 5) == 0) spec += "x" + one();
    if (expected_order(parse_family(spec)) <= kRandomMaxOrder) out.push_back(to_string(parse_family(spec)));
  }
  return out;
}

Outcome criterion_frobenius_divisibility() {
  std::mt19937_64 rng(kSeed);
  const auto specs = random_corpus(rng);
  std::vector<std::string> bad;
  u64 checks = 0;
  for (const auto& spec : specs) {
    const Group g = make(spec);
    const OrderCensus c = order_census(g);
    // c_m counted from the cyclic subgroups themselves, not from the census
    std::map<u64, u64> cm;
    for (const auto& s : cyclic_subgroups(g)) ++cm[s.order];
    for (u64 k : divisors(g.order())) {
      ++checks;
      u64 lhs = 0, rhs = 0;
      for (u64 m : divisors(k)) {
        lhs += c.count(m);
        rhs += (cm.count(m) ? cm[m] : 0) * euler_phi(m);
      }
      if (lhs % k != 0) bad.push_back(spec + ": " + std::to_string(k) + " does not divide L_k = " + std::to_string(lhs));
      if (lhs != rhs)
        bad.push_back(spec + ", k = " + std::to_string(k) + ": sum O_m = " + std::to_string(lhs) +
                      " but sum c_m phi(m) = " + std::to_string(rhs));
    }
  }
  return {bad.empty(), std::to_string(specs.size()) + " groups, " + std::to_string(checks) + " (group, k) pairs" +
                           (bad.empty() ? "" : "; " + first_lines(bad))};
}

Outcome criterion_prop25() {
  std::vector<std::string> bad;
  for (const auto& [s, k] : golden::frobenius_instances()) {
    const std::string spec = "frobext:" + std::to_string(s) + ":" + std::to_string(k);
    const u64 B = global_breadth(order_census(make(spec))).B;
    if (k * B != (k - 1) * s + 1)
      bad.push_back(spec + ": k*B = " + std::to_string(k * B) + ", (k-1)s+1 = " + std::to_string((k - 1) * s + 1));
  }
  return {bad.empty(), std::to_string(golden::frobenius_instances().size()) + " instances" +
                           (bad.empty() ? "" : "; " + first_lines(bad))};
}

Outcome criterion_breadth_list() {
  std::vector<std::string> bad;
  for (const auto& [spec, expected] : golden::breadth_list()) {
    const u64 B = global_breadth(order_census(make(std::string(spec)))).B;
    if (B != expected)
      bad.push_back(std::string(spec) + ": B = " + std::to_string(B) + ", expected " + std::to_string(expected));
  }
  return {bad.empty(),
          std::to_string(golden::breadth_list().size()) + " groups" + (bad.empty() ? "" : "; " + first_lines(bad))};
}

Outcome criterion_refined() {
  std::vector<std::string> bad;
  for (const auto& [spec, expected] : std::vector<std::pair<std::string, bool>>{
           {"sym:4", true}, {"alt:5", true}, {"cyclic:4", false}, {"cyclic:6", false}}) {
    if (is_refined(make(spec)).refined != expected) bad.push_back(spec);
  }
  return {bad.empty(), bad.empty() ? "4 groups" : "wrong verdict: " + first_lines(bad)};
}

Outcome criterion_symbolic_sweep() {
  std::vector<std::string> parts, bad;
  for (auto f : {ClosedFormFamily::psl2, ClosedFormFamily::pgl2, ClosedFormFamily::suzuki}) {
    const HBoundSweep s = sweep_h_bounds(f, kSweepMax);
    parts.push_back(std::string(family_name(f)) + " " + std::to_string(s.instances));
    for (u64 q : s.in_h_violations) bad.push_back(std::string(family_name(f)) + " q=" + std::to_string(q) + " not in H");
    for (u64 q : s.sqrt_violations) bad.push_back(std::string(family_name(f)) + " q=" + std::to_string(q) + " sqrt bound");
    for (u64 q : s.polynomial_violations)
      bad.push_back(std::string(family_name(f)) + " q=" + std::to_string(q) + " polynomial inequality");
  }
  std::string detail = "q <= 2^20: " + first_lines(parts);
  return {bad.empty(), detail + (bad.empty() ? "" : "; " + first_lines(bad))};
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--only" && i + 1 < argc) {
      only = std::stoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--only N]\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria = {
      {1, "psl2:9 table, 23 rows, under 1 s", [] { return verify_scope("fig2", kFig2Seconds); }},
      {2, "pgl2:64 table, 19 rows, under 60 s", [] { return verify_scope("fig1", kFig1Seconds); }},
      {3, "closed-form B equals census B", criterion_closed_forms},
      {4, "class H membership and |G|^2 <= 8B^3", criterion_h_membership},
      {5, "fast path agrees on partitioned groups", criterion_fast_path},
      {6, "Frobenius divisibility and phi-sum on random groups", criterion_frobenius_divisibility},
      {7, "k*B = (k-1)s + 1 for Frobenius extensions", criterion_prop25},
      {8, "breadth list spot checks", criterion_breadth_list},
      {9, "refinedness verdicts", criterion_refined},
      {10, "symbolic class H bounds", criterion_symbolic_sweep},
  };

  int failures = 0, ran = 0;
  for (const auto& c : criteria) {
    if (only && c.id != only) continue;
    ++ran;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " (" << o.detail << ")"
              << std::endl;
  }
  if (ran == 0) {
    std::cerr << "no criterion " << only << '\n';
    return 2;
  }
  std::cout << (ran - failures) << "/" << ran << " criteria passed\n";
  return failures ? 1 : 0;
}
