#include "breadthlab/verify.hpp"

#include <algorithm>
#include <map>

#include "breadthlab/error.hpp"
#include "breadthlab/families.hpp"
#include "breadthlab/golden.hpp"
#include "breadthlab/hbounds.hpp"
#include "breadthlab/structure.hpp"

namespace breadthlab {

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::vector<std::string> compare_rows(std::span<const BreadthRow> computed, std::span<const BreadthRow> expected) {
  std::map<u64, BreadthRow> by_d;
  for (const auto& r : computed) by_d[r.d] = r;
  std::vector<std::string> out;
  auto cell = [&](u64 d, const char* col, u64 want, u64 got) {
    if (want != got)
      out.push_back("d=" + std::to_string(d) + ": " + col + " expected " + std::to_string(want) + ", computed " +
                    std::to_string(got));
  };
  for (const auto& e : expected) {
    const auto it = by_d.find(e.d);
    if (it == by_d.end()) {
      out.push_back("d=" + std::to_string(e.d) + ": row missing");
      continue;
    }
    cell(e.d, "c_d", e.c, it->second.c);
    cell(e.d, "L_d", e.L, it->second.L);
    cell(e.d, "b_d", e.b, it->second.b);
  }
  return out;
}

namespace {

Check table_check(const std::string& spec, std::span<const BreadthRow> expected, const BuildOptions& opts) {
  const GroupSummary s = summarize_spec(spec, opts);
  const auto rows = breadth_table(s.census);
  Check c;
  c.name = spec + " local breadth table";
  c.details = compare_rows(rows, expected);
  std::size_t bad_rows = 0;
  for (const auto& e : expected) {
    const std::string prefix = "d=" + std::to_string(e.d) + ":";
    if (std::any_of(c.details.begin(), c.details.end(), [&](const std::string& d) { return d.starts_with(prefix); }))
      ++bad_rows;
  }
  c.pass = c.details.empty();
  c.summary = std::to_string(expected.size() - bad_rows) + "/" + std::to_string(expected.size()) + " rows";
  return c;
}

std::string family_spec(ClosedFormFamily f, u64 q) { return std::string(family_name(f)) + ":" + std::to_string(q); }

constexpr ClosedFormFamily kFamilies[] = {ClosedFormFamily::psl2, ClosedFormFamily::pgl2, ClosedFormFamily::suzuki};

void closed_forms(VerifyReport& r, const BuildOptions& opts) {
  for (auto f : kFamilies)
    for (u64 q : golden::closed_form_q(f)) {
      const std::string spec = family_spec(f, q);
      const u64 B = global_breadth(summarize_spec(spec, opts).census).B;
      const u128 cf = closed_form_B(f, q);
      r.checks.push_back({spec + " closed-form B", cf == B,
                          "closed form " + to_decimal(cf) + ", census " + std::to_string(B), {}});
    }
}

void h_class(VerifyReport& r, const BuildOptions& opts) {
  std::vector<std::string> specs;
  for (auto f : kFamilies)
    for (u64 q : golden::closed_form_q(f)) specs.push_back(family_spec(f, q));
  specs.push_back("sym:4");
  for (const auto& spec : specs) {
    const GroupSummary s = summarize_spec(spec, opts);
    const HVerdict v = h_class_test(s.census.group_order, global_breadth(s.census).B);
    r.checks.push_back({spec + " in H", v.in_H && v.sqrt_bound_holds,
                        "|G| = " + to_decimal(v.group_order) + ", B(B+1) = " + to_decimal(v.bound_BB1) +
                            ", |G|^2/B^3 = " + to_decimal(v.c_squared.num) + "/" + to_decimal(v.c_squared.den),
                        {}});
  }
}

void h_bounds(VerifyReport& r) {
  for (auto f : kFamilies) {
    const HBoundSweep s = sweep_h_bounds(f);
    Check c{std::string(family_name(f)) + " closed-form H bounds, q <= 2^20", s.ok(),
            std::to_string(s.instances) + " values of q", {}};
    for (u64 q : s.in_h_violations) c.details.push_back("q=" + std::to_string(q) + ": |G| > B(B+1)");
    for (u64 q : s.sqrt_violations) c.details.push_back("q=" + std::to_string(q) + ": |G|^2 > 8B^3");
    for (u64 q : s.polynomial_violations) c.details.push_back("q=" + std::to_string(q) + ": polynomial form fails");
    r.checks.push_back(std::move(c));
  }
}

void prop25(VerifyReport& r, const BuildOptions& opts) {
  for (const auto& [s, k] : golden::frobenius_instances()) {
    const std::string spec = "frobext:" + std::to_string(s) + ":" + std::to_string(k);
    const u64 B = global_breadth(summarize_spec(spec, opts).census).B;
    r.checks.push_back({spec + " k*B = (k-1)s + 1", k * B == (k - 1) * s + 1,
                        std::to_string(k) + "*" + std::to_string(B) + " = " + std::to_string(k * B) + " vs " +
                            std::to_string((k - 1) * s + 1),
                        {}});
  }
}

void breadth_list(VerifyReport& r, const BuildOptions& opts) {
  for (const auto& [spec, want] : golden::breadth_list()) {
    const u64 B = global_breadth(summarize_spec(std::string(spec), opts).census).B;
    r.checks.push_back({std::string(spec) + " B = " + std::to_string(want), B == want,
                        "computed " + std::to_string(B), {}});
  }
}

void refined(VerifyReport& r, const BuildOptions& opts) {
  const std::pair<const char*, bool> cases[] = {{"sym:4", true}, {"alt:5", true}, {"cyclic:4", false}, {"cyclic:6", false}};
  for (const auto& [spec, want] : cases) {
    const Group g = build(parse_family(spec), opts.cap, opts.allow_large);
    const bool got = is_refined(g).refined;
    r.checks.push_back({std::string(spec) + (want ? " refined" : " not refined"), got == want,
                        std::string("is_refined = ") + (got ? "true" : "false"), {}});
  }
}

}  // namespace

std::vector<std::string_view> verify_scopes() {
  return {"fig1", "fig2", "closedforms", "hclass", "hbounds", "prop25", "breadthlist", "refined", "all"};
}

VerifyReport run_verify(std::string_view scope, const BuildOptions& opts) {
  VerifyReport r;
  r.scope = std::string(scope);
  const bool all = scope == "all";
  bool known = all;
  auto want = [&](std::string_view s) {
    if (all || scope == s) {
      known = true;
      return true;
    }
    return false;
  };
  if (want("fig2")) r.checks.push_back(table_check("psl2:9", golden::psl2_9_rows(), opts));
  if (want("fig1")) r.checks.push_back(table_check("pgl2:64", golden::pgl2_64_rows(), opts));
  if (want("closedforms")) closed_forms(r, opts);
  if (want("hclass")) h_class(r, opts);
  if (want("hbounds")) h_bounds(r);
  if (want("prop25")) prop25(r, opts);
  if (want("breadthlist")) breadth_list(r, opts);
  if (want("refined")) refined(r, opts);
  if (!known) throw ParseError("unknown verify scope '" + std::string(scope) + "'");
  return r;
}

void write_verify(std::ostream& os, const VerifyReport& r) {
  std::size_t passed = 0;
  for (const auto& c : r.checks) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.summary.empty()) os << " (" << c.summary << ")";
    os << '\n';
    for (const auto& d : c.details) os << "       " << d << '\n';
    passed += c.pass;
  }
  os << "verify " << r.scope << ": " << (r.ok() ? "PASS" : "FAIL") << " (" << passed << "/" << r.checks.size()
     << " checks)\n";
}

}  // namespace breadthlab
