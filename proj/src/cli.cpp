#include "breadthlab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "breadthlab/cyclic.hpp"
#include "breadthlab/error.hpp"
#include "breadthlab/families.hpp"
#include "breadthlab/report.hpp"
#include "breadthlab/structure.hpp"
#include "breadthlab/summary.hpp"
#include "breadthlab/survey.hpp"
#include "breadthlab/verify.hpp"

namespace breadthlab::cli {

namespace {

struct Config {
  std::string format = "text";
  u64 cap = kDefaultCap;
  bool allow_large = false;
  std::string out_path;
  unsigned jobs = 1;
  bool no_cache = false;

  std::string spec;
  std::string scope;
  std::vector<std::string> families = {"psl2", "pgl2", "suzuki"};
  u64 q_min = 4;
  u64 q_max = 32;
};

std::filesystem::path cache_dir(const Config& c) {
  if (const char* env = std::getenv("BREADTHLAB_CACHE_DIR"); env && *env) return env;
  if (!c.out_path.empty()) {
    const auto parent = std::filesystem::path(c.out_path).parent_path();
    return (parent.empty() ? std::filesystem::path(".") : parent) / ".breadthlab-cache";
  }
  return ".breadthlab-cache";
}

int cmd_table(const Config& c, const BuildOptions& opts, std::ostream& os) {
  const GroupSummary s = summarize_spec(c.spec, opts);
  const BreadthReport r = global_breadth(s.census, s.maximal_cyclic_orders);
  if (c.format == "csv") {
    write_csv(os, r.rows);
  } else if (c.format == "json") {
    nlohmann::json j = to_json(r, h_class_test(r.group_order, r.B));
    j["family"] = s.spec;
    os << j.dump(2) << '\n';
  } else {
    write_text(os, r.rows, s.spec + ": |G| = " + std::to_string(r.group_order) + ", B = " + std::to_string(r.B));
  }
  return kOk;
}

int cmd_inspect(const Config& c, const BuildOptions& opts, std::ostream& os) {
  const Group g = build(parse_family(c.spec), opts.cap, opts.allow_large);
  const BreadthReport r = global_breadth(order_census(g, opts.jobs), maximal_cyclic_orders(g));
  nlohmann::json j = to_json(r, h_class_test(r.group_order, r.B));
  j["family"] = g.label();
  auto diags = nlohmann::json::array();
  diags.push_back(to_json(maximal_cyclic_partition_check(g)));
  for (const auto& pp : factorize(g.order())) diags.push_back(to_json(is_hughes_thompson(g, pp.prime), pp.prime));
  if (g.order() <= kNormalSubgroupCap) {
    const RefinedReport rr = is_refined(g);
    diags.push_back(to_json(rr));
    if (rr.refined) diags.push_back(diagnostic("refined_sanity", true, refined_sanity(g)));
  } else {
    diags.push_back(diagnostic("refined", false, {{"skipped", "order above the normal-subgroup cap"}}));
  }
  j["diagnostics"] = diags;
  os << j.dump(2) << '\n';
  return kOk;
}

int cmd_verify(const Config& c, const BuildOptions& opts, std::ostream& os) {
  const VerifyReport r = run_verify(c.scope, opts);
  if (c.format == "json") {
    auto checks = nlohmann::json::array();
    for (const auto& ch : r.checks)
      checks.push_back({{"name", ch.name}, {"pass", ch.pass}, {"summary", ch.summary}, {"details", ch.details}});
    os << nlohmann::json{{"scope", r.scope}, {"pass", r.ok()}, {"checks", checks}}.dump(2) << '\n';
  } else {
    write_verify(os, r);
  }
  return r.ok() ? kOk : kMismatch;
}

int cmd_survey(const Config& c, const BuildOptions& opts, std::ostream& os) {
  if (c.q_min > c.q_max) throw ParseError("survey: --q-min exceeds --q-max");
  const SurveyResult r = run_survey(c.families, c.q_min, c.q_max, opts);
  if (c.format == "csv") write_survey_csv(os, r);
  else if (c.format == "json") os << to_json(r).dump(2) << '\n';
  else write_survey_text(os, r);
  return r.counterexamples + r.sqrt_failures + r.fast_disagreements + r.closed_form_disagreements == 0 ? kOk
                                                                                                         : kMismatch;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Local and global breadth of finite permutation groups", "breadthlab"};
  app.require_subcommand(1);
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--cap", c.cap, "Element cap for enumeration")->check(CLI::PositiveNumber);
  app.add_flag("--allow-large", c.allow_large, "Permit caps above 2^22 and Sz(32)");
  app.add_option("--out", c.out_path, "Write output to PATH");
  app.add_option("--jobs", c.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_flag("--no-cache", c.no_cache, "Do not read or write the census cache");

  auto* table = app.add_subcommand("table", "Local breadth table of a group");
  table->add_option("family", c.spec, "Family spec, e.g. psl2:9 or dihedral:6xcyclic:3")->required();
  auto* inspect = app.add_subcommand("inspect", "Breadth report plus structural diagnostics (JSON)");
  inspect->add_option("family", c.spec, "Family spec")->required();
  auto* verify = app.add_subcommand("verify", "Golden-table and identity checks");
  verify->add_option("scope", c.scope, "fig1, fig2, closedforms, hclass, hbounds, prop25, breadthlist, refined or all")
      ->required();
  auto* survey = app.add_subcommand("survey", "Class membership evidence over a q-range");
  survey->add_option("--families", c.families, "Comma-separated: psl2, pgl2, suzuki")->delimiter(',');
  survey->add_option("--q-min", c.q_min, "Smallest q");
  survey->add_option("--q-max", c.q_max, "Largest q");
  for (auto* sub : {table, inspect, verify, survey}) sub->fallthrough();

  std::vector<const char*> argv{"breadthlab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (c.cap > kDefaultCap && !c.allow_large)
      throw ParseError("--cap above " + std::to_string(kDefaultCap) + " requires --allow-large");
    if (verify->parsed() && c.format == "csv") throw ParseError("verify supports --format text or json");
    std::optional<CensusCache> cache;
    if (!c.no_cache) cache.emplace(cache_dir(c));
    const BuildOptions opts{.cap = c.cap, .allow_large = c.allow_large, .jobs = c.jobs,
                            .cache = cache ? &*cache : nullptr};

    std::ostringstream buf;
    int code = kOk;
    if (table->parsed()) code = cmd_table(c, opts, buf);
    else if (inspect->parsed()) code = cmd_inspect(c, opts, buf);
    else if (verify->parsed()) code = cmd_verify(c, opts, buf);
    else code = cmd_survey(c, opts, buf);

    if (c.out_path.empty()) {
      out << buf.str();
    } else {
      std::ofstream f(c.out_path, std::ios::binary);
      if (!f) throw ParseError("cannot open --out path '" + c.out_path + "'");
      f << buf.str();
    }
    return code;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCap;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << '\n';
    return kMismatch;
  }
}

}  // namespace breadthlab::cli
