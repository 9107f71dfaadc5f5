#include "breadthlab/survey.hpp"

#include <atomic>
#include <iomanip>
#include <thread>

#include "breadthlab/error.hpp"
#include "breadthlab/hbounds.hpp"
#include "breadthlab/report.hpp"

namespace breadthlab {

namespace {

bool family_defined(const std::string& family, u64 q) {
  const auto pp = as_prime_power(q);
  if (!pp) return false;
  if (family == "psl2") return q >= 4;
  if (family == "pgl2") return q >= 3;
  if (family == "suzuki") return pp->prime == 2 && pp->exponent % 2 == 1 && pp->exponent >= 3;
  throw ParseError("survey: unknown family '" + family + "' (expected psl2, pgl2 or suzuki)");
}

std::optional<ClosedFormFamily> closed_family(const std::string& family) {
  if (family == "psl2") return ClosedFormFamily::psl2;
  if (family == "pgl2") return ClosedFormFamily::pgl2;
  if (family == "suzuki") return ClosedFormFamily::suzuki;
  return std::nullopt;
}

void evaluate(SurveyRow& row, const BuildOptions& opts) {
  GroupSummary s;
  try {
    s = summarize_spec(row.spec, opts);
  } catch (const CapExceeded& e) {
    row.skipped = true;
    row.skip_reason = e.what();
    return;
  } catch (const DomainError& e) {
    row.skipped = true;
    row.skip_reason = e.what();
    return;
  }
  const BreadthReport report = global_breadth(s.census, s.maximal_cyclic_orders);
  const HVerdict v = h_class_test(s.census.group_order, report.B);
  row.order = s.census.group_order;
  row.B = report.B;
  row.in_H = v.in_H;
  row.sqrt_bound = v.sqrt_bound_holds;
  row.nontrivial_partition = s.is_nontrivial_partition;
  if (row.nontrivial_partition) {
    row.fast = global_breadth_fast(s.census, s.maximal_cyclic_orders);
    row.fast_agrees = row.fast->B == report.B;
  }
  if (const auto f = closed_family(row.family); f && closed_form_applies(*f, row.q)) {
    row.closed_form = closed_form_B(*f, row.q);
    row.closed_form_agrees = *row.closed_form == report.B;
  }
}

}  // namespace

SurveyResult run_survey(const std::vector<std::string>& families, u64 q_min, u64 q_max, const BuildOptions& opts) {
  SurveyResult result;
  const auto qs = prime_powers(std::max<u64>(q_min, 2), q_max);
  for (const auto& fam : families)
    for (u64 q : qs)
      if (family_defined(fam, q)) {
        SurveyRow row;
        row.spec = fam + ":" + std::to_string(q);
        row.family = fam;
        row.q = q;
        result.rows.push_back(std::move(row));
      }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < result.rows.size();) evaluate(result.rows[i], opts);
  };
  const unsigned jobs = std::max(1u, opts.jobs);
  if (jobs > 1) {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker);
  } else {
    worker();
  }

  for (const auto& r : result.rows) {
    if (r.skipped) {
      ++result.skipped;
      continue;
    }
    result.counterexamples += !r.in_H;
    result.sqrt_failures += !r.sqrt_bound;
    result.fast_disagreements += !r.fast_agrees;
    result.closed_form_disagreements += !r.closed_form_agrees;
  }
  return result;
}

void write_survey_text(std::ostream& os, const SurveyResult& r) {
  os << std::left << std::setw(12) << "instance" << std::right << std::setw(12) << "order" << std::setw(10) << "B"
     << "  in_H  sqrt  partition  fast        closed_form\n";
  for (const auto& row : r.rows) {
    os << std::left << std::setw(12) << row.spec << std::right;
    if (row.skipped) {
      os << "  skipped: " << row.skip_reason << '\n';
      continue;
    }
    std::string fast = "-";
    if (row.fast) fast = std::to_string(row.fast->B) + "@" + std::to_string(row.fast->witness_order) + (row.fast_agrees ? "" : "!");
    std::string cf = "-";
    if (row.closed_form) cf = to_decimal(*row.closed_form) + (row.closed_form_agrees ? "" : "!");
    os << std::setw(12) << row.order << std::setw(10) << row.B << "  " << std::left << std::setw(6)
       << (row.in_H ? "yes" : "NO") << std::setw(6) << (row.sqrt_bound ? "yes" : "NO") << std::setw(11)
       << (row.nontrivial_partition ? "yes" : "no") << std::setw(12) << fast << cf << std::right << '\n';
  }
  os << "instances: " << r.rows.size() << ", skipped: " << r.skipped << ", counterexamples: " << r.counterexamples
     << ", sqrt-bound failures: " << r.sqrt_failures << ", fast-path disagreements: " << r.fast_disagreements
     << ", closed-form disagreements: " << r.closed_form_disagreements << '\n';
}

void write_survey_csv(std::ostream& os, const SurveyResult& r) {
  os << "instance,status,order,B,in_H,sqrt_bound,nontrivial_partition,fast_B,fast_witness,closed_form_B\n";
  for (const auto& row : r.rows) {
    if (row.skipped) {
      os << row.spec << ",skipped,,,,,,,,\n";
      continue;
    }
    os << row.spec << ",ok," << row.order << ',' << row.B << ',' << row.in_H << ',' << row.sqrt_bound << ','
       << row.nontrivial_partition << ',';
    if (row.fast) os << row.fast->B << ',' << row.fast->witness_order;
    else os << ',';
    os << ',';
    if (row.closed_form) os << to_decimal(*row.closed_form);
    os << '\n';
  }
}

nlohmann::json to_json(const SurveyResult& r) {
  auto rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json j = {{"instance", row.spec}, {"family", row.family}, {"q", row.q}};
    if (row.skipped) {
      j["status"] = "skipped";
      j["reason"] = row.skip_reason;
    } else {
      j["status"] = "ok";
      j["order"] = row.order;
      j["B"] = row.B;
      j["in_H"] = row.in_H;
      j["sqrt_bound_holds"] = row.sqrt_bound;
      j["nontrivial_partition"] = row.nontrivial_partition;
      j["fast"] = row.fast ? nlohmann::json{{"B", row.fast->B}, {"witness_order", row.fast->witness_order},
                                            {"agrees", row.fast_agrees}}
                           : nlohmann::json(nullptr);
      j["closed_form_B"] = row.closed_form ? json_u128(*row.closed_form) : nlohmann::json(nullptr);
    }
    rows.push_back(std::move(j));
  }
  return {{"instances", rows},
          {"counterexamples", r.counterexamples},
          {"sqrt_failures", r.sqrt_failures},
          {"fast_disagreements", r.fast_disagreements},
          {"closed_form_disagreements", r.closed_form_disagreements},
          {"skipped", r.skipped}};
}

}  // namespace breadthlab
