#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "breadthlab/breadth.hpp"
#include "breadthlab/summary.hpp"

namespace breadthlab {

struct SurveyRow {
  std::string spec;
  std::string family;
  u64 q = 0;
  bool skipped = false;
  std::string skip_reason;

  u64 order = 0;
  u64 B = 0;
  bool in_H = false;
  bool sqrt_bound = false;
  bool nontrivial_partition = false;
  std::optional<FastBreadth> fast;      // only with a nontrivial partition
  bool fast_agrees = true;
  std::optional<u128> closed_form;      // when q is in the closed-form range
  bool closed_form_agrees = true;
};

struct SurveyResult {
  std::vector<SurveyRow> rows;
  u64 counterexamples = 0;  // evaluated rows with |G| > B(B+1)
  u64 sqrt_failures = 0;
  u64 fast_disagreements = 0;
  u64 closed_form_disagreements = 0;
  u64 skipped = 0;
};

/// Instances of `families` (psl2, pgl2, suzuki) for prime powers q in
/// [q_min, q_max], in family-then-q order. Rows over the cap or outside a
/// constructor's range are marked skipped.
SurveyResult run_survey(const std::vector<std::string>& families, u64 q_min, u64 q_max, const BuildOptions& opts);

void write_survey_text(std::ostream& os, const SurveyResult& r);
void write_survey_csv(std::ostream& os, const SurveyResult& r);
nlohmann::json to_json(const SurveyResult& r);

}  // namespace breadthlab
