#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "breadthlab/breadth.hpp"
#include "breadthlab/summary.hpp"

namespace breadthlab {

struct Check {
  std::string name;
  bool pass = false;
  std::string summary;               // e.g. "23/23 rows"
  std::vector<std::string> details;  // one line per mismatch
};

struct VerifyReport {
  std::string scope;
  std::vector<Check> checks;

  bool ok() const;
};

/// Cell-by-cell comparison, matching rows by d. Returns one line per
/// differing or missing cell.
std::vector<std::string> compare_rows(std::span<const BreadthRow> computed, std::span<const BreadthRow> expected);

/// Scopes: fig1, fig2, closedforms, hclass, hbounds, prop25, breadthlist,
/// refined, all. Throws ParseError for anything else.
VerifyReport run_verify(std::string_view scope, const BuildOptions& opts);

std::vector<std::string_view> verify_scopes();

void write_verify(std::ostream& os, const VerifyReport& r);

}  // namespace breadthlab
