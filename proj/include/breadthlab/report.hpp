#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "breadthlab/breadth.hpp"
#include "breadthlab/structure.hpp"

namespace breadthlab {

/// `d,c_d,L_d,b_d` header, then one row per entry.
void write_csv(std::ostream& os, std::span<const BreadthRow> rows);

/// Column layout `d | c_d | L_d | b_d`, right-aligned, under a title line.
void write_text(std::ostream& os, std::span<const BreadthRow> rows, std::string_view title);

/// u128 as a JSON number when it fits in 64 bits, else a decimal string.
nlohmann::json json_u128(u128 v);

nlohmann::json to_json(std::span<const BreadthRow> rows);
nlohmann::json to_json(const HVerdict& v);

/// {order, exponent, rows, B, argmax, maximal_cyclic_orders, h_verdict}
nlohmann::json to_json(const BreadthReport& r, const HVerdict& v);

/// {predicate, verdict, witnesses}
nlohmann::json diagnostic(std::string_view predicate, bool verdict, nlohmann::json witnesses);
nlohmann::json to_json(const PartitionReport& p);
nlohmann::json to_json(const HughesThompsonReport& h, u64 p);
nlohmann::json to_json(const RefinedReport& r);

}  // namespace breadthlab
