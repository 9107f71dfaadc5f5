#include "breadthlab/report.hpp"

#include <algorithm>
#include <iomanip>

namespace breadthlab {

void write_csv(std::ostream& os, std::span<const BreadthRow> rows) {
  os << "d,c_d,L_d,b_d\n";
  for (const auto& r : rows) os << r.d << ',' << r.c << ',' << r.L << ',' << r.b << '\n';
}

void write_text(std::ostream& os, std::span<const BreadthRow> rows, std::string_view title) {
  std::size_t w[4] = {1, 3, 3, 3};
  for (const auto& r : rows) {
    w[0] = std::max(w[0], std::to_string(r.d).size());
    w[1] = std::max(w[1], std::to_string(r.c).size());
    w[2] = std::max(w[2], std::to_string(r.L).size());
    w[3] = std::max(w[3], std::to_string(r.b).size());
  }
  auto line = [&](const std::string& a, const std::string& b, const std::string& c, const std::string& d) {
    os << std::setw(static_cast<int>(w[0])) << a << " | " << std::setw(static_cast<int>(w[1])) << b << " | "
       << std::setw(static_cast<int>(w[2])) << c << " | " << std::setw(static_cast<int>(w[3])) << d << '\n';
  };
  os << title << '\n';
  line("d", "c_d", "L_d", "b_d");
  os << std::string(w[0] + 1, '-') << '+' << std::string(w[1] + 2, '-') << '+' << std::string(w[2] + 2, '-') << '+'
     << std::string(w[3] + 1, '-') << '\n';
  for (const auto& r : rows) line(std::to_string(r.d), std::to_string(r.c), std::to_string(r.L), std::to_string(r.b));
}

nlohmann::json json_u128(u128 v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return to_decimal(v);
}

nlohmann::json to_json(std::span<const BreadthRow> rows) {
  auto arr = nlohmann::json::array();
  for (const auto& r : rows) arr.push_back({{"d", r.d}, {"c_d", r.c}, {"L_d", r.L}, {"b_d", r.b}});
  return arr;
}

nlohmann::json to_json(const HVerdict& v) {
  return {{"group_order", json_u128(v.group_order)},
          {"B", json_u128(v.B)},
          {"bound_BB1", json_u128(v.bound_BB1)},
          {"in_H", v.in_H},
          {"sqrt_bound_holds", v.sqrt_bound_holds},
          {"c_squared_min", {{"num", json_u128(v.c_squared.num)}, {"den", json_u128(v.c_squared.den)}}}};
}

nlohmann::json to_json(const BreadthReport& r, const HVerdict& v) {
  return {{"order", r.group_order},
          {"exponent", r.exponent},
          {"rows", to_json(r.rows)},
          {"B", r.B},
          {"argmax", r.argmax},
          {"maximal_cyclic_orders", r.maximal_cyclic_orders},
          {"h_verdict", to_json(v)}};
}

nlohmann::json diagnostic(std::string_view predicate, bool verdict, nlohmann::json witnesses) {
  return {{"predicate", predicate}, {"verdict", verdict}, {"witnesses", std::move(witnesses)}};
}

nlohmann::json to_json(const PartitionReport& p) {
  auto comps = nlohmann::json::object();
  for (const auto& c : p.components) comps[std::to_string(c.order)] = comps.value(std::to_string(c.order), 0) + 1;
  return diagnostic("maximal_cyclic_partition", p.is_partition && p.is_nontrivial,
                    {{"is_partition", p.is_partition},
                     {"is_nontrivial", p.is_nontrivial},
                     {"component_count", p.components.size()},
                     {"components_by_order", comps}});
}

nlohmann::json to_json(const HughesThompsonReport& h, u64 p) {
  return diagnostic("hughes_thompson", h.verdict,
                    {{"p", p},
                     {"is_p_group", h.is_p_group},
                     {"hughes_order", h.hughes_order},
                     {"index", h.index},
                     {"index_is_p", h.index_is_p},
                     {"hughes_nilpotent", h.hughes_nilpotent},
                     {"findings", h.findings}});
}

nlohmann::json to_json(const RefinedReport& r) {
  auto q = nlohmann::json::array();
  for (const auto& [n, b] : r.quotient_breadths) q.push_back({{"normal_order", n}, {"quotient_B", b}});
  return diagnostic("refined", r.refined, {{"B", r.B}, {"quotients", q}});
}

}  // namespace breadthlab
