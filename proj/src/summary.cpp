#include "breadthlab/summary.hpp"

#include <fstream>

#include <json.hpp>

#include "breadthlab/error.hpp"
#include "breadthlab/families.hpp"
#include "breadthlab/structure.hpp"

namespace breadthlab {

GroupSummary summarize(const Group& g, std::string spec, unsigned jobs) {
  GroupSummary s;
  s.spec = std::move(spec);
  s.census = order_census(g, jobs);
  const auto cyc = cyclic_subgroups(g);
  s.maximal_cyclic_orders = maximal_cyclic_orders(cyc);
  const auto part = maximal_cyclic_partition_check(g, cyc);
  s.is_partition = part.is_partition;
  s.is_nontrivial_partition = part.is_nontrivial;
  return s;
}

std::filesystem::path CensusCache::path_for(const std::string& spec) const {
  std::string name = spec;
  for (char& c : name)
    if (c == ':') c = '_';
  return dir_ / (name + ".census.json");
}

std::optional<GroupSummary> CensusCache::load(const std::string& spec) const {
  std::ifstream in(path_for(spec));
  if (!in) return std::nullopt;
  try {
    const auto j = nlohmann::json::parse(in);
    if (j.at("format").get<int>() != 1 || j.at("spec").get<std::string>() != spec) return std::nullopt;
    std::map<u64, u64> counts;
    for (const auto& pair : j.at("counts")) counts[pair.at(0).get<u64>()] = pair.at(1).get<u64>();
    GroupSummary s;
    s.spec = spec;
    s.census = make_census(j.at("order").get<u64>(), std::move(counts));
    s.maximal_cyclic_orders = j.at("maximal_cyclic_orders").get<std::vector<u64>>();
    s.is_partition = j.at("is_partition").get<bool>();
    s.is_nontrivial_partition = j.at("is_nontrivial_partition").get<bool>();
    return s;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void CensusCache::store(const GroupSummary& s) const {
  std::filesystem::create_directories(dir_);
  nlohmann::json counts = nlohmann::json::array();
  for (const auto& [d, k] : s.census.counts) counts.push_back({d, k});
  const nlohmann::json j = {{"format", 1},
                            {"spec", s.spec},
                            {"order", s.census.group_order},
                            {"exponent", s.census.exponent},
                            {"counts", counts},
                            {"maximal_cyclic_orders", s.maximal_cyclic_orders},
                            {"is_partition", s.is_partition},
                            {"is_nontrivial_partition", s.is_nontrivial_partition}};
  const auto path = path_for(s.spec);
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp);
    out << j.dump(1) << '\n';
    if (!out) return;  // cache is best-effort
  }
  std::filesystem::rename(tmp, path);
}

GroupSummary summarize_spec(const std::string& spec, const BuildOptions& opts) {
  const std::string canonical = to_string(parse_family(spec));
  if (opts.cache)
    if (auto hit = opts.cache->load(canonical)) return *hit;
  const Group g = build(parse_family(canonical), opts.cap, opts.allow_large);
  GroupSummary s = summarize(g, canonical, opts.jobs);
  if (opts.cache) {
    try {
      opts.cache->store(s);
    } catch (const std::filesystem::filesystem_error&) {
    }
  }
  return s;
}

}  // namespace breadthlab
