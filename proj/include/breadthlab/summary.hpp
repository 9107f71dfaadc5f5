#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "breadthlab/breadth.hpp"

namespace breadthlab {

/// What the CLI needs from an enumerated group; small enough to cache.
struct GroupSummary {
  std::string spec;
  OrderCensus census;
  std::vector<u64> maximal_cyclic_orders;
  bool is_partition = false;
  bool is_nontrivial_partition = false;
};

GroupSummary summarize(const Group& g, std::string spec, unsigned jobs = 1);

/// JSON files `<dir>/<spec>.census.json`, one per family spec string.
class CensusCache {
 public:
  explicit CensusCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const std::string& spec) const;

  /// nullopt when the file is absent or fails validation.
  std::optional<GroupSummary> load(const std::string& spec) const;
  void store(const GroupSummary& s) const;

 private:
  std::filesystem::path dir_;
};

struct BuildOptions {
  u64 cap = kDefaultCap;
  bool allow_large = false;
  unsigned jobs = 1;
  const CensusCache* cache = nullptr;
};

/// Parses, builds and summarizes `spec`, going through the cache when given.
GroupSummary summarize_spec(const std::string& spec, const BuildOptions& opts);

}  // namespace breadthlab
