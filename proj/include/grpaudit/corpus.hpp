#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "grpaudit/perm_group.hpp"

namespace grpaudit {

/// One manifest entry: a zoo recipe (family + params) or a generator file,
/// the declared order, descriptive tags and the per-entry run profile.
struct CorpusEntry {
  std::string name;
  std::string family;  // empty for file entries
  nlohmann::json params = nlohmann::json::object();
  std::string file;  // resolved path, empty for recipe entries
  std::uint64_t order = 0;
  std::optional<std::uint64_t> socle_order;  // asserted at load when present
  std::vector<std::string> tags;             // solvable, simple, almost-simple, ...
  std::vector<std::uint64_t> primes;         // primes of interest
  std::vector<std::string> skip_suites;      // suites this entry never runs
  std::map<std::string, std::uint64_t> caps;  // cap overrides for this entry

  bool has_tag(const std::string& t) const;
  bool skips(const std::string& suite) const;
};

/// Path of the manifest shipped in the data directory.
std::string default_manifest_path();

/// Parses a manifest; relative file paths resolve against the manifest's
/// directory. Throws CorpusError.
std::vector<CorpusEntry> load_manifest(const std::string& path);
std::vector<CorpusEntry> parse_manifest(const nlohmann::json& doc, const std::string& base_dir);

/// The default manifest.
std::vector<CorpusEntry> corpus();

/// Builds the group and checks the declared order (and socle order).
/// Throws CorpusError.
PermGroup build_entry(const CorpusEntry& e);

struct LoadedGroup {
  CorpusEntry entry;
  PermGroup group;
};

/// Builds every entry on up to `jobs` threads, preserving manifest order.
std::vector<LoadedGroup> load_corpus(const std::vector<CorpusEntry>& entries, std::size_t jobs = 1);

}  // namespace grpaudit
