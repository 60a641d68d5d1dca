#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "grpaudit/caps.hpp"
#include "grpaudit/corpus.hpp"
#include "grpaudit/report.hpp"

namespace grpaudit {

/// Suite names in canonical (report) order.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

struct SuiteConfig {
  std::vector<std::string> suites;  // empty: all
  std::string corpus_path;          // empty: the default manifest
  std::vector<std::string> groups;  // entry names; empty: all
  std::vector<std::string> tags;    // entries must carry every tag
  std::uint64_t max_order = 20000;
  std::vector<std::uint64_t> primes;  // empty: every prime divisor
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  std::string out;  // empty: standard output
  int k_max = 3;    // Gamma_k depth for gamma-sets and multicommutator
  bool timing = false;
  Caps caps;
  /// suite -> key -> value; keys are cap names, "max_order", or
  /// "subgroup_level_max_order" (lattice-oracles).
  std::map<std::string, std::map<std::string, std::uint64_t>> suite_caps;

  /// "KEY=VALUE" with KEY a cap name or "suite.key". Throws ParseError.
  void set_cap(std::string_view assignment);
  /// Throws ParseError for unknown suites or invalid values.
  void validate() const;

  std::vector<std::string> selected_suites() const;
  /// Order limit of a suite; falls back to max_order.
  std::uint64_t suite_limit(const std::string& suite, const std::string& key = "max_order") const;
  Caps caps_for(const std::string& suite, const CorpusEntry& e) const;
};

/// "key = value" lines mirroring the long flags; '#' starts a comment.
/// List values are comma-separated; "caps" may repeat. Throws ParseError.
void apply_config_text(SuiteConfig& cfg, std::string_view text);

/// Entries passing the name, tag and order filters, in manifest order.
std::vector<CorpusEntry> select_entries(const SuiteConfig& cfg, const std::vector<CorpusEntry>& entries);

struct RunResult {
  std::vector<Record> records;  // canonical order
  std::uint64_t failures = 0;
  std::uint64_t skipped = 0;
  std::uint64_t open = 0;
};

/// Runs every selected suite on every group. Work items (suite, group, p)
/// run on cfg.jobs threads; records are emitted in canonical order so the
/// report does not depend on the number of threads.
RunResult run_suites(const SuiteConfig& cfg, const std::vector<LoadedGroup>& groups);

}  // namespace grpaudit
