#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace grpaudit {

inline constexpr const char* kReportSchemaVersion = "grpaudit-report/1";

/// One verdict: (suite, group, p, class) plus what was checked.
///
/// A record fails when it is asserted, not skipped, and implication_ok or
/// converse_ok is false. converse_ok is set for biconditionals only.
/// Unasserted records come from scans of open statements.
struct Record {
  std::string suite;
  std::string group;
  std::uint64_t order = 0;
  std::optional<std::uint64_t> p;
  std::optional<std::string> class_rep;  // cycle notation, or <gens> for a subgroup
  std::string predicate;
  std::optional<int> k;
  std::optional<bool> hypothesis;
  std::optional<bool> conclusion;
  bool implication_ok = true;
  std::optional<bool> converse_ok;
  bool asserted = true;
  std::optional<std::string> status;
  std::optional<std::string> witness;
  std::optional<double> elapsed_ms;
  std::optional<std::string> skipped_reason;
  nlohmann::json detail;  // null or object

  enum class Outcome { pass, fail, skipped, open };
  Outcome outcome() const;
};

nlohmann::json to_json(const Record& r);
Record record_from_json(const nlohmann::json& j);

/// JSON schema of one report line.
nlohmann::json report_schema();

/// Checks a parsed line against report_schema(); returns an error message,
/// empty when valid.
std::string validate_record(const nlohmann::json& j);

/// One compact JSON object per line.
void write_ndjson(std::ostream& out, const std::vector<Record>& records);

struct SuiteCounts {
  std::uint64_t pass = 0, fail = 0, skipped = 0, open = 0;
};

struct Summary {
  std::map<std::string, SuiteCounts> suites;
  std::uint64_t total_fail() const;
};

/// Reads an NDJSON report; throws ParseError (with line number) on invalid
/// lines.
Summary summarize(std::istream& in);
void print_summary(std::ostream& out, const Summary& s);

}  // namespace grpaudit
