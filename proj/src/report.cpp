#include "grpaudit/report.hpp"

#include <iomanip>
#include <istream>
#include <ostream>

#include "grpaudit/errors.hpp"

namespace grpaudit {

namespace {

using nlohmann::json;

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> get_opt(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

struct Field {
  const char* name;
  const char* type;  // JSON schema type
  bool nullable;
};

// Every field is required; nullable ones may be null.
const Field kFields[] = {
    {"schema_version", "string", false}, {"suite", "string", false},    {"group", "string", false},
    {"order", "integer", false},         {"p", "integer", true},        {"class_rep", "string", true},
    {"predicate", "string", false},      {"k", "integer", true},        {"hypothesis", "boolean", true},
    {"conclusion", "boolean", true},     {"implication_ok", "boolean", false}, {"converse_ok", "boolean", true},
    {"asserted", "boolean", false},
    {"status", "string", true},          {"witness", "string", true},   {"elapsed_ms", "number", true},
    {"skipped_reason", "string", true},  {"detail", "object", true},
};

bool has_type(const json& v, const std::string& type) {
  if (type == "string") return v.is_string();
  if (type == "integer") return v.is_number_integer();
  if (type == "number") return v.is_number();
  if (type == "boolean") return v.is_boolean();
  if (type == "object") return v.is_object();
  return false;
}

}  // namespace

Record::Outcome Record::outcome() const {
  if (skipped_reason) return Outcome::skipped;
  if (!asserted) return Outcome::open;
  return implication_ok && converse_ok.value_or(true) ? Outcome::pass : Outcome::fail;
}

json to_json(const Record& r) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["suite"] = r.suite;
  j["group"] = r.group;
  j["order"] = r.order;
  j["p"] = opt(r.p);
  j["class_rep"] = opt(r.class_rep);
  j["predicate"] = r.predicate;
  j["k"] = opt(r.k);
  j["hypothesis"] = opt(r.hypothesis);
  j["conclusion"] = opt(r.conclusion);
  j["implication_ok"] = r.implication_ok;
  j["converse_ok"] = opt(r.converse_ok);
  j["asserted"] = r.asserted;
  j["status"] = opt(r.status);
  j["witness"] = opt(r.witness);
  j["elapsed_ms"] = opt(r.elapsed_ms);
  j["skipped_reason"] = opt(r.skipped_reason);
  j["detail"] = r.detail.is_object() ? r.detail : json(nullptr);
  return j;
}

Record record_from_json(const json& j) {
  Record r;
  r.suite = j.at("suite").get<std::string>();
  r.group = j.at("group").get<std::string>();
  r.order = j.at("order").get<std::uint64_t>();
  r.p = get_opt<std::uint64_t>(j, "p");
  r.class_rep = get_opt<std::string>(j, "class_rep");
  r.predicate = j.at("predicate").get<std::string>();
  r.k = get_opt<int>(j, "k");
  r.hypothesis = get_opt<bool>(j, "hypothesis");
  r.conclusion = get_opt<bool>(j, "conclusion");
  r.implication_ok = j.at("implication_ok").get<bool>();
  r.converse_ok = get_opt<bool>(j, "converse_ok");
  r.asserted = j.at("asserted").get<bool>();
  r.status = get_opt<std::string>(j, "status");
  r.witness = get_opt<std::string>(j, "witness");
  r.elapsed_ms = get_opt<double>(j, "elapsed_ms");
  r.skipped_reason = get_opt<std::string>(j, "skipped_reason");
  if (j.contains("detail") && j.at("detail").is_object()) r.detail = j.at("detail");
  return r;
}

json report_schema() {
  json props = json::object();
  json required = json::array();
  for (const auto& f : kFields) {
    json t = f.nullable ? json::array({f.type, "null"}) : json(f.type);
    props[f.name] = {{"type", t}};
    required.push_back(f.name);
  }
  props["schema_version"]["const"] = kReportSchemaVersion;
  props["order"]["minimum"] = 1;
  props["skipped_reason"]["description"] = "set exactly when the check was not run; never empty";
  props["witness"]["description"] = "counter-witness in 1-based cycle notation";
  props["elapsed_ms"]["description"] = "null unless timing was requested";
  return {{"$schema", "https://json-schema.org/draft/2020-12/schema"},
          {"title", "grpaudit report record"},
          {"version", kReportSchemaVersion},
          {"type", "object"},
          {"properties", props},
          {"required", required},
          {"additionalProperties", false}};
}

std::string validate_record(const json& j) {
  if (!j.is_object()) return "record is not an object";
  for (const auto& f : kFields) {
    if (!j.contains(f.name)) return std::string("missing field ") + f.name;
    const json& v = j.at(f.name);
    if (v.is_null() ? !f.nullable : !has_type(v, f.type)) return std::string("field ") + f.name + " must be " + f.type;
  }
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const auto& f : kFields) known = known || key == f.name;
    if (!known) return "unknown field " + key;
  }
  if (j.at("schema_version") != kReportSchemaVersion) return "unsupported schema version";
  if (j.at("order").get<std::int64_t>() < 1) return "order must be positive";
  if (j.at("skipped_reason").is_string() && j.at("skipped_reason").get<std::string>().empty())
    return "empty skipped_reason";
  return {};
}

void write_ndjson(std::ostream& out, const std::vector<Record>& records) {
  for (const auto& r : records) out << to_json(r).dump() << '\n';
}

std::uint64_t Summary::total_fail() const {
  std::uint64_t n = 0;
  for (const auto& [name, c] : suites) n += c.fail;
  return n;
}

Summary summarize(std::istream& in) {
  Summary s;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), line_no);
    }
    if (auto err = validate_record(j); !err.empty()) throw ParseError(err, line_no);
    Record r = record_from_json(j);
    auto& c = s.suites[r.suite];
    switch (r.outcome()) {
      case Record::Outcome::pass: ++c.pass; break;
      case Record::Outcome::fail: ++c.fail; break;
      case Record::Outcome::skipped: ++c.skipped; break;
      case Record::Outcome::open: ++c.open; break;
    }
  }
  return s;
}

void print_summary(std::ostream& out, const Summary& s) {
  auto row = [&](const std::string& name, const SuiteCounts& c) {
    out << std::left << std::setw(24) << name << std::right << std::setw(10) << c.pass << std::setw(8) << c.fail
        << std::setw(10) << c.skipped << std::setw(8) << c.open << '\n';
  };
  out << std::left << std::setw(24) << "suite" << std::right << std::setw(10) << "pass" << std::setw(8) << "fail"
      << std::setw(10) << "skipped" << std::setw(8) << "open" << '\n';
  SuiteCounts total;
  for (const auto& [name, c] : s.suites) {
    row(name, c);
    total.pass += c.pass;
    total.fail += c.fail;
    total.skipped += c.skipped;
    total.open += c.open;
  }
  row("total", total);
}

}  // namespace grpaudit
