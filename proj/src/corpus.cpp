#include "grpaudit/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "grpaudit/errors.hpp"
#include "grpaudit/fitting.hpp"
#include "grpaudit/gen_file.hpp"
#include "grpaudit/parallel.hpp"
#include "grpaudit/zoo.hpp"

namespace grpaudit {

namespace fs = std::filesystem;

bool CorpusEntry::has_tag(const std::string& t) const { return std::find(tags.begin(), tags.end(), t) != tags.end(); }

bool CorpusEntry::skips(const std::string& suite) const {
  return std::find(skip_suites.begin(), skip_suites.end(), suite) != skip_suites.end();
}

std::string default_manifest_path() { return std::string(GRPAUDIT_DATA_DIR) + "/corpus.json"; }

std::vector<CorpusEntry> parse_manifest(const nlohmann::json& doc, const std::string& base_dir) {
  const nlohmann::json* list = &doc;
  if (doc.is_object()) {
    if (!doc.contains("groups")) throw CorpusError("manifest has no \"groups\" list");
    list = &doc.at("groups");
  }
  if (!list->is_array()) throw CorpusError("manifest groups must be a list");
  std::vector<CorpusEntry> out;
  for (const auto& j : *list) {
    CorpusEntry e;
    try {
      e.name = j.at("name").get<std::string>();
      if (j.contains("file")) {
        fs::path p = j.at("file").get<std::string>();
        if (p.is_relative()) p = fs::path(base_dir) / p;
        e.file = p.string();
      } else {
        e.family = j.at("family").get<std::string>();
        e.params = j.value("params", nlohmann::json::object());
      }
      e.order = j.at("order").get<std::uint64_t>();
      if (j.contains("socle_order")) e.socle_order = j.at("socle_order").get<std::uint64_t>();
      e.tags = j.value("tags", std::vector<std::string>{});
      e.primes = j.value("primes", std::vector<std::uint64_t>{});
      if (j.contains("profile")) {
        const auto& prof = j.at("profile");
        e.skip_suites = prof.value("skip", std::vector<std::string>{});
        e.caps = prof.value("caps", std::map<std::string, std::uint64_t>{});
      }
    } catch (const nlohmann::json::exception& ex) {
      throw CorpusError("invalid manifest entry " + j.dump() + ": " + ex.what());
    }
    if (e.order == 0) throw CorpusError(e.name + ": declared order must be positive");
    for (const auto& prev : out)
      if (prev.name == e.name) throw CorpusError("duplicate corpus entry " + e.name);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CorpusEntry> load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open corpus manifest " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& ex) {
    throw CorpusError(path + ": " + ex.what());
  }
  return parse_manifest(doc, fs::path(path).parent_path().string());
}

std::vector<CorpusEntry> corpus() { return load_manifest(default_manifest_path()); }

PermGroup build_entry(const CorpusEntry& e) {
  PermGroup g;
  try {
    if (!e.file.empty()) {
      if (!fs::exists(e.file)) throw CorpusError(e.name + ": missing generator file " + e.file);
      g = load_generator_file(e.file);
    } else {
      g = zoo::make(e.family, e.params);
    }
  } catch (const CorpusError&) {
    throw;
  } catch (const std::exception& ex) {
    throw CorpusError(e.name + ": " + ex.what());
  }
  if (g.order() != e.order)
    throw CorpusError(e.name + ": constructed order " + std::to_string(g.order()) + ", declared " +
                      std::to_string(e.order));
  if (e.socle_order) {
    auto amb = Ambient::create(g);
    auto soc = socle(amb->whole());
    if (soc.order() != *e.socle_order)
      throw CorpusError(e.name + ": socle order " + std::to_string(soc.order()) + ", declared " +
                        std::to_string(*e.socle_order));
  }
  return g;
}

std::vector<LoadedGroup> load_corpus(const std::vector<CorpusEntry>& entries, std::size_t jobs) {
  std::vector<LoadedGroup> out(entries.size());
  parallel_for(entries.size(), jobs, [&](std::size_t i) { out[i] = {entries[i], build_entry(entries[i])}; });
  return out;
}

}  // namespace grpaudit
