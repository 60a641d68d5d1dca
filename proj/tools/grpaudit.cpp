#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "grpaudit/characters.hpp"
#include "grpaudit/corpus.hpp"
#include "grpaudit/errors.hpp"
#include "grpaudit/report.hpp"
#include "grpaudit/suites.hpp"

using namespace grpaudit;

namespace {

constexpr int kExitViolations = 1;
constexpr int kExitConfig = 2;
constexpr int kExitCorpus = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct RunFlags {
  std::string config;
  std::vector<std::string> suites, groups, tags, caps;
  std::string corpus, out;
  std::uint64_t max_order = 0, seed = 0;
  std::vector<std::uint64_t> primes;
  std::size_t jobs = 0;
  int k_max = 0;
  bool timing = false;
};

int do_run(const RunFlags& f, const CLI::App& sub) {
  SuiteConfig cfg;
  try {
    if (!f.config.empty()) apply_config_text(cfg, read_file(f.config));
    if (sub.count("--suites")) cfg.suites = f.suites;
    if (sub.count("--groups")) cfg.groups = f.groups;
    if (sub.count("--tags")) cfg.tags = f.tags;
    if (sub.count("--corpus")) cfg.corpus_path = f.corpus;
    if (sub.count("--out")) cfg.out = f.out;
    if (sub.count("--max-order")) cfg.max_order = f.max_order;
    if (sub.count("--seed")) cfg.seed = f.seed;
    if (sub.count("--p")) cfg.primes = f.primes;
    if (sub.count("--jobs")) cfg.jobs = f.jobs;
    if (sub.count("--k-max")) cfg.k_max = f.k_max;
    if (sub.count("--timing")) cfg.timing = f.timing;
    for (const auto& c : f.caps) cfg.set_cap(c);
    cfg.validate();
  } catch (const ParseError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }

  std::vector<LoadedGroup> groups;
  try {
    auto entries = cfg.corpus_path.empty() ? corpus() : load_manifest(cfg.corpus_path);
    for (const auto& name : cfg.groups) {
      bool found = std::any_of(entries.begin(), entries.end(), [&](const CorpusEntry& e) { return e.name == name; });
      if (!found) throw CorpusError("no corpus entry named " + name);
    }
    groups = load_corpus(select_entries(cfg, entries), cfg.jobs);
  } catch (const std::exception& e) {
    std::cerr << "corpus error: " << e.what() << '\n';
    return kExitCorpus;
  }

  RunResult res = run_suites(cfg, groups);
  if (cfg.out.empty()) {
    write_ndjson(std::cout, res.records);
  } else {
    std::ofstream out(cfg.out, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << cfg.out << '\n';
      return kExitConfig;
    }
    write_ndjson(out, res.records);
  }
  std::cerr << res.records.size() << " records, " << res.failures << " failures, " << res.skipped << " skipped, "
            << res.open << " open\n";
  return res.failures ? kExitViolations : 0;
}

int do_summarize(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot read report " << path << '\n';
    return kExitConfig;
  }
  try {
    Summary s = summarize(in);
    print_summary(std::cout, s);
    return s.total_fail() ? kExitViolations : 0;
  } catch (const ParseError& e) {
    std::cerr << "invalid report: " << e.what() << '\n';
    return kExitConfig;
  }
}

int do_table(const std::string& name, const std::string& corpus_path, std::uint64_t seed) {
  std::vector<CorpusEntry> entries;
  PermGroup g;
  try {
    entries = corpus_path.empty() ? corpus() : load_manifest(corpus_path);
    auto it = std::find_if(entries.begin(), entries.end(), [&](const CorpusEntry& e) { return e.name == name; });
    if (it == entries.end()) throw CorpusError("no corpus entry named " + name);
    g = build_entry(*it);
  } catch (const std::exception& e) {
    std::cerr << "corpus error: " << e.what() << '\n';
    return kExitCorpus;
  }
  try {
    auto amb = Ambient::create(g);
    std::cout << table_to_json(character_table(amb->whole(), name, seed)).dump(2) << '\n';
    return 0;
  } catch (const CapExceeded& e) {
    std::cerr << "skipped: " << e.what() << '\n';
    return kExitViolations;
  }
}

int do_list(const std::string& corpus_path) {
  try {
    auto entries = corpus_path.empty() ? corpus() : load_manifest(corpus_path);
    for (const auto& e : entries) {
      std::cout << e.name << '\t' << e.order << '\t';
      for (std::size_t i = 0; i < e.tags.size(); ++i) std::cout << (i ? "," : "") << e.tags[i];
      std::cout << '\n';
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "corpus error: " << e.what() << '\n';
    return kExitCorpus;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-group theorem audits on a corpus of permutation groups"};
  app.require_subcommand(1);

  RunFlags flags;
  auto* run = app.add_subcommand("run", "Run suites over the corpus and write an NDJSON report");
  run->add_option("--config", flags.config, "Key-value config file; flags override it");
  run->add_option("--suites", flags.suites, "Comma-separated suite names")->delimiter(',');
  run->add_option("--corpus", flags.corpus, "Corpus manifest (default: the bundled one)");
  run->add_option("--groups", flags.groups, "Only these corpus entries")->delimiter(',');
  run->add_option("--tags", flags.tags, "Only entries carrying all of these tags")->delimiter(',');
  run->add_option("--max-order", flags.max_order, "Skip entries above this order");
  run->add_option("--p", flags.primes, "Only these primes")->delimiter(',');
  run->add_option("--seed", flags.seed, "Seed for randomized algorithms");
  run->add_option("--jobs", flags.jobs, "Worker threads");
  run->add_option("--out", flags.out, "Report path (default: standard output)");
  run->add_option("--caps", flags.caps, "Cap override KEY=VALUE or SUITE.KEY=VALUE; repeatable");
  run->add_option("--k-max", flags.k_max, "Largest k for Gamma_k scans");
  run->add_flag("--timing", flags.timing, "Fill elapsed_ms (makes reports run-dependent)");

  std::string report_path;
  auto* sum = app.add_subcommand("summarize", "Per-suite pass/fail/skipped counts of a report");
  sum->add_option("report", report_path, "NDJSON report")->required();

  auto* schema = app.add_subcommand("report-schema", "Print the JSON schema of report records");
  auto* suites = app.add_subcommand("suites", "List suite names");

  std::string table_group, table_corpus;
  std::uint64_t table_seed = kDefaultSplitSeed;
  auto* table = app.add_subcommand("table", "Print the character table of a corpus group as JSON");
  table->add_option("group", table_group, "Corpus entry name")->required();
  table->add_option("--corpus", table_corpus, "Corpus manifest");
  table->add_option("--seed", table_seed, "Seed for the eigenspace splitting");

  std::string list_corpus;
  auto* list = app.add_subcommand("corpus", "List corpus entries");
  list->add_option("--corpus", list_corpus, "Corpus manifest");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  if (*run) return do_run(flags, *run);
  if (*sum) return do_summarize(report_path);
  if (*schema) {
    std::cout << report_schema().dump(2) << '\n';
    return 0;
  }
  if (*suites) {
    for (const auto& s : suite_names()) std::cout << s << '\n';
    return 0;
  }
  if (*table) return do_table(table_group, table_corpus, table_seed);
  if (*list) return do_list(list_corpus);
  return kExitConfig;
}
