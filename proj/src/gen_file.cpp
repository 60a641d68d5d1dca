#include "grpaudit/gen_file.hpp"

#include <fstream>
#include <sstream>

#include "grpaudit/errors.hpp"

namespace grpaudit {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

PermGroup parse_generator_text(std::string_view text) {
  std::size_t degree = 0;
  bool have_degree = false;
  std::vector<Permutation> gens;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (!have_degree) {
      if (!line.starts_with("degree")) throw ParseError("expected \"degree n\"", line_no);
      std::string rest(trim(line.substr(6)));
      std::size_t used = 0;
      unsigned long long n = 0;
      try {
        n = std::stoull(rest, &used);
      } catch (const std::exception&) {
        throw ParseError("invalid degree", line_no);
      }
      if (used != rest.size() || n == 0 || n > 65536) throw ParseError("invalid degree", line_no);
      degree = static_cast<std::size_t>(n);
      have_degree = true;
      continue;
    }
    try {
      gens.push_back(Permutation::from_cycles(line, degree));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (!have_degree) throw ParseError("missing \"degree n\" line", line_no);
  if (gens.empty()) return PermGroup::trivial(degree);
  return PermGroup(std::move(gens));
}

PermGroup load_generator_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open generator file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_generator_text(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line());
  }
}

std::string format_generator_text(const PermGroup& g, std::string_view comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << "\n";
  out << "degree " << g.degree() << "\n";
  for (const auto& gen : g.generators()) out << gen.to_string() << "\n";
  return out.str();
}

}  // namespace grpaudit
