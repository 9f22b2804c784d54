#include "orderkit/poset_io.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "orderkit/canonical.hpp"
#include "orderkit/errors.hpp"

namespace orderkit {

namespace {

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> words;
  std::istringstream in{std::string(line)};
  for (std::string w; in >> w;) words.push_back(std::move(w));
  return words;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

FinitePoset parse_poset(std::string_view text) {
  std::string name;
  std::optional<std::vector<std::string>> labels;
  std::vector<std::pair<std::string, std::string>> covers;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto words = split_words(line);
    if (words.empty()) {
      if (end == text.size()) break;
      continue;
    }

    if (words[0] == "poset") {
      if (words.size() != 2) throw SyntaxError(line_no, "expected 'poset <name>'");
      if (!name.empty() || labels) throw SyntaxError(line_no, "'poset' must come first and only once");
      name = words[1];
    } else if (words[0] == "elements:" || words[0].starts_with("elements:")) {
      if (labels) throw SyntaxError(line_no, "duplicate 'elements:' line");
      std::vector<std::string> ls;
      std::string first_rest = words[0].substr(std::string_view("elements:").size());
      if (!first_rest.empty()) ls.push_back(first_rest);
      ls.insert(ls.end(), words.begin() + 1, words.end());
      std::vector<std::string> sorted = ls;
      std::sort(sorted.begin(), sorted.end());
      if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end())
        throw SyntaxError(line_no, "duplicate element '" + *dup + "'");
      labels = std::move(ls);
    } else if (words[0] == "cover") {
      if (words.size() != 3) throw SyntaxError(line_no, "expected 'cover <x> <y>'");
      if (!labels) throw SyntaxError(line_no, "'cover' before 'elements:'");
      if (words[1] == words[2]) throw SyntaxError(line_no, "reflexive cover '" + words[1] + "'");
      covers.emplace_back(words[1], words[2]);
    } else {
      throw SyntaxError(line_no, "unknown directive '" + words[0] + "'");
    }
    if (end == text.size()) break;
  }
  if (!labels) throw SyntaxError(line_no, "missing 'elements:' line");
  return build_poset(name, std::move(*labels), covers, PairMode::covers);
}

std::string emit_poset(const FinitePoset& p) {
  const FinitePoset q = canonical_reorder(p);
  std::ostringstream out;
  if (!q.name().empty() && q.name().find_first_of(" \t#") == std::string::npos) out << "poset " << q.name() << '\n';
  out << "elements:";
  for (const auto& l : q.labels()) out << ' ' << l;
  out << '\n';
  for (auto [x, y] : hasse(q)) out << "cover " << q.label(x) << ' ' << q.label(y) << '\n';
  return out.str();
}

std::string export_dot(const FinitePoset& p) {
  const FinitePoset q = canonical_reorder(p);
  std::ostringstream out;
  out << "digraph " << quoted(q.name().empty() ? "poset" : q.name()) << " {\n";
  out << "  rankdir=BT;\n";
  for (const auto& l : q.labels()) out << "  " << quoted(l) << ";\n";
  for (auto [x, y] : hasse(q)) out << "  " << quoted(q.label(x)) << " -> " << quoted(q.label(y)) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace orderkit
