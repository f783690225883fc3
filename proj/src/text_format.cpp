#include "synclab/text_format.hpp"

#include <charconv>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "synclab/errors.hpp"

namespace synclab {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const auto start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::size_t parse_count(std::string_view token, std::size_t line, const char* what) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line, std::string(what) + " '" + std::string(token) + "' is not a nonnegative integer");
  }
  return value;
}

}  // namespace

Automaton parse_automaton(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<Generator> gens;
  std::set<std::string, std::less<>> names;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (tokens.front() == "n") {
      if (n) throw ParseError(line_no, "state count given twice");
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'n <int>'");
      n = parse_count(tokens[1], line_no, "state count");
      if (*n == 0) throw ParseError(line_no, "state count must be positive");
      continue;
    }
    if (tokens.front() == "gen") {
      if (!n) throw ParseError(line_no, "missing 'n <int>' before the first generator");
      if (tokens.size() < 2) throw ParseError(line_no, "generator without a name");
      const std::string name(tokens[1]);
      if (tokens.size() != *n + 2) {
        throw ParseError(line_no, "generator " + name + " lists " + std::to_string(tokens.size() - 2) +
                                      " images, expected " + std::to_string(*n));
      }
      if (!names.insert(name).second) throw ParseError(line_no, "duplicate generator name " + name);
      std::vector<State> images;
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        const auto v = parse_count(tokens[i], line_no, "image");
        if (v < 1 || v > *n) {
          throw ParseError(line_no, "image " + std::to_string(v) + " outside 1.." + std::to_string(*n));
        }
        images.push_back(static_cast<State>(v));
      }
      gens.push_back({name, Transformation(images)});
      continue;
    }
    throw ParseError(line_no, "unknown directive '" + std::string(tokens.front()) + "'");
  }
  if (!n) throw ParseError(line_no, "missing 'n <int>'");
  return Automaton(*n, std::move(gens));
}

std::string render_automaton(const Automaton& automaton) {
  std::ostringstream os;
  os << "n " << automaton.states() << '\n';
  for (const auto& g : automaton.generators()) {
    os << "gen " << g.name;
    for (State v : g.map.images()) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

}  // namespace synclab
