#pragma once

// Line-oriented text formats. Blank lines and lines starting with '#' are
// ignored; tokens are separated by whitespace.
//
// Concept file:
//   concept <name>
//   property <id> <degree>
//   ...
//
// World file, one of:
//   independent            exclusive <n> <m> <k>       instances
//   <id> <marginal>                                    [universe <id>,<id>,...]
//   ...                                                <id>,<id>,... <weight>
//                                                      - <weight>
//
// In an instances file the universe is the optional `universe` line followed
// by ids in order of first appearance; `-` is the row holding no property.

#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "intension/concept_model.hpp"

namespace intension {

struct LoadedWorld {
  WorldModel world;
  /// Concepts implied by the world itself (F and W of an exclusive world).
  std::vector<Concept> concepts;
};

namespace detail {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream ss(raw);
    std::vector<std::string> tokens;
    for (std::string t; ss >> t;) tokens.push_back(std::move(t));
    if (tokens.empty() || tokens.front().front() == '#') continue;
    lines.push_back({number, std::move(tokens)});
  }
  return lines;
}

[[noreturn]] inline void parse_fail(std::string_view source, std::size_t line, const std::string& msg) {
  throw Error(ErrorKind::ParseError, std::string(source) + ":" + std::to_string(line) + ": " + msg);
}

template <typename T>
T parse_number(std::string_view source, std::size_t line, const std::string& token) {
  T value{};
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) parse_fail(source, line, "expected a number, got '" + token + "'");
  return value;
}

inline std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    out.push_back(s.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

inline std::ifstream open_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::FileNotFound, "cannot open '" + path.string() + "'");
  return in;
}

/// Rethrows a library validation error with the offending line attached.
template <typename F>
auto at_line(std::string_view source, std::size_t line, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    parse_fail(source, line, e.what());
  }
}

inline std::size_t index_in(std::vector<PropertyId>& universe, PropertyId id) {
  for (std::size_t i = 0; i < universe.size(); ++i)
    if (universe[i] == id) return i;
  universe.push_back(std::move(id));
  return universe.size() - 1;
}

}  // namespace detail

inline std::vector<Concept> parse_concepts(std::istream& in, std::string_view source = "<concepts>") {
  struct Pending {
    std::string name;
    std::size_t line;
    std::vector<PropertyDegree> props;
  };
  std::vector<Pending> pending;
  for (const auto& [line, tok] : detail::tokenize(in)) {
    if (tok[0] == "concept") {
      if (tok.size() != 2) detail::parse_fail(source, line, "expected 'concept <name>'");
      for (const auto& p : pending)
        if (p.name == tok[1]) detail::parse_fail(source, line, "concept '" + tok[1] + "' defined twice");
      pending.push_back({tok[1], line, {}});
    } else if (tok[0] == "property") {
      if (tok.size() != 3) detail::parse_fail(source, line, "expected 'property <id> <degree>'");
      if (pending.empty()) detail::parse_fail(source, line, "property before any concept header");
      const double d = detail::parse_number<double>(source, line, tok[2]);
      detail::at_line(source, line, [&] {
        detail::check_degree(d, tok[1]);
        pending.back().props.push_back({PropertyId(tok[1]), d});
        return 0;
      });
    } else {
      detail::parse_fail(source, line, "unknown directive '" + tok[0] + "'");
    }
  }
  std::vector<Concept> out;
  for (auto& p : pending)
    out.push_back(detail::at_line(source, p.line, [&] { return Concept(p.name, std::move(p.props)); }));
  return out;
}

inline LoadedWorld parse_world(std::istream& in, std::string_view source = "<world>") {
  const auto lines = detail::tokenize(in);
  if (lines.empty()) detail::parse_fail(source, 0, "empty world file");
  const auto& head = lines.front();
  const std::string& kind = head.tokens[0];

  if (kind == "independent") {
    if (head.tokens.size() != 1) detail::parse_fail(source, head.number, "'independent' takes no arguments");
    std::vector<PropertyId> universe;
    std::vector<double> marginals;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const auto& [line, tok] = lines[i];
      if (tok.size() != 2) detail::parse_fail(source, line, "expected '<id> <marginal>'");
      const double p = detail::parse_number<double>(source, line, tok[1]);
      detail::at_line(source, line, [&] {
        detail::check_degree(p, tok[0]);
        universe.emplace_back(tok[0]);
        return 0;
      });
      marginals.push_back(p);
    }
    return detail::at_line(source, head.number, [&] {
      return LoadedWorld{build_independent_world(std::move(universe), marginals), {}};
    });
  }

  if (kind == "exclusive") {
    if (head.tokens.size() != 4) detail::parse_fail(source, head.number, "expected 'exclusive <n> <m> <k>'");
    if (lines.size() > 1) detail::parse_fail(source, lines[1].number, "unexpected line after 'exclusive'");
    const auto n = detail::parse_number<std::size_t>(source, head.number, head.tokens[1]);
    const auto m = detail::parse_number<std::size_t>(source, head.number, head.tokens[2]);
    const auto k = detail::parse_number<std::size_t>(source, head.number, head.tokens[3]);
    return detail::at_line(source, head.number, [&] {
      auto ex = build_exclusive_world(n, m, k);
      return LoadedWorld{std::move(ex.world), {std::move(ex.f), std::move(ex.w)}};
    });
  }

  if (kind == "instances") {
    if (head.tokens.size() != 1) detail::parse_fail(source, head.number, "'instances' takes no arguments");
    InstanceTable table;
    std::size_t i = 1;
    if (i < lines.size() && lines[i].tokens[0] == "universe") {
      const auto& [line, tok] = lines[i];
      if (tok.size() != 2) detail::parse_fail(source, line, "expected 'universe <id>,<id>,...'");
      for (const auto& id : detail::split_commas(tok[1]))
        detail::at_line(source, line, [&] {
          if (std::find(table.universe.begin(), table.universe.end(), PropertyId(id)) != table.universe.end())
            throw Error(ErrorKind::DuplicateProperty, "'" + id + "' listed twice");
          table.universe.emplace_back(id);
          return 0;
        });
      ++i;
    }
    for (; i < lines.size(); ++i) {
      const auto& [line, tok] = lines[i];
      if (tok.size() != 2) detail::parse_fail(source, line, "expected '<id>,<id>,... <weight>'");
      Mask mask = 0;
      if (tok[0] != "-") {
        for (const auto& id : detail::split_commas(tok[0])) {
          const std::size_t bit =
              detail::at_line(source, line, [&] { return detail::index_in(table.universe, PropertyId(id)); });
          if (bit >= kMaxUniverse)
            detail::parse_fail(source, line, "more than " + std::to_string(kMaxUniverse) + " distinct properties");
          mask |= Mask{1} << bit;
        }
      }
      const double weight = detail::parse_number<double>(source, line, tok[1]);
      table.rows.push_back({mask, weight});
    }
    return detail::at_line(source, head.number, [&] { return LoadedWorld{world_from_instances(table), {}}; });
  }

  detail::parse_fail(source, head.number, "unknown world kind '" + kind + "'");
}

inline std::vector<Concept> load_concepts(const std::filesystem::path& path) {
  auto in = detail::open_file(path);
  return parse_concepts(in, path.string());
}

inline LoadedWorld load_world(const std::filesystem::path& path) {
  auto in = detail::open_file(path);
  return parse_world(in, path.string());
}

}  // namespace intension
