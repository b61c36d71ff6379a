#include "jetspace/problem.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <set>

#include "jetspace/errors.hpp"
#include "jetspace/parser.hpp"

namespace jetspace {

namespace {

struct ParamRule {
  std::string key;
  enum Kind { integer, flag, ideal_expr, clause_list, center } kind;
  long lo = 0;
  long hi = 0;
};

const std::map<std::string, std::vector<ParamRule>>& command_rules() {
  static const std::map<std::string, std::vector<ParamRule>> rules{
      {"jets", {{"ideal", ParamRule::ideal_expr}, {"m", ParamRule::integer, 0, 12}}},
      {"dim", {{"ideal", ParamRule::ideal_expr}}},
      {"tangent-cone", {{"ideal", ParamRule::ideal_expr}}},
      {"check-main",
       {{"ideal", ParamRule::ideal_expr}, {"cross_check", ParamRule::flag}, {"e_max", ParamRule::integer, 0, 8}}},
      {"lambda",
       {{"ideal", ParamRule::ideal_expr}, {"m_max", ParamRule::integer, 1, 6}, {"e_max", ParamRule::integer, 0, 8}}},
      {"lct-bound",
       {{"a", ParamRule::ideal_expr},
        {"variety", ParamRule::ideal_expr},
        {"M", ParamRule::integer, 1, 12},
        {"e_max", ParamRule::integer, 0, 8}}},
      {"mld-bound", {{"clauses", ParamRule::clause_list}, {"W", ParamRule::center}, {"M", ParamRule::integer, 1, 8}}},
      {"ord-blowup", {{"ideal", ParamRule::ideal_expr}}},
  };
  return rules;
}

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = s.find(sep, start);
    out.push_back(trim(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start)));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.emplace_back(s.substr(start, i - start));
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what, line);
}

std::optional<long> to_long(std::string_view s) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

const std::vector<std::string>& supported_commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, rules] : command_rules()) out.push_back(name);
    return out;
  }();
  return names;
}

const std::vector<Polynomial>* ProblemSpec::find_ideal(std::string_view name) const {
  for (const auto& [n, gens] : ideals)
    if (n == name) return &gens;
  return nullptr;
}

std::string ProblemSpec::canonical() const {
  std::string out;
  if (ring) out += "ring " + join(ring->names(), ", ") + "\n";
  for (const auto& [name, gens] : ideals) {
    std::vector<std::string> g;
    for (const auto& p : gens) g.push_back(p.to_string());
    out += "ideal " + name + " = " + join(g, ", ") + "\n";
  }
  if (point) {
    std::vector<std::string> c;
    for (const auto& r : *point) c.push_back(r.to_string());
    out += "point " + join(c, ", ") + "\n";
  }
  out += "command " + command;
  for (const auto& [k, v] : params) out += " " + k + "=" + v;
  out += "\n";
  if (max_pairs || max_degree) {
    out += "budget";
    if (max_pairs) out += " max_pairs=" + std::to_string(*max_pairs);
    if (max_degree) out += " max_degree=" + std::to_string(*max_degree);
    out += "\n";
  }
  return out;
}

ProblemSpec parse_problem(std::string_view text) {
  ProblemSpec spec;
  bool have_command = false;
  std::size_t command_line = 0;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string line = trim(raw);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const std::size_t sp = line.find_first_of(" \t");
    const std::string keyword = line.substr(0, sp);
    const std::string rest = sp == std::string::npos ? std::string() : trim(std::string_view(line).substr(sp));

    if (keyword == "ring") {
      if (spec.ring) fail(line_no, "ring declared twice");
      if (rest.empty()) fail(line_no, "ring needs at least one variable");
      try {
        spec.ring = Ring(split(rest, ','));
      } catch (const PreconditionError& e) {
        fail(line_no, e.what());
      }
    } else if (keyword == "ideal") {
      if (!spec.ring) fail(line_no, "ideal before ring");
      const std::size_t eq = rest.find('=');
      if (eq == std::string::npos) fail(line_no, "expected 'ideal NAME = generators'");
      const std::string name = trim(std::string_view(rest).substr(0, eq));
      if (!Ring::valid_name(name)) fail(line_no, "invalid ideal name '" + name + "'");
      if (spec.find_ideal(name)) fail(line_no, "ideal '" + name + "' declared twice");
      std::vector<Polynomial> gens;
      for (const auto& g : split(std::string_view(rest).substr(eq + 1), ',')) {
        try {
          gens.push_back(parse_polynomial(g, *spec.ring));
        } catch (const ParseError& e) {
          fail(line_no, e.message() + " in '" + trim(g) + "' at offset " + std::to_string(e.position()));
        }
      }
      spec.ideals.emplace_back(name, std::move(gens));
    } else if (keyword == "point") {
      if (!spec.ring) fail(line_no, "point before ring");
      if (spec.point) fail(line_no, "point declared twice");
      Point p;
      for (const auto& c : split(rest, ',')) {
        try {
          p.push_back(Rational::parse(c));
        } catch (const ParseError&) {
          fail(line_no, "invalid coordinate '" + c + "'");
        }
      }
      if (p.size() != spec.ring->size())
        fail(line_no, "point has " + std::to_string(p.size()) + " coordinates, ring has " +
                          std::to_string(spec.ring->size()));
      spec.point = std::move(p);
    } else if (keyword == "command") {
      if (have_command) fail(line_no, "command declared twice");
      const auto parts = words(rest);
      if (parts.empty()) fail(line_no, "command needs a name");
      spec.command = parts[0];
      if (!command_rules().count(spec.command)) fail(line_no, "unknown command '" + spec.command + "'");
      for (std::size_t i = 1; i < parts.size(); ++i) {
        const std::size_t eq = parts[i].find('=');
        if (eq == std::string::npos || eq == 0) fail(line_no, "expected key=value, got '" + parts[i] + "'");
        const std::string key = parts[i].substr(0, eq);
        if (spec.params.count(key)) fail(line_no, "parameter '" + key + "' given twice");
        spec.params[key] = parts[i].substr(eq + 1);
      }
      have_command = true;
      command_line = line_no;
    } else if (keyword == "budget") {
      for (const auto& w : words(rest)) {
        const std::size_t eq = w.find('=');
        const auto value = eq == std::string::npos ? std::nullopt : to_long(std::string_view(w).substr(eq + 1));
        if (!value || *value < 1) fail(line_no, "expected max_pairs=N or max_degree=D with N, D >= 1");
        const std::string key = w.substr(0, eq);
        if (key == "max_pairs") spec.max_pairs = static_cast<std::size_t>(*value);
        else if (key == "max_degree") spec.max_degree = static_cast<std::uint64_t>(*value);
        else fail(line_no, "unknown budget key '" + key + "'");
      }
    } else {
      fail(line_no, "unknown keyword '" + keyword + "'");
    }
    if (end == text.size()) break;
  }

  if (!spec.ring) fail(line_no, "missing ring declaration");
  if (!have_command) fail(line_no, "missing command");

  // Parameters.
  const auto& rules = command_rules().at(spec.command);
  auto check_ideal_expr = [&](const std::string& key, const std::string& value) {
    for (const auto& part : split(value, '*'))
      if (!spec.find_ideal(part)) fail(command_line, key + " refers to undeclared ideal '" + part + "'");
  };
  for (const auto& [key, value] : spec.params) {
    const auto rule = std::find_if(rules.begin(), rules.end(), [&](const ParamRule& r) { return r.key == key; });
    if (rule == rules.end()) fail(command_line, "parameter '" + key + "' is not accepted by " + spec.command);
    switch (rule->kind) {
      case ParamRule::integer: {
        const auto v = to_long(value);
        if (!v || *v < rule->lo || *v > rule->hi)
          fail(command_line, key + " must be an integer in [" + std::to_string(rule->lo) + ", " +
                                 std::to_string(rule->hi) + "]");
        break;
      }
      case ParamRule::flag:
        if (value != "0" && value != "1") fail(command_line, key + " must be 0 or 1");
        break;
      case ParamRule::ideal_expr:
        check_ideal_expr(key, value);
        break;
      case ParamRule::clause_list:
        for (const auto& clause : split(value, ',')) {
          const std::size_t colon = clause.find(':');
          if (colon == std::string::npos) fail(command_line, "clause '" + clause + "' needs ':exponent'");
          check_ideal_expr(key, clause.substr(0, colon));
          Rational e;
          try {
            e = Rational::parse(clause.substr(colon + 1));
          } catch (const ParseError&) {
            fail(command_line, "invalid exponent in clause '" + clause + "'");
          }
          if (e.sign() <= 0) fail(command_line, "exponents must be positive");
        }
        break;
      case ParamRule::center:
        if (value != "point") check_ideal_expr(key, value);
        break;
    }
  }

  const bool takes_ideal = std::any_of(rules.begin(), rules.end(), [](const ParamRule& r) { return r.key == "ideal"; });
  if (takes_ideal && !spec.params.count("ideal")) {
    if (spec.ideals.size() != 1) fail(command_line, spec.command + " needs ideal=NAME when several ideals are declared");
    spec.params["ideal"] = spec.ideals.front().first;
  }
  if (spec.command == "jets" && !spec.params.count("m")) fail(command_line, "jets needs m=");
  if (spec.command == "lct-bound" && !spec.params.count("a")) fail(command_line, "lct-bound needs a=");
  if (spec.command == "mld-bound" && !spec.params.count("clauses")) fail(command_line, "mld-bound needs clauses=");
  const bool needs_point = spec.command == "tangent-cone" || spec.command == "check-main" || spec.command == "lambda" ||
                           (spec.command == "mld-bound" && (!spec.params.count("W") || spec.params.at("W") == "point"));
  if (needs_point && !spec.point) fail(command_line, spec.command + " needs a point declaration");
  return spec;
}

std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace jetspace
