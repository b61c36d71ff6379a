#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jetspace/polynomial.hpp"

namespace jetspace {

/// A parsed problem file.
///
///     # comment
///     ring x, y
///     ideal f = x^2 - y^3
///     point 0, 0
///     command lambda m_max=3 e_max=3
///     budget max_pairs=100000 max_degree=64
///
/// Names referenced by parameters must be declared; parameter values are
/// range-checked here so that later failures are mathematical ones.
struct ProblemSpec {
  std::optional<Ring> ring;
  std::vector<std::pair<std::string, std::vector<Polynomial>>> ideals;
  std::optional<Point> point;
  std::string command;
  std::map<std::string, std::string> params;
  std::optional<std::size_t> max_pairs;
  std::optional<std::uint64_t> max_degree;

  const std::vector<Polynomial>* find_ideal(std::string_view name) const;
  /// Normalized text (canonical polynomials, sorted parameters); the inputs digest hashes this.
  std::string canonical() const;
};

/// Parses a problem file. Errors are ParseError with the 1-based line number as position.
ProblemSpec parse_problem(std::string_view text);

const std::vector<std::string>& supported_commands();

/// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a_hex(std::string_view text);

}  // namespace jetspace
