#include "jetspace/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "jetspace/errors.hpp"

namespace jetspace {

bool Ring::valid_name(std::string_view name) {
  if (name.empty()) return false;
  const auto head = static_cast<unsigned char>(name.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    const auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

Ring::Ring(std::vector<std::string> names) {
  std::set<std::string_view> seen;
  for (const auto& n : names) {
    if (!valid_name(n)) throw PreconditionError("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw PreconditionError("duplicate variable name '" + n + "'");
  }
  data_ = std::make_shared<const Data>(Data{std::move(names)});
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  const auto& v = data_->names;
  const auto it = std::find(v.begin(), v.end(), name);
  if (it == v.end()) return std::nullopt;
  return static_cast<std::size_t>(it - v.begin());
}

std::size_t Ring::require_index(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw PreconditionError("unknown variable '" + std::string(name) + "'");
}

void require_same_ring(const Ring& a, const Ring& b, std::string_view what) {
  if (!(a == b)) throw PreconditionError("ring mismatch in " + std::string(what));
}

}  // namespace jetspace
