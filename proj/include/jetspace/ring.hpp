#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jetspace {

/// Polynomial ring Q[x_1..x_N] identified by its ordered variable names.
/// Cheap to copy; two rings are equal iff their name lists are equal.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names);

  std::size_t size() const { return data_->names.size(); }
  const std::string& name(std::size_t i) const { return data_->names.at(i); }
  const std::vector<std::string>& names() const { return data_->names; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Index of `name`, throwing PreconditionError when it is not a variable.
  std::size_t require_index(std::string_view name) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.data_ == b.data_ || a.data_->names == b.data_->names;
  }

  static bool valid_name(std::string_view name);

 private:
  struct Data {
    std::vector<std::string> names;
  };
  std::shared_ptr<const Data> data_;
};

/// Throws PreconditionError unless both rings are equal.
void require_same_ring(const Ring& a, const Ring& b, std::string_view what);

}  // namespace jetspace
