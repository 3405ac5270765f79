#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace fogcache {

/// 0-based F-AP index. User-facing ids (files, CSV) are index + 1.
using FapIndex = std::size_t;

/// Canonical vertex set: sorted ascending, no duplicates.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<FapIndex> members)
      : VertexSet(std::vector<FapIndex>(members)) {}
  explicit VertexSet(std::vector<FapIndex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  FapIndex front() const { return members_.front(); }
  FapIndex back() const { return members_.back(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  std::span<const FapIndex> members() const { return members_; }

  bool contains(FapIndex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }
  bool intersects(const VertexSet& other) const {
    auto a = members_.begin();
    auto b = other.members_.begin();
    while (a != members_.end() && b != other.members_.end()) {
      if (*a == *b) return true;
      if (*a < *b) ++a; else ++b;
    }
    return false;
  }
  bool is_subset_of(const VertexSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(),
                         members_.begin(), members_.end());
  }

  /// Renders as "{1,2,3}" using 1-based ids.
  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(members_[i] + 1);
    }
    return out + "}";
  }

  auto operator<=>(const VertexSet&) const = default;
  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<FapIndex> members_;
};

}  // namespace fogcache
