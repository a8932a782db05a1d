#pragma once

#include <algorithm>
#include <initializer_list>
#include <vector>

namespace plab {

// Sorted, duplicate-free set of element indices into one owning container
// (a graph's vertices or an action's atoms). Indices follow the owner's
// lexicographic id order, so comparing index lists compares id lists.
template <class Tag>
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::vector<int> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }
  IndexSet(std::initializer_list<int> members) : IndexSet(std::vector<int>(members)) {}

  const std::vector<int>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(int v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }

  IndexSet unite(const IndexSet& o) const {
    IndexSet r;
    std::set_union(begin(), end(), o.begin(), o.end(), std::back_inserter(r.members_));
    return r;
  }
  IndexSet intersect(const IndexSet& o) const {
    IndexSet r;
    std::set_intersection(begin(), end(), o.begin(), o.end(), std::back_inserter(r.members_));
    return r;
  }
  IndexSet minus(const IndexSet& o) const {
    IndexSet r;
    std::set_difference(begin(), end(), o.begin(), o.end(), std::back_inserter(r.members_));
    return r;
  }
  bool is_subset_of(const IndexSet& o) const {
    return std::includes(o.begin(), o.end(), begin(), end());
  }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  // Lexicographic order of the sorted member lists (a proper prefix is smaller).
  friend bool operator<(const IndexSet& a, const IndexSet& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }

 private:
  std::vector<int> members_;
};

}  // namespace plab
