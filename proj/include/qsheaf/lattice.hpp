#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "qsheaf/common.hpp"

namespace qsheaf {

// A finite complete lattice, stored extensionally: the element list plus the
// full order relation. Joins and meets are computed by scanning; instances
// are tiny and correctness beats speed here. Element identity is identifier
// equality. Immutable after construction.
class SupLattice {
 public:
  SupLattice() = default;

  // `leq[i][j]` is true iff elements[i] <= elements[j]. The relation is
  // checked lazily by validate(); construction only checks shapes.
  SupLattice(std::vector<std::string> elements, std::vector<std::vector<bool>> leq);

  // Builds the order from an explicit list of (lower, upper) pairs, closed
  // reflexively and transitively.
  static SupLattice from_pairs(std::vector<std::string> elements,
                               const std::vector<std::pair<std::string, std::string>>& pairs);

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& name(int e) const { return elements_.at(static_cast<std::size_t>(e)); }
  int index(const std::string& name) const;        // throws Error on unknown id
  int find(const std::string& name) const;         // -1 on unknown id

  bool leq(int x, int y) const;

  // Least upper bound of a subset; join of the empty set is bottom.
  // Throws Error if an element is out of range.
  int join(const std::vector<int>& subset) const;
  int meet(const std::vector<int>& subset) const;
  int bottom() const { return join({}); }
  int top() const { return meet({}); }

  // Checks that `leq` is a partial order and that every pair (hence every
  // finite subset) has a least upper bound and a greatest lower bound.
  Report validate() const;

  bool operator==(const SupLattice& other) const = default;

 private:
  std::vector<std::string> elements_;
  std::vector<std::vector<bool>> leq_;
  std::unordered_map<std::string, int> index_;

  void rebuild_index();
};

}  // namespace qsheaf
