#include "qsheaf/lattice.hpp"

#include <algorithm>

namespace qsheaf {

SupLattice::SupLattice(std::vector<std::string> elements, std::vector<std::vector<bool>> leq)
    : elements_(std::move(elements)), leq_(std::move(leq)) {
  if (leq_.size() != elements_.size())
    throw Error("SupLattice: order matrix has " + std::to_string(leq_.size()) + " rows, expected " +
                std::to_string(elements_.size()));
  for (const auto& row : leq_)
    if (row.size() != elements_.size()) throw Error("SupLattice: ragged order matrix");
  rebuild_index();
}

SupLattice SupLattice::from_pairs(std::vector<std::string> elements,
                                  const std::vector<std::pair<std::string, std::string>>& pairs) {
  const std::size_t n = elements.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  std::unordered_map<std::string, int> idx;
  for (std::size_t i = 0; i < n; ++i) {
    if (!idx.emplace(elements[i], static_cast<int>(i)).second)
      throw Error("SupLattice: duplicate element '" + elements[i] + "'");
    leq[i][i] = true;
  }
  for (const auto& [lo, hi] : pairs) {
    auto a = idx.find(lo);
    auto b = idx.find(hi);
    if (a == idx.end()) throw Error("SupLattice: unknown element '" + lo + "'");
    if (b == idx.end()) throw Error("SupLattice: unknown element '" + hi + "'");
    leq[static_cast<std::size_t>(a->second)][static_cast<std::size_t>(b->second)] = true;
  }
  // transitive closure
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq[k][j]) leq[i][j] = true;
  return SupLattice(std::move(elements), std::move(leq));
}

void SupLattice::rebuild_index() {
  index_.clear();
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!index_.emplace(elements_[i], static_cast<int>(i)).second)
      throw Error("SupLattice: duplicate element '" + elements_[i] + "'");
  }
}

int SupLattice::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw Error("SupLattice: unknown element '" + name + "'");
  return it->second;
}

int SupLattice::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

bool SupLattice::leq(int x, int y) const {
  if (x < 0 || y < 0 || static_cast<std::size_t>(x) >= size() || static_cast<std::size_t>(y) >= size())
    throw Error("SupLattice: element index out of range");
  return leq_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
}

int SupLattice::join(const std::vector<int>& subset) const {
  for (int s : subset)
    if (s < 0 || static_cast<std::size_t>(s) >= size()) throw Error("SupLattice: join over unknown element");
  int best = -1;
  for (std::size_t z = 0; z < size(); ++z) {
    bool upper = true;
    for (int s : subset)
      if (!leq_[static_cast<std::size_t>(s)][z]) {
        upper = false;
        break;
      }
    if (!upper) continue;
    if (best < 0 || leq_[z][static_cast<std::size_t>(best)]) best = static_cast<int>(z);
  }
  if (best < 0) throw Error("SupLattice: subset has no upper bound");
  // `best` is minimal among upper bounds; least iff it is below all of them.
  for (std::size_t z = 0; z < size(); ++z) {
    bool upper = true;
    for (int s : subset)
      if (!leq_[static_cast<std::size_t>(s)][z]) {
        upper = false;
        break;
      }
    if (upper && !leq_[static_cast<std::size_t>(best)][z])
      throw Error("SupLattice: subset has no least upper bound");
  }
  return best;
}

int SupLattice::meet(const std::vector<int>& subset) const {
  for (int s : subset)
    if (s < 0 || static_cast<std::size_t>(s) >= size()) throw Error("SupLattice: meet over unknown element");
  int best = -1;
  for (std::size_t z = 0; z < size(); ++z) {
    bool lower = true;
    for (int s : subset)
      if (!leq_[z][static_cast<std::size_t>(s)]) {
        lower = false;
        break;
      }
    if (!lower) continue;
    if (best < 0 || leq_[static_cast<std::size_t>(best)][z]) best = static_cast<int>(z);
  }
  if (best < 0) throw Error("SupLattice: subset has no lower bound");
  for (std::size_t z = 0; z < size(); ++z) {
    bool lower = true;
    for (int s : subset)
      if (!leq_[z][static_cast<std::size_t>(s)]) {
        lower = false;
        break;
      }
    if (lower && !leq_[z][static_cast<std::size_t>(best)])
      throw Error("SupLattice: subset has no greatest lower bound");
  }
  return best;
}

Report SupLattice::validate() const {
  Report report;
  const std::size_t n = size();
  if (n == 0) {
    report.add("lattice: empty element list (no bottom/top)");
    return report;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!leq_[i][i]) report.add("lattice: order not reflexive at '" + elements_[i] + "'");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && leq_[i][j] && leq_[j][i])
        report.add("lattice: order not antisymmetric on '" + elements_[i] + "', '" + elements_[j] + "'");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (leq_[i][j])
        for (std::size_t k = 0; k < n; ++k)
          if (leq_[j][k] && !leq_[i][k])
            report.add("lattice: order not transitive via '" + elements_[j] + "'");
  if (!report.ok()) return report;

  // Pairwise joins/meets plus the empty ones give all finite joins/meets.
  auto probe = [&](const std::vector<int>& s, const char* what) {
    try {
      (void)(what[0] == 'j' ? join(s) : meet(s));
    } catch (const Error&) {
      std::string desc;
      for (int e : s) desc += " '" + name(e) + "'";
      report.add(std::string("lattice: missing ") + what + " of" + (s.empty() ? " {}" : desc));
    }
  };
  probe({}, "join");
  probe({}, "meet");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      probe({static_cast<int>(i), static_cast<int>(j)}, "join");
      probe({static_cast<int>(i), static_cast<int>(j)}, "meet");
    }
  return report;
}

}  // namespace qsheaf
