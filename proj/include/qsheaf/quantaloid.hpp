#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qsheaf/lattice.hpp"

namespace qsheaf {

// A 1-cell handle: an element of hom(src, dst), all by index.
struct Cell {
  int src = -1;
  int dst = -1;
  int elt = -1;

  bool operator==(const Cell&) const = default;
  auto operator<=>(const Cell&) const = default;
};

// A 1-cell with a right adjoint. `symmetric` means the adjoint is the
// involute of the forward cell.
struct MapCell {
  int src = -1;
  int dst = -1;
  int forward = -1;  // element of hom(src, dst)
  int adjoint = -1;  // element of hom(dst, src)
  bool symmetric = false;

  Cell forward_cell() const { return {src, dst, forward}; }
  Cell adjoint_cell() const { return {dst, src, adjoint}; }
  bool operator==(const MapCell&) const = default;
  auto operator<=>(const MapCell&) const = default;
};

// A finite quantaloid: objects, a hom lattice per object pair, sup-preserving
// composition tables, identities, and an optional involution. Compose, the
// residuals, and map enumeration all work by scanning the extensional tables.
// Values are immutable after construction.
class Quantaloid {
 public:
  Quantaloid() = default;
  Quantaloid(std::vector<std::string> objects, std::vector<SupLattice> homs,
             std::vector<std::vector<int>> compose_tables, std::vector<int> identities,
             std::optional<std::vector<std::vector<int>>> involution);

  std::size_t object_count() const { return objects_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::string& object_name(int x) const { return objects_.at(static_cast<std::size_t>(x)); }
  int object_index(const std::string& name) const;

  const SupLattice& hom(int src, int dst) const;
  bool has_involution() const { return involution_.has_value(); }

  Cell cell(const std::string& src, const std::string& dst, const std::string& elt) const;
  std::string cell_str(const Cell& c) const;

  // g in hom(y,z) composed with f in hom(x,y); throws on shape mismatch.
  Cell compose(const Cell& g, const Cell& f) const;
  Cell identity(int x) const;
  Cell involution(const Cell& c) const;

  bool leq(const Cell& a, const Cell& b) const;  // same hom only
  Cell join(int src, int dst, const std::vector<int>& elts) const;
  Cell meet(int src, int dst, const std::vector<int>& elts) const;
  Cell bottom(int src, int dst) const { return join(src, dst, {}); }

  // Largest h with h . f <= g, for f: x->y, g: x->z (extension along f).
  Cell residual_right(const Cell& f, const Cell& g) const;
  // Largest h with f . h <= g, for f: y->z, g: x->z (lifting along f).
  Cell residual_left(const Cell& f, const Cell& g) const;

  // All map cells, deterministically ordered by (src, dst, forward). With
  // `symmetric_only`, keeps those whose adjoint is the involute.
  std::vector<MapCell> enumerate_maps(bool symmetric_only = false) const;
  std::optional<MapCell> find_map(int src, int dst, int forward) const;

  // True iff every 1-cell is the join of the map forwards below it.
  bool is_map_dense() const;

  Report validate() const;

  bool operator==(const Quantaloid& other) const = default;

 private:
  std::vector<std::string> objects_;
  std::vector<SupLattice> homs_;                   // [src * n + dst]
  std::vector<std::vector<int>> compose_tables_;   // [(x*n+y)*n+z][g * |hom(x,y)| + f]
  std::vector<int> identities_;                    // [x] element of hom(x,x)
  std::optional<std::vector<std::vector<int>>> involution_;  // [src*n+dst][e]

  std::size_t hom_slot(int src, int dst) const;
  std::size_t triple_slot(int x, int y, int z) const;
  void check_cell(const Cell& c) const;
};

using QuantaloidPtr = std::shared_ptr<const Quantaloid>;

// Builds R(X) from a finite topology: objects are the named opens, hom(A,B)
// is the set of opens below A and B ordered by inclusion, composition is
// intersection, the identity on A is A, and the involution swaps direction.
// Opens are given as (name, point set); the family must contain the empty
// and total sets and be closed under union and intersection.
Quantaloid from_topology(const std::vector<std::pair<std::string, std::set<int>>>& opens);

// One-object delooping of a quantale. `leq_pairs` generate the element order;
// `tensor[g][f]` names g tensor f. Runs validate() and throws on failure.
Quantaloid from_quantale(const std::vector<std::string>& elements,
                         const std::vector<std::pair<std::string, std::string>>& leq_pairs,
                         const std::vector<std::vector<std::string>>& tensor, const std::string& unit,
                         bool with_involution = true);

// The one-object quantale {0, step, ..., cap, inf} with the order reversed
// (0 on top) and saturating addition: finite sums beyond cap become inf.
Quantaloid metric_quantale(int step, int cap);

}  // namespace qsheaf
