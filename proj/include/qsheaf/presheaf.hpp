#pragma once

#include "qsheaf/qcat.hpp"

namespace qsheaf {

// The site of maps of Q: all of them, or only the symmetric ones.
struct MapSite {
  QuantaloidPtr Q;
  bool symmetric = false;
  std::vector<MapCell> cells;  // deterministic (src, dst, forward) order

  int find_cell(int src, int dst, int forward) const;  // -1 if absent
  int identity_cell(int obj) const;
  int compose_cells(int second, int first) const;  // indices into `cells`
  Report validate() const;                         // identities + closure under composition
  bool operator==(const MapSite&) const;
};

MapSite make_map_site(QuantaloidPtr Q, bool symmetric);

// A finite poset of fiber elements; discrete in the set-valued variant.
struct Fiber {
  std::vector<std::string> elems;
  std::vector<std::vector<bool>> leq;

  std::size_t size() const { return elems.size(); }
  static Fiber discrete(std::vector<std::string> elems);
  bool is_discrete() const;
};

// A contravariant pseudofunctor on the map site, restricted to what the
// posetal 2-structure can see: a fiber poset per object and a monotone
// action per map cell. Element names must be globally unique; they name the
// elements of the Grothendieck construction.
struct Presheaf {
  MapSite site;
  std::vector<Fiber> fibers;             // one per quantaloid object
  std::vector<std::vector<int>> action;  // action[cell][e in fiber(dst)] -> fiber(src)

  const Fiber& fiber(int obj) const { return fibers.at(static_cast<std::size_t>(obj)); }
  int act(int cell, int elem) const {
    return action[static_cast<std::size_t>(cell)][static_cast<std::size_t>(elem)];
  }
  bool operator==(const Presheaf&) const;
};

Report validate_presheaf(const Presheaf& F);

// Componentwise monotone maps F(x) -> G(x) with the oplax square
// component(F(g)(a)) <= G(g)(component(a)) for every map cell g.
struct OplaxTransform {
  Presheaf dom;
  Presheaf cod;
  std::vector<std::vector<int>> components;  // [obj][e in dom.fiber(obj)]
};

Report validate_oplax(const OplaxTransform& t);
OplaxTransform identity_oplax(const Presheaf& F);
OplaxTransform compose_oplax(const OplaxTransform& b, const OplaxTransform& a);

}  // namespace qsheaf
