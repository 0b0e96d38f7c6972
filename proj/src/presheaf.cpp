#include "qsheaf/presheaf.hpp"

#include <algorithm>
#include <set>

namespace qsheaf {

int MapSite::find_cell(int src, int dst, int forward) const {
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].src == src && cells[i].dst == dst && cells[i].forward == forward)
      return static_cast<int>(i);
  return -1;
}

int MapSite::identity_cell(int obj) const { return find_cell(obj, obj, Q->identity(obj).elt); }

int MapSite::compose_cells(int second, int first) const {
  const MapCell& g = cells[static_cast<std::size_t>(second)];
  const MapCell& f = cells[static_cast<std::size_t>(first)];
  if (f.dst != g.src) throw Error("MapSite: cells do not compose");
  const Cell fwd = Q->compose(g.forward_cell(), f.forward_cell());
  return find_cell(f.src, g.dst, fwd.elt);
}

Report MapSite::validate() const {
  Report report;
  if (!Q) {
    report.add("site: no ambient quantaloid");
    return report;
  }
  for (std::size_t o = 0; o < Q->object_count(); ++o)
    if (identity_cell(static_cast<int>(o)) < 0)
      report.add("site: missing identity cell on " + Q->object_name(static_cast<int>(o)));
  for (const MapCell& m : cells) {
    if (!Q->leq(Q->identity(m.src), Q->compose(m.adjoint_cell(), m.forward_cell())) ||
        !Q->leq(Q->compose(m.forward_cell(), m.adjoint_cell()), Q->identity(m.dst)))
      report.add("site: cell " + Q->cell_str(m.forward_cell()) + " is not a map");
    if (symmetric && (!Q->has_involution() || Q->involution(m.forward_cell()) != m.adjoint_cell()))
      report.add("site: cell " + Q->cell_str(m.forward_cell()) + " is not symmetric");
  }
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = 0; j < cells.size(); ++j)
      if (cells[j].dst == cells[i].src && compose_cells(static_cast<int>(i), static_cast<int>(j)) < 0)
        report.add("site: not closed under composition at " + Q->cell_str(cells[i].forward_cell()) +
                   " after " + Q->cell_str(cells[j].forward_cell()));
  return report;
}

bool MapSite::operator==(const MapSite& other) const {
  return *Q == *other.Q && symmetric == other.symmetric && cells == other.cells;
}

MapSite make_map_site(QuantaloidPtr Q, bool symmetric) {
  MapSite site;
  site.symmetric = symmetric;
  site.cells = Q->enumerate_maps(symmetric);
  site.Q = std::move(Q);
  return site;
}

Fiber Fiber::discrete(std::vector<std::string> elems) {
  Fiber f;
  const std::size_t n = elems.size();
  f.elems = std::move(elems);
  f.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) f.leq[i][i] = true;
  return f;
}

bool Fiber::is_discrete() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (leq[i][j] != (i == j)) return false;
  return true;
}

Report validate_presheaf(const Presheaf& F) {
  Report report;
  Report site_report = F.site.validate();
  for (auto& issue : site_report.issues) report.add(issue);
  if (!F.site.Q) return report;
  const Quantaloid& Q = *F.site.Q;
  if (F.fibers.size() != Q.object_count()) {
    report.add("presheaf: expected one fiber per object");
    return report;
  }
  std::set<std::string> names;
  for (std::size_t x = 0; x < F.fibers.size(); ++x) {
    const Fiber& f = F.fibers[x];
    if (f.leq.size() != f.size()) {
      report.add("presheaf: fiber order has wrong shape over " + Q.object_name(static_cast<int>(x)));
      return report;
    }
    for (const auto& row : f.leq)
      if (row.size() != f.size()) {
        report.add("presheaf: fiber order has wrong shape over " + Q.object_name(static_cast<int>(x)));
        return report;
      }
    for (const std::string& e : f.elems)
      if (!names.insert(e).second) report.add("presheaf: element name '" + e + "' is not globally unique");
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (!f.leq[i][i]) report.add("presheaf: fiber order not reflexive at '" + f.elems[i] + "'");
      for (std::size_t j = 0; j < f.size(); ++j) {
        if (i != j && f.leq[i][j] && f.leq[j][i])
          report.add("presheaf: fiber order not antisymmetric at '" + f.elems[i] + "'");
        if (f.leq[i][j])
          for (std::size_t k = 0; k < f.size(); ++k)
            if (f.leq[j][k] && !f.leq[i][k])
              report.add("presheaf: fiber order not transitive at '" + f.elems[i] + "'");
      }
    }
  }
  if (F.action.size() != F.site.cells.size()) {
    report.add("presheaf: expected one action per site cell");
    return report;
  }
  for (std::size_t c = 0; c < F.site.cells.size(); ++c) {
    const MapCell& m = F.site.cells[c];
    const Fiber& from = F.fiber(m.dst);
    const Fiber& to = F.fiber(m.src);
    if (F.action[c].size() != from.size()) {
      report.add("presheaf: action along " + Q.cell_str(m.forward_cell()) + " has wrong shape");
      return report;
    }
    for (int img : F.action[c])
      if (img < 0 || static_cast<std::size_t>(img) >= to.size()) {
        report.add("presheaf: action along " + Q.cell_str(m.forward_cell()) + " is out of range");
        return report;
      }
    for (std::size_t i = 0; i < from.size(); ++i)
      for (std::size_t j = 0; j < from.size(); ++j)
        if (from.leq[i][j] &&
            !to.leq[static_cast<std::size_t>(F.action[c][i])][static_cast<std::size_t>(F.action[c][j])])
          report.add("presheaf: action along " + Q.cell_str(m.forward_cell()) + " is not monotone");
  }
  if (!report.ok()) return report;

  for (std::size_t o = 0; o < Q.object_count(); ++o) {
    const int id_cell = F.site.identity_cell(static_cast<int>(o));
    if (id_cell < 0) continue;
    for (std::size_t e = 0; e < F.fiber(static_cast<int>(o)).size(); ++e)
      if (F.act(id_cell, static_cast<int>(e)) != static_cast<int>(e))
        report.add("presheaf: identity action is not the identity over " + Q.object_name(static_cast<int>(o)));
  }
  for (std::size_t i = 0; i < F.site.cells.size(); ++i)
    for (std::size_t j = 0; j < F.site.cells.size(); ++j) {
      // cells[j]: x -> y then cells[i]: y -> z; composite acts F(z) -> F(x).
      if (F.site.cells[j].dst != F.site.cells[i].src) continue;
      const int comp = F.site.compose_cells(static_cast<int>(i), static_cast<int>(j));
      if (comp < 0) continue;
      for (std::size_t e = 0; e < F.fiber(F.site.cells[i].dst).size(); ++e)
        if (F.act(comp, static_cast<int>(e)) !=
            F.act(static_cast<int>(j), F.act(static_cast<int>(i), static_cast<int>(e))))
          report.add("presheaf: action not functorial along " +
                     Q.cell_str(F.site.cells[i].forward_cell()) + " after " +
                     Q.cell_str(F.site.cells[j].forward_cell()));
    }
  // 2-cell contravariance on parallel cells.
  for (std::size_t i = 0; i < F.site.cells.size(); ++i)
    for (std::size_t j = 0; j < F.site.cells.size(); ++j) {
      const MapCell& g1 = F.site.cells[i];
      const MapCell& g2 = F.site.cells[j];
      if (g1.src != g2.src || g1.dst != g2.dst) continue;
      if (!Q.leq(g1.forward_cell(), g2.forward_cell())) continue;
      const Fiber& to = F.fiber(g1.src);
      for (std::size_t e = 0; e < F.fiber(g1.dst).size(); ++e)
        if (!to.leq[static_cast<std::size_t>(F.act(static_cast<int>(j), static_cast<int>(e)))]
                   [static_cast<std::size_t>(F.act(static_cast<int>(i), static_cast<int>(e)))])
          report.add("presheaf: 2-cell contravariance fails between " + Q.cell_str(g1.forward_cell()) +
                     " and " + Q.cell_str(g2.forward_cell()));
    }
  return report;
}

bool Presheaf::operator==(const Presheaf& other) const {
  if (!(site == other.site) || action != other.action) return false;
  if (fibers.size() != other.fibers.size()) return false;
  for (std::size_t i = 0; i < fibers.size(); ++i)
    if (fibers[i].elems != other.fibers[i].elems || fibers[i].leq != other.fibers[i].leq) return false;
  return true;
}

Report validate_oplax(const OplaxTransform& t) {
  Report report;
  if (!(t.dom.site == t.cod.site)) {
    report.add("oplax: domain and codomain live over different sites");
    return report;
  }
  const Quantaloid& Q = *t.dom.site.Q;
  if (t.components.size() != t.dom.fibers.size()) {
    report.add("oplax: expected one component per object");
    return report;
  }
  for (std::size_t x = 0; x < t.components.size(); ++x) {
    const Fiber& from = t.dom.fibers[x];
    const Fiber& to = t.cod.fibers[x];
    if (t.components[x].size() != from.size()) {
      report.add("oplax: component over " + Q.object_name(static_cast<int>(x)) + " has wrong shape");
      return report;
    }
    for (int img : t.components[x])
      if (img < 0 || static_cast<std::size_t>(img) >= to.size()) {
        report.add("oplax: component over " + Q.object_name(static_cast<int>(x)) + " is out of range");
        return report;
      }
    for (std::size_t i = 0; i < from.size(); ++i)
      for (std::size_t j = 0; j < from.size(); ++j)
        if (from.leq[i][j] && !to.leq[static_cast<std::size_t>(t.components[x][i])]
                                     [static_cast<std::size_t>(t.components[x][j])])
          report.add("oplax: component over " + Q.object_name(static_cast<int>(x)) + " is not monotone");
  }
  if (!report.ok()) return report;
  for (std::size_t c = 0; c < t.dom.site.cells.size(); ++c) {
    const MapCell& g = t.dom.site.cells[c];
    const Fiber& target = t.cod.fiber(g.src);
    for (std::size_t a = 0; a < t.dom.fiber(g.dst).size(); ++a) {
      const int lhs = t.components[static_cast<std::size_t>(g.src)]
                                  [static_cast<std::size_t>(t.dom.act(static_cast<int>(c), static_cast<int>(a)))];
      const int rhs = t.cod.act(static_cast<int>(c),
                                t.components[static_cast<std::size_t>(g.dst)][a]);
      if (!target.leq[static_cast<std::size_t>(lhs)][static_cast<std::size_t>(rhs)])
        report.add("oplax: square fails along " + Q.cell_str(g.forward_cell()) + " at '" +
                   t.dom.fiber(g.dst).elems[a] + "'");
    }
  }
  return report;
}

OplaxTransform identity_oplax(const Presheaf& F) {
  OplaxTransform t{F, F, {}};
  t.components.resize(F.fibers.size());
  for (std::size_t x = 0; x < F.fibers.size(); ++x) {
    t.components[x].resize(F.fibers[x].size());
    for (std::size_t e = 0; e < F.fibers[x].size(); ++e) t.components[x][e] = static_cast<int>(e);
  }
  return t;
}

OplaxTransform compose_oplax(const OplaxTransform& b, const OplaxTransform& a) {
  if (!(a.cod == b.dom)) throw Error("compose_oplax: shape mismatch");
  OplaxTransform t{a.dom, b.cod, {}};
  t.components.resize(a.components.size());
  for (std::size_t x = 0; x < a.components.size(); ++x) {
    t.components[x].resize(a.components[x].size());
    for (std::size_t e = 0; e < a.components[x].size(); ++e)
      t.components[x][e] =
          b.components[x][static_cast<std::size_t>(a.components[x][e])];
  }
  return t;
}

}  // namespace qsheaf
