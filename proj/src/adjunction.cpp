#include "qsheaf/adjunction.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace qsheaf {

namespace {

// Flattened element offsets: sigma(F) lists fiber elements object by object.
std::vector<int> fiber_offsets(const Presheaf& F) {
  std::vector<int> off(F.fibers.size() + 1, 0);
  for (std::size_t x = 0; x < F.fibers.size(); ++x)
    off[x + 1] = off[x] + static_cast<int>(F.fibers[x].size());
  return off;
}

}  // namespace

QCategory sigma_construct(const Presheaf& F) {
  Report r = validate_presheaf(F);
  if (!r.ok()) throw Error("sigma_construct: invalid presheaf:\n" + r.str());
  const Quantaloid& Q = *F.site.Q;
  QCategory A;
  A.Q = F.site.Q;
  for (std::size_t x = 0; x < F.fibers.size(); ++x)
    for (const std::string& e : F.fibers[x].elems) {
      A.base.elems.push_back(e);
      A.base.typ.push_back(static_cast<int>(x));
    }
  const std::vector<int> off = fiber_offsets(F);
  const std::size_t n = A.size();
  A.M.assign(n, std::vector<int>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const int ta = A.typ(static_cast<int>(a));
      const int tb = A.typ(static_cast<int>(b));
      const int ea = static_cast<int>(a) - off[static_cast<std::size_t>(ta)];
      const int eb = static_cast<int>(b) - off[static_cast<std::size_t>(tb)];
      std::vector<int> parts;
      for (std::size_t c = 0; c < F.site.cells.size(); ++c) {
        const MapCell& g = F.site.cells[c];
        if (g.src != tb || g.dst != ta) continue;
        const int restricted = F.act(static_cast<int>(c), ea);
        if (F.fiber(tb).leq[static_cast<std::size_t>(eb)][static_cast<std::size_t>(restricted)])
          parts.push_back(g.forward);
      }
      A.M[a][b] = Q.hom(tb, ta).join(parts);
    }
  return A;
}

QFunctor sigma_on_morphism(const OplaxTransform& alpha) {
  QFunctor f;
  f.dom = sigma_construct(alpha.dom);
  f.cod = sigma_construct(alpha.cod);
  const std::vector<int> off_cod = fiber_offsets(alpha.cod);
  f.on_obj.reserve(f.dom.size());
  for (std::size_t x = 0; x < alpha.components.size(); ++x)
    for (std::size_t e = 0; e < alpha.components[x].size(); ++e)
      f.on_obj.push_back(off_cod[x] + alpha.components[x][e]);
  return f;
}

int action_element(const QCategory& A, int a, const MapCell& g) {
  const Quantaloid& Q = *A.Q;
  if (g.dst != A.typ(a)) throw Error("action_element: map does not land in the element's type");
  std::vector<int> col(A.size());
  for (std::size_t b = 0; b < A.size(); ++b)
    col[b] = Q.compose(A.hom(static_cast<int>(b), a), g.forward_cell()).elt;
  for (std::size_t x = 0; x < A.size(); ++x)
    if (A.typ(static_cast<int>(x)) == g.src && A.column(static_cast<int>(x)) == col)
      return static_cast<int>(x);
  throw Error("action_element: the singleton M(-," + A.elem(a) + ")." +
              Q.hom(g.src, g.dst).name(g.forward) + " has no representative (category not complete)");
}

namespace {

// Isomorphism classes a ~ b: id <= M(b,a) and id <= M(a,b); class
// representative is the least element identifier.
std::vector<int> iso_representative(const QCategory& A) {
  const Quantaloid& Q = *A.Q;
  std::vector<int> rep(A.size());
  std::iota(rep.begin(), rep.end(), 0);
  for (std::size_t a = 0; a < A.size(); ++a)
    for (std::size_t b = 0; b < A.size(); ++b) {
      const int ai = static_cast<int>(a), bi = static_cast<int>(b);
      if (A.typ(ai) != A.typ(bi)) continue;
      if (Q.leq(Q.identity(A.typ(ai)), A.hom(bi, ai)) && Q.leq(Q.identity(A.typ(ai)), A.hom(ai, bi)) &&
          A.elem(rep[a]) > A.elem(bi))
        rep[a] = bi;
    }
  // One more pass settles chains created by the pairwise scan.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < A.size(); ++a)
      if (rep[a] != rep[static_cast<std::size_t>(rep[a])]) {
        rep[a] = rep[static_cast<std::size_t>(rep[a])];
        changed = true;
      }
  }
  return rep;
}

}  // namespace

Presheaf fibers(const QCategory& A, bool symmetric) {
  const Quantaloid& Q = *A.Q;
  Presheaf P;
  P.site = make_map_site(A.Q, symmetric);

  std::vector<int> rep = iso_representative(A);
  // fiber element -> A element, per object, sorted by identifier
  std::vector<std::vector<int>> members(Q.object_count());
  for (std::size_t a = 0; a < A.size(); ++a) {
    if (symmetric && rep[a] != static_cast<int>(a)) continue;
    members[static_cast<std::size_t>(A.typ(static_cast<int>(a)))].push_back(static_cast<int>(a));
  }
  for (auto& ms : members)
    std::sort(ms.begin(), ms.end(), [&](int x, int y) { return A.elem(x) < A.elem(y); });

  P.fibers.resize(Q.object_count());
  for (std::size_t x = 0; x < Q.object_count(); ++x) {
    Fiber& f = P.fibers[x];
    for (int a : members[x]) f.elems.push_back(A.elem(a));
    const std::size_t m = members[x].size();
    f.leq.assign(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        f.leq[i][j] = symmetric ? (i == j)
                                : Q.leq(Q.identity(static_cast<int>(x)),
                                        A.hom(members[x][j], members[x][i]));
  }

  P.action.resize(P.site.cells.size());
  for (std::size_t c = 0; c < P.site.cells.size(); ++c) {
    const MapCell& g = P.site.cells[c];
    const auto& from = members[static_cast<std::size_t>(g.dst)];
    P.action[c].resize(from.size());
    for (std::size_t e = 0; e < from.size(); ++e) {
      const int moved = rep[static_cast<std::size_t>(action_element(A, from[e], g))];
      const auto& to = members[static_cast<std::size_t>(g.src)];
      const auto it = std::find(to.begin(), to.end(), moved);
      if (it == to.end()) throw Error("fibers: representative bookkeeping failed");
      P.action[c][e] = static_cast<int>(it - to.begin());
    }
  }
  return P;
}

OplaxTransform phi(const Presheaf& F, const QFunctor& g, bool symmetric) {
  const Presheaf PA = fibers(g.cod, symmetric);
  const std::vector<int> off = fiber_offsets(F);
  std::vector<int> rep = iso_representative(g.cod);
  OplaxTransform t{F, PA, {}};
  t.components.resize(F.fibers.size());
  for (std::size_t x = 0; x < F.fibers.size(); ++x) {
    t.components[x].resize(F.fibers[x].size());
    for (std::size_t e = 0; e < F.fibers[x].size(); ++e) {
      int image = g(off[x] + static_cast<int>(e));
      if (symmetric) image = rep[static_cast<std::size_t>(image)];
      const std::string& name = g.cod.elem(image);
      const auto& elems = PA.fibers[x].elems;
      const auto it = std::find(elems.begin(), elems.end(), name);
      if (it == elems.end()) throw Error("phi: image element missing from the fiber presheaf");
      t.components[x][e] = static_cast<int>(it - elems.begin());
    }
  }
  return t;
}

QFunctor gamma(const Presheaf& F, const QCategory& A, const OplaxTransform& alpha) {
  QFunctor g;
  g.dom = sigma_construct(F);
  g.cod = A;
  for (std::size_t x = 0; x < F.fibers.size(); ++x)
    for (std::size_t e = 0; e < F.fibers[x].size(); ++e) {
      const std::string& name =
          alpha.cod.fibers[x].elems[static_cast<std::size_t>(alpha.components[x][e])];
      g.on_obj.push_back(A.base.index(name));
    }
  return g;
}

bool is_covering_family(const Quantaloid& Q, int q, const std::vector<MapCell>& family) {
  std::vector<int> parts;
  for (const MapCell& m : family) {
    if (m.dst != q) throw Error("is_covering_family: family member does not land in the object");
    parts.push_back(Q.compose(m.forward_cell(), m.adjoint_cell()).elt);
  }
  return Q.leq(Q.identity(q), Q.join(q, q, parts));
}

namespace {

// Bron-Kerbosch over the pairwise-compatibility graph; emits maximal cliques.
void maximal_cliques(const std::vector<std::vector<bool>>& adj, std::vector<int>& R, std::vector<int> P,
                     std::vector<int> X, const std::function<void(const std::vector<int>&)>& emit) {
  if (P.empty() && X.empty()) {
    emit(R);
    return;
  }
  const int pivot = P.empty() ? X.front() : P.front();
  std::vector<int> candidates;
  for (int v : P)
    if (!adj[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(v)]) candidates.push_back(v);
  for (int v : candidates) {
    std::vector<int> P2, X2;
    for (int u : P)
      if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) P2.push_back(u);
    for (int u : X)
      if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) X2.push_back(u);
    R.push_back(v);
    maximal_cliques(adj, R, std::move(P2), std::move(X2), emit);
    R.pop_back();
    P.erase(std::find(P.begin(), P.end(), v));
    X.push_back(v);
  }
}

}  // namespace

Report check_fixed_presheaf(const Presheaf& F) {
  Report report;
  if (!F.site.symmetric) {
    report.add("check-fixed: presheaf must live over the symmetric map site");
    return report;
  }
  const Quantaloid& Q = *F.site.Q;
  const QCategory sigmaF = sigma_construct(F);
  const QCategory S = symmetrize_free(sigmaF);
  const std::vector<int> off = fiber_offsets(F);

  // Local representability of every symmetric singleton.
  for (std::size_t t = 0; t < Q.object_count(); ++t) {
    const int ti = static_cast<int>(t);
    for (const Singleton& s : enumerate_singletons(S, ti, true)) {
      std::vector<MapCell> witnesses;
      for (std::size_t x = 0; x < S.size(); ++x) {
        const int xi = static_cast<int>(x);
        for (const MapCell& f : F.site.cells) {
          if (f.src != S.typ(xi) || f.dst != ti) continue;
          bool matches = true;
          for (std::size_t a = 0; a < S.size() && matches; ++a)
            matches = Q.compose(s.base.at(static_cast<int>(a)), f.forward_cell()) ==
                      S.hom(static_cast<int>(a), xi);
          if (matches) witnesses.push_back(f);
        }
      }
      if (!is_covering_family(Q, ti, witnesses))
        report.add("check-fixed: a symmetric singleton of type " + Q.object_name(ti) +
                   " is not locally representable");
    }
  }

  // Unique glueing: separation plus existence over maximal compatible families.
  for (std::size_t qobj = 0; qobj < Q.object_count(); ++qobj) {
    const int qi = static_cast<int>(qobj);
    const Fiber& fq = F.fiber(qi);
    for (std::size_t x1 = 0; x1 < fq.size(); ++x1)
      for (std::size_t x2 = x1 + 1; x2 < fq.size(); ++x2) {
        std::vector<MapCell> agree;
        for (std::size_t c = 0; c < F.site.cells.size(); ++c) {
          const MapCell& f = F.site.cells[c];
          if (f.dst != qi) continue;
          if (F.act(static_cast<int>(c), static_cast<int>(x1)) ==
              F.act(static_cast<int>(c), static_cast<int>(x2)))
            agree.push_back(f);
        }
        if (is_covering_family(Q, qi, agree))
          report.add("check-fixed: elements '" + fq.elems[x1] + "' and '" + fq.elems[x2] + "' over " +
                     Q.object_name(qi) + " agree along a covering family (glueing not unique)");
      }

    // Vertices: (element of sigma F, symmetric map into qobj).
    struct Vertex {
      int elem;  // index into sigma F
      int cell;  // index into F.site.cells
    };
    std::vector<Vertex> verts;
    for (std::size_t c = 0; c < F.site.cells.size(); ++c) {
      const MapCell& f = F.site.cells[c];
      if (f.dst != qi) continue;
      for (std::size_t a = 0; a < S.size(); ++a) {
        const int ai = static_cast<int>(a);
        if (S.typ(ai) != f.src) continue;
        const Cell self = Q.compose(Q.involution(f.forward_cell()), f.forward_cell());
        if (!Q.leq(self, S.hom(ai, ai))) continue;
        verts.push_back({ai, static_cast<int>(c)});
      }
    }
    std::vector<std::vector<bool>> adj(verts.size(), std::vector<bool>(verts.size(), false));
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = 0; j < verts.size(); ++j) {
        if (i == j) continue;
        const MapCell& fi = F.site.cells[static_cast<std::size_t>(verts[i].cell)];
        const MapCell& fj = F.site.cells[static_cast<std::size_t>(verts[j].cell)];
        const Cell lhs = Q.compose(fi.adjoint_cell(), fj.forward_cell());
        adj[i][j] = Q.leq(lhs, S.hom(verts[i].elem, verts[j].elem));
      }
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = 0; j < verts.size(); ++j)
        if (i != j && (!adj[i][j] || !adj[j][i])) adj[i][j] = adj[j][i] = false;

    std::vector<int> R, P0(verts.size());
    std::iota(P0.begin(), P0.end(), 0);
    std::vector<std::string> failures;
    maximal_cliques(adj, R, P0, {}, [&](const std::vector<int>& clique) {
      std::vector<MapCell> family;
      for (int v : clique) family.push_back(F.site.cells[static_cast<std::size_t>(verts[static_cast<std::size_t>(v)].cell)]);
      if (!is_covering_family(Q, qi, family)) return;
      for (std::size_t x = 0; x < fq.size(); ++x) {
        bool glues = true;
        for (int v : clique) {
          const Vertex& vx = verts[static_cast<std::size_t>(v)];
          const int restricted = F.act(vx.cell, static_cast<int>(x));
          const int target = vx.elem - off[static_cast<std::size_t>(S.typ(vx.elem))];
          if (restricted != target) {
            glues = false;
            break;
          }
        }
        if (glues) return;
      }
      failures.push_back("check-fixed: a compatible covering family over " + Q.object_name(qi) +
                         " has no glueing");
    });
    for (const auto& msg : failures) report.add(msg);
  }
  return report;
}

bool check_fixed_category(const QCategory& A) {
  // Factorizations through spans of maps: a map forward into ta below
  // M(a,x), composed with a map adjoint out of tb below M(x,b). The adjoint
  // leg is what lets restriction witnesses point both ways.
  const Quantaloid& Q = *A.Q;
  const std::vector<MapCell> maps = Q.enumerate_maps(false);
  for (std::size_t a = 0; a < A.size(); ++a)
    for (std::size_t b = 0; b < A.size(); ++b) {
      const int ai = static_cast<int>(a), bi = static_cast<int>(b);
      std::vector<int> parts;
      for (std::size_t x = 0; x < A.size(); ++x) {
        const int xi = static_cast<int>(x);
        for (const MapCell& f : maps) {
          if (f.src != A.typ(xi) || f.dst != A.typ(ai)) continue;
          if (!Q.leq(f.forward_cell(), A.hom(ai, xi))) continue;
          for (const MapCell& g : maps) {
            if (g.src != A.typ(xi) || g.dst != A.typ(bi)) continue;
            if (!Q.leq(g.adjoint_cell(), A.hom(xi, bi))) continue;
            parts.push_back(Q.compose(f.forward_cell(), g.adjoint_cell()).elt);
          }
        }
      }
      if (Q.join(A.typ(bi), A.typ(ai), parts) != A.hom(ai, bi)) return false;
    }
  return true;
}

Presheaf sheafify_oracle(const Presheaf& F) {
  if (!F.site.symmetric) throw Error("sheafify_oracle: presheaf must live over the symmetric map site");
  const Quantaloid& Q = *F.site.Q;
  const std::size_t n = Q.object_count();

  // Opens ordered by the shared-name convention of from_topology.
  int total = -1;
  for (std::size_t t = 0; t < n && total < 0; ++t) {
    bool all = true;
    const SupLattice& H = Q.hom(static_cast<int>(t), static_cast<int>(t));
    for (std::size_t o = 0; o < n && all; ++o) all = H.find(Q.object_name(static_cast<int>(o))) >= 0;
    if (all) total = static_cast<int>(t);
  }
  if (total < 0) throw Error("sheafify_oracle: no total open; is this a from_topology quantaloid?");
  const SupLattice& opens = Q.hom(total, total);
  auto open_leq = [&](int a, int b) {
    return opens.leq(opens.index(Q.object_name(a)), opens.index(Q.object_name(b)));
  };

  // Join-irreducible opens stand in for points: minimal neighbourhoods.
  std::vector<int> irr;
  for (std::size_t v = 0; v < n; ++v) {
    const int vi = static_cast<int>(v);
    std::vector<int> strictly_below;
    for (std::size_t w = 0; w < n; ++w) {
      const int wi = static_cast<int>(w);
      if (wi != vi && open_leq(wi, vi)) strictly_below.push_back(opens.index(Q.object_name(wi)));
    }
    if (opens.join(strictly_below) != opens.index(Q.object_name(vi))) irr.push_back(vi);
  }

  // Stalk at an irreducible j is F(j); a section over V assigns an element
  // of each stalk below V, compatibly along restriction.
  auto site_cell = [&](int from, int to) {  // the map cell from -> to (from <= to)
    for (std::size_t c = 0; c < F.site.cells.size(); ++c)
      if (F.site.cells[c].src == from && F.site.cells[c].dst == to) return static_cast<int>(c);
    throw Error("sheafify_oracle: missing site cell between comparable opens");
  };

  std::vector<std::vector<std::vector<int>>> sections(n);  // [V] -> list of families over irr
  for (std::size_t v = 0; v < n; ++v) {
    const int vi = static_cast<int>(v);
    std::vector<int> local;  // irreducibles below V
    for (int j : irr)
      if (open_leq(j, vi)) local.push_back(j);
    std::vector<std::vector<int>> families{{}};
    for (std::size_t k = 0; k < local.size(); ++k) {
      std::vector<std::vector<int>> grown;
      for (const auto& fam : families)
        for (std::size_t e = 0; e < F.fiber(local[k]).size(); ++e) {
          bool consistent = true;
          for (std::size_t k2 = 0; k2 < k && consistent; ++k2) {
            if (open_leq(local[k2], local[k])) {
              consistent = F.act(site_cell(local[k2], local[k]), static_cast<int>(e)) == fam[k2];
            } else if (open_leq(local[k], local[k2])) {
              consistent =
                  F.act(site_cell(local[k], local[k2]), fam[k2]) == static_cast<int>(e);
            }
          }
          if (!consistent) continue;
          auto bigger = fam;
          bigger.push_back(static_cast<int>(e));
          grown.push_back(std::move(bigger));
        }
      families = std::move(grown);
    }
    std::sort(families.begin(), families.end());
    sections[v] = std::move(families);
  }

  Presheaf out;
  out.site = F.site;
  out.fibers.resize(n);
  std::map<int, std::vector<int>> local_irr;
  for (std::size_t v = 0; v < n; ++v) {
    const int vi = static_cast<int>(v);
    for (int j : irr)
      if (open_leq(j, vi)) local_irr[vi].push_back(j);
    std::vector<std::string> names;
    for (const auto& fam : sections[v]) {
      std::string name = "sec" + Q.object_name(vi) + "(";
      for (std::size_t k = 0; k < fam.size(); ++k) {
        if (k) name += ",";
        name += Q.object_name(local_irr[vi][k]) + "=" +
                F.fiber(local_irr[vi][k]).elems[static_cast<std::size_t>(fam[k])];
      }
      name += ")";
      names.push_back(std::move(name));
    }
    out.fibers[v] = Fiber::discrete(std::move(names));
  }
  out.action.resize(F.site.cells.size());
  for (std::size_t c = 0; c < F.site.cells.size(); ++c) {
    const MapCell& g = F.site.cells[c];
    out.action[c].resize(sections[static_cast<std::size_t>(g.dst)].size());
    for (std::size_t e = 0; e < sections[static_cast<std::size_t>(g.dst)].size(); ++e) {
      const auto& fam = sections[static_cast<std::size_t>(g.dst)][e];
      std::vector<int> restricted;
      const auto& from_irr = local_irr[g.dst];
      for (int j : local_irr[g.src]) {
        const auto it = std::find(from_irr.begin(), from_irr.end(), j);
        restricted.push_back(fam[static_cast<std::size_t>(it - from_irr.begin())]);
      }
      const auto& fams = sections[static_cast<std::size_t>(g.src)];
      const auto it = std::find(fams.begin(), fams.end(), restricted);
      if (it == fams.end()) throw Error("sheafify_oracle: restriction of a section is not a section");
      out.action[c][e] = static_cast<int>(it - fams.begin());
    }
  }
  return out;
}

Presheaf roundtrip(const Presheaf& F) {
  const QCategory S = symmetrize_free(sigma_construct(F));
  const Completion C = complete(S, true);
  return fibers(C.category, true);
}

bool presheaf_isomorphic(const Presheaf& F, const Presheaf& G) {
  if (!(F.site == G.site)) return false;
  const std::size_t n = F.fibers.size();
  for (std::size_t x = 0; x < n; ++x)
    if (F.fibers[x].size() != G.fibers[x].size()) return false;

  // Assign fibers smallest-first; verify the full commutation at the end.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return F.fiber(a).size() < F.fiber(b).size(); });

  std::vector<std::vector<int>> bij(n);
  std::function<bool(std::size_t)> search = [&](std::size_t pos) -> bool {
    if (pos == n) {
      for (std::size_t c = 0; c < F.site.cells.size(); ++c) {
        const MapCell& cell = F.site.cells[c];
        for (std::size_t e = 0; e < F.fiber(cell.dst).size(); ++e)
          if (bij[static_cast<std::size_t>(cell.src)]
                 [static_cast<std::size_t>(F.act(static_cast<int>(c), static_cast<int>(e)))] !=
              G.act(static_cast<int>(c), bij[static_cast<std::size_t>(cell.dst)][e]))
            return false;
      }
      return true;
    }
    const int x = order[pos];
    const Fiber& f = F.fiber(x);
    const Fiber& g = G.fiber(x);
    const std::size_t m = f.size();
    std::vector<int> perm(m, -1);
    std::vector<bool> used(m, false);
    std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
      if (i == m) {
        bij[static_cast<std::size_t>(x)] = perm;
        if (search(pos + 1)) return true;
        bij[static_cast<std::size_t>(x)].clear();
        return false;
      }
      for (std::size_t cand = 0; cand < m; ++cand) {
        if (used[cand]) continue;
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j)
          ok = (f.leq[i][j] == g.leq[cand][static_cast<std::size_t>(perm[j])]) &&
               (f.leq[j][i] == g.leq[static_cast<std::size_t>(perm[j])][cand]);
        // actions between this fiber and already-assigned ones
        for (std::size_t c = 0; c < F.site.cells.size() && ok; ++c) {
          const MapCell& cell = F.site.cells[c];
          if (cell.dst != x || cell.src == x) continue;
          if (bij[static_cast<std::size_t>(cell.src)].empty()) continue;
          ok = bij[static_cast<std::size_t>(cell.src)]
                  [static_cast<std::size_t>(F.act(static_cast<int>(c), static_cast<int>(i)))] ==
               G.act(static_cast<int>(c), static_cast<int>(cand));
        }
        if (!ok) continue;
        perm[i] = static_cast<int>(cand);
        used[cand] = true;
        if (place(i + 1)) return true;
        used[cand] = false;
        perm[i] = -1;
      }
      return false;
    };
    return place(0);
  };
  return search(0);
}

bool qcat_isomorphic(const QCategory& A, const QCategory& B) {
  if (!(*A.Q == *B.Q) || A.size() != B.size()) return false;
  const std::size_t n = A.size();
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t cand = 0; cand < n; ++cand) {
      if (used[cand]) continue;
      if (B.typ(static_cast<int>(cand)) != A.typ(static_cast<int>(i))) continue;
      bool ok = A.M[i][i] == B.M[cand][cand];
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = A.M[i][j] == B.M[cand][static_cast<std::size_t>(perm[j])] &&
             A.M[j][i] == B.M[static_cast<std::size_t>(perm[j])][cand];
      if (!ok) continue;
      perm[i] = static_cast<int>(cand);
      used[cand] = true;
      if (place(i + 1)) return true;
      used[cand] = false;
      perm[i] = -1;
    }
    return false;
  };
  return place(0);
}

std::vector<QFunctor> enumerate_qfunctors(const QCategory& dom, const QCategory& cod) {
  std::vector<QFunctor> out;
  const std::size_t n = dom.size();
  std::vector<int> image(n, -1);
  std::function<void(std::size_t)> place = [&](std::size_t a) {
    if (a == n) {
      out.push_back(QFunctor{dom, cod, image});
      return;
    }
    for (std::size_t x = 0; x < cod.size(); ++x) {
      if (cod.typ(static_cast<int>(x)) != dom.typ(static_cast<int>(a))) continue;
      bool ok = true;
      for (std::size_t b = 0; b <= a && ok; ++b) {
        if (static_cast<int>(b) < static_cast<int>(a) && image[b] < 0) continue;
        const int xb = (b == a) ? static_cast<int>(x) : image[b];
        ok = dom.Q->leq(dom.hom(static_cast<int>(a), static_cast<int>(b)),
                        cod.hom(static_cast<int>(x), xb)) &&
             dom.Q->leq(dom.hom(static_cast<int>(b), static_cast<int>(a)),
                        cod.hom(xb, static_cast<int>(x)));
      }
      if (!ok) continue;
      image[a] = static_cast<int>(x);
      place(a + 1);
      image[a] = -1;
    }
  };
  place(0);
  return out;
}

std::vector<OplaxTransform> enumerate_oplax_transforms(const Presheaf& F, const Presheaf& G) {
  std::vector<OplaxTransform> out;
  if (!(F.site == G.site)) return out;
  OplaxTransform t{F, G, {}};
  t.components.resize(F.fibers.size());
  for (std::size_t x = 0; x < F.fibers.size(); ++x)
    t.components[x].assign(F.fibers[x].size(), -1);

  // Flatten all (object, element) slots, then assign with incremental checks.
  std::vector<std::pair<int, int>> slots;
  for (std::size_t x = 0; x < F.fibers.size(); ++x)
    for (std::size_t e = 0; e < F.fibers[x].size(); ++e)
      slots.emplace_back(static_cast<int>(x), static_cast<int>(e));

  auto assigned = [&](int x, int e) {
    return t.components[static_cast<std::size_t>(x)][static_cast<std::size_t>(e)] >= 0;
  };
  std::function<void(std::size_t)> place = [&](std::size_t k) {
    if (k == slots.size()) {
      if (validate_oplax(t).ok()) out.push_back(t);
      return;
    }
    const auto [x, e] = slots[k];
    const Fiber& gx = G.fiber(x);
    const Fiber& fx = F.fiber(x);
    for (std::size_t cand = 0; cand < gx.size(); ++cand) {
      bool ok = true;
      // monotonicity against earlier slots of the same fiber
      for (int e2 = 0; e2 < e && ok; ++e2) {
        const int img2 = t.components[static_cast<std::size_t>(x)][static_cast<std::size_t>(e2)];
        if (fx.leq[static_cast<std::size_t>(e)][static_cast<std::size_t>(e2)])
          ok = gx.leq[cand][static_cast<std::size_t>(img2)];
        if (ok && fx.leq[static_cast<std::size_t>(e2)][static_cast<std::size_t>(e)])
          ok = gx.leq[static_cast<std::size_t>(img2)][cand];
      }
      // oplax squares whose two slots are both decided by this assignment
      for (std::size_t c = 0; c < F.site.cells.size() && ok; ++c) {
        const MapCell& cell = F.site.cells[c];
        if (cell.src == x) {
          for (std::size_t a = 0; a < F.fiber(cell.dst).size() && ok; ++a) {
            if (F.act(static_cast<int>(c), static_cast<int>(a)) != e) continue;
            if (cell.dst == x && static_cast<int>(a) == e) {
              ok = G.fiber(x).leq[cand][static_cast<std::size_t>(G.act(static_cast<int>(c),
                                                                       static_cast<int>(cand)))];
            } else if (assigned(cell.dst, static_cast<int>(a))) {
              const int av = t.components[static_cast<std::size_t>(cell.dst)][a];
              ok = G.fiber(x).leq[cand][static_cast<std::size_t>(G.act(static_cast<int>(c), av))];
            }
          }
        }
        if (ok && cell.dst == x) {
          const int fe = F.act(static_cast<int>(c), e);
          if (!(cell.src == x && fe == e) && assigned(cell.src, fe)) {
            const int lhs = t.components[static_cast<std::size_t>(cell.src)][static_cast<std::size_t>(fe)];
            ok = G.fiber(cell.src)
                     .leq[static_cast<std::size_t>(lhs)]
                         [static_cast<std::size_t>(G.act(static_cast<int>(c), static_cast<int>(cand)))];
          }
        }
      }
      if (!ok) continue;
      t.components[static_cast<std::size_t>(x)][static_cast<std::size_t>(e)] = static_cast<int>(cand);
      place(k + 1);
      t.components[static_cast<std::size_t>(x)][static_cast<std::size_t>(e)] = -1;
    }
  };
  place(0);
  return out;
}

}  // namespace qsheaf
