#include "qsheaf/completion.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qsheaf {

bool Presingleton::operator==(const Presingleton& other) const {
  return target == other.target && type == other.type && sigma == other.sigma;
}

bool Singleton::operator==(const Singleton& other) const {
  return base == other.base && adjoint == other.adjoint;
}

Report validate_presingleton(const Presingleton& s) {
  Report report;
  const QCategory& A = s.target;
  const Quantaloid& Q = *A.Q;
  if (s.type < 0 || static_cast<std::size_t>(s.type) >= Q.object_count()) {
    report.add("presingleton: unknown type object");
    return report;
  }
  if (s.sigma.size() != A.size()) {
    report.add("presingleton: wrong number of components");
    return report;
  }
  for (std::size_t a = 0; a < A.size(); ++a) {
    const SupLattice& H = Q.hom(s.type, A.typ(static_cast<int>(a)));
    if (s.sigma[a] < 0 || static_cast<std::size_t>(s.sigma[a]) >= H.size()) {
      report.add("presingleton: component out of range at '" + A.elem(static_cast<int>(a)) + "'");
      return report;
    }
  }
  for (std::size_t a = 0; a < A.size(); ++a)
    for (std::size_t b = 0; b < A.size(); ++b) {
      const int ai = static_cast<int>(a), bi = static_cast<int>(b);
      if (!Q.leq(Q.compose(A.hom(ai, bi), s.at(bi)), s.at(ai)))
        report.add("presingleton: action fails at ('" + A.elem(ai) + "','" + A.elem(bi) + "')");
    }
  return report;
}

std::vector<int> right_adjoint_candidate(const Presingleton& s) {
  const QCategory& A = s.target;
  const Quantaloid& Q = *A.Q;
  std::vector<int> adj(A.size());
  for (std::size_t b = 0; b < A.size(); ++b) {
    const int bi = static_cast<int>(b);
    std::vector<int> parts;
    for (std::size_t a = 0; a < A.size(); ++a) {
      const int ai = static_cast<int>(a);
      parts.push_back(Q.residual_left(s.at(ai), A.hom(ai, bi)).elt);
    }
    adj[b] = Q.hom(A.typ(bi), s.type).meet(parts);
  }
  return adj;
}

namespace {

bool unit_holds(const Presingleton& s, const std::vector<int>& adj) {
  const QCategory& A = s.target;
  const Quantaloid& Q = *A.Q;
  std::vector<int> parts;
  for (std::size_t a = 0; a < A.size(); ++a) {
    const int ai = static_cast<int>(a);
    parts.push_back(Q.compose(Cell{A.typ(ai), s.type, adj[a]}, s.at(ai)).elt);
  }
  return Q.leq(Q.identity(s.type), Q.join(s.type, s.type, parts));
}

}  // namespace

bool is_singleton(const Presingleton& s) {
  if (!validate_presingleton(s).ok()) return false;
  return unit_holds(s, right_adjoint_candidate(s));
}

bool is_symmetric_singleton(const Presingleton& s) {
  if (!s.target.Q->has_involution()) return false;
  if (!validate_presingleton(s).ok()) return false;
  const std::vector<int> adj = right_adjoint_candidate(s);
  if (!unit_holds(s, adj)) return false;
  for (std::size_t a = 0; a < s.target.size(); ++a)
    if (s.target.Q->involution(s.at(static_cast<int>(a))).elt != adj[a]) return false;
  return true;
}

std::optional<Singleton> as_singleton(const Presingleton& s) {
  if (!validate_presingleton(s).ok()) return std::nullopt;
  std::vector<int> adj = right_adjoint_candidate(s);
  if (!unit_holds(s, adj)) return std::nullopt;
  return Singleton{s, std::move(adj)};
}

Singleton representable_singleton(const QCategory& A, int a) {
  Singleton s;
  s.base.target = A;
  s.base.type = A.typ(a);
  s.base.sigma = A.column(a);
  s.adjoint = A.M[static_cast<std::size_t>(a)];
  return s;
}

std::vector<Singleton> enumerate_singletons(const QCategory& A, int type, bool symmetric_only) {
  const Quantaloid& Q = *A.Q;
  const std::size_t n = A.size();

  // Galois connection between candidate sigma and tau families induced by
  // the counit relation sigma(a).tau(b) <= M(a,b). Singletons are exactly
  // the stable sigma whose canonical tau passes the unit, and the stable
  // sigma are the meets of the generators below.
  auto tau_of = [&](const std::vector<int>& sigma) {
    Presingleton s{A, type, sigma};
    return right_adjoint_candidate(s);
  };
  auto sigma_of = [&](const std::vector<int>& tau) {
    std::vector<int> sigma(n);
    for (std::size_t a = 0; a < n; ++a) {
      const int ai = static_cast<int>(a);
      std::vector<int> parts;
      for (std::size_t b = 0; b < n; ++b) {
        const int bi = static_cast<int>(b);
        parts.push_back(Q.residual_right(Cell{A.typ(bi), type, tau[b]}, A.hom(ai, bi)).elt);
      }
      sigma[a] = Q.hom(type, A.typ(ai)).meet(parts);
    }
    return sigma;
  };

  std::set<std::vector<int>> stable;
  {
    std::vector<int> all_top(n);
    for (std::size_t b = 0; b < n; ++b)
      all_top[b] = Q.hom(A.typ(static_cast<int>(b)), type).top();
    stable.insert(sigma_of(all_top));  // closure of the empty meet
  }
  std::vector<std::vector<int>> generators;
  for (std::size_t b = 0; b < n; ++b) {
    const int bi = static_cast<int>(b);
    const SupLattice& H = Q.hom(A.typ(bi), type);
    for (std::size_t w = 0; w < H.size(); ++w) {
      std::vector<int> tau(n);
      for (std::size_t b2 = 0; b2 < n; ++b2)
        tau[b2] = (b2 == b) ? static_cast<int>(w) : Q.hom(A.typ(static_cast<int>(b2)), type).bottom();
      generators.push_back(sigma_of(tau));
    }
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  std::vector<std::vector<int>> frontier(stable.begin(), stable.end());
  for (const auto& g : generators)
    if (stable.insert(g).second) frontier.push_back(g);
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& s : frontier)
      for (const auto& g : generators) {
        std::vector<int> met(n);
        for (std::size_t a = 0; a < n; ++a)
          met[a] = Q.hom(type, A.typ(static_cast<int>(a))).meet({s[a], g[a]});
        if (stable.insert(met).second) next.push_back(std::move(met));
      }
    frontier = std::move(next);
    if (stable.size() > 200000)
      throw Error("enumerate_singletons: stable-pair lattice exceeds the safety cap");
  }

  std::vector<Singleton> out;
  for (const auto& sigma : stable) {
    Presingleton s{A, type, sigma};
    std::vector<int> adj = tau_of(sigma);
    if (!unit_holds(s, adj)) continue;
    if (symmetric_only) {
      if (!Q.has_involution()) continue;
      bool sym = true;
      for (std::size_t a = 0; a < n && sym; ++a)
        sym = Q.involution(s.at(static_cast<int>(a))).elt == adj[a];
      if (!sym) continue;
    }
    out.push_back(Singleton{std::move(s), std::move(adj)});
  }
  std::sort(out.begin(), out.end(), [](const Singleton& x, const Singleton& y) {
    return x.base.sigma < y.base.sigma;
  });
  return out;
}

namespace {

// Reinterprets a shared-named element (an open of R(X)) in another hom.
int rename_into(const Quantaloid& Q, const Cell& c, int src, int dst) {
  const std::string& name = Q.hom(c.src, c.dst).name(c.elt);
  const int idx = Q.hom(src, dst).find(name);
  if (idx < 0)
    throw Error("singleton over R(X): open '" + name + "' is not a 1-cell " + Q.object_name(src) + " -> " +
                Q.object_name(dst) + "; is this a from_topology quantaloid?");
  return idx;
}

// The object whose endo-hom lists every open, i.e. the total set of R(X).
int total_object(const Quantaloid& Q) {
  for (std::size_t t = 0; t < Q.object_count(); ++t) {
    const SupLattice& H = Q.hom(static_cast<int>(t), static_cast<int>(t));
    bool all = true;
    for (std::size_t o = 0; o < Q.object_count() && all; ++o)
      all = H.find(Q.object_name(static_cast<int>(o))) >= 0;
    if (all) return static_cast<int>(t);
  }
  throw Error("singleton over R(X): no total open found; is this a from_topology quantaloid?");
}

}  // namespace

Presingleton restriction_singleton(const QCategory& A, int a, int V) {
  const Quantaloid& Q = *A.Q;
  const int total = total_object(Q);
  const SupLattice& all_opens = Q.hom(total, total);
  Presingleton s{A, V, std::vector<int>(A.size())};
  for (std::size_t b = 0; b < A.size(); ++b) {
    const int bi = static_cast<int>(b);
    const Cell mba = A.hom(bi, a);
    const int met = all_opens.meet(
        {all_opens.index(Q.hom(mba.src, mba.dst).name(mba.elt)), all_opens.index(Q.object_name(V))});
    s.sigma[b] = rename_into(Q, Cell{total, total, met}, V, A.typ(bi));
  }
  return s;
}

Presingleton glueing_singleton(const QCategory& A, const std::vector<int>& family, int V) {
  const Quantaloid& Q = *A.Q;
  Presingleton s{A, V, std::vector<int>(A.size())};
  for (std::size_t b = 0; b < A.size(); ++b) {
    const int bi = static_cast<int>(b);
    std::vector<int> parts;
    for (int ai : family) parts.push_back(rename_into(Q, A.hom(bi, ai), V, A.typ(bi)));
    s.sigma[b] = Q.hom(V, A.typ(bi)).join(parts);
  }
  return s;
}

std::vector<int> representing_elements(const Presingleton& s) {
  std::vector<int> out;
  for (std::size_t a = 0; a < s.target.size(); ++a) {
    const int ai = static_cast<int>(a);
    if (s.target.typ(ai) == s.type && s.target.column(ai) == s.sigma) out.push_back(ai);
  }
  return out;
}

namespace {

bool complete_impl(const QCategory& A, bool symmetric) {
  for (std::size_t t = 0; t < A.Q->object_count(); ++t)
    for (const Singleton& s : enumerate_singletons(A, static_cast<int>(t), symmetric))
      if (representing_elements(s.base).empty()) return false;
  return true;
}

}  // namespace

bool is_complete(const QCategory& A) { return complete_impl(A, false); }

bool is_symmetrically_complete(const QCategory& A) { return complete_impl(A, true); }

Completion complete(const QCategory& A, bool symmetric) {
  const Quantaloid& Q = *A.Q;
  Completion out;
  for (std::size_t t = 0; t < Q.object_count(); ++t)
    for (Singleton& s : enumerate_singletons(A, static_cast<int>(t), symmetric))
      out.objects.push_back(std::move(s));
  std::sort(out.objects.begin(), out.objects.end(), [](const Singleton& x, const Singleton& y) {
    return std::tie(x.base.type, x.base.sigma) < std::tie(y.base.type, y.base.sigma);
  });

  const std::size_t m = out.objects.size();
  out.category.Q = A.Q;
  int width = 1;
  for (std::size_t k = m; k >= 10; k /= 10) ++width;
  for (std::size_t i = 0; i < m; ++i) {
    std::string id = std::to_string(i);
    out.category.base.elems.push_back("k" + std::string(static_cast<std::size_t>(width) - id.size(), '0') +
                                      id);
    out.category.base.typ.push_back(out.objects[i].base.type);
  }
  out.category.M.assign(m, std::vector<int>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Singleton& si = out.objects[i];
      const Singleton& sj = out.objects[j];
      std::vector<int> parts;
      for (std::size_t a = 0; a < A.size(); ++a) {
        const int ai = static_cast<int>(a);
        parts.push_back(Q.compose(si.adj_at(ai), sj.base.at(ai)).elt);
      }
      out.category.M[i][j] = Q.hom(sj.base.type, si.base.type).join(parts);
    }

  out.yoneda.dom = A;
  out.yoneda.cod = out.category;
  out.yoneda.on_obj.resize(A.size(), -1);
  for (std::size_t a = 0; a < A.size(); ++a) {
    const std::vector<int> col = A.column(static_cast<int>(a));
    for (std::size_t i = 0; i < m; ++i)
      if (out.objects[i].base.type == A.typ(static_cast<int>(a)) && out.objects[i].base.sigma == col) {
        out.yoneda.on_obj[a] = static_cast<int>(i);
        break;
      }
    if (out.yoneda.on_obj[a] < 0)
      throw Error("complete: representable column of '" + A.elem(static_cast<int>(a)) +
                  "' missing from the singleton list");
  }
  return out;
}

Cell presingleton_hom(const Presingleton& s, const Presingleton& t) {
  const QCategory& A = s.target;
  const Quantaloid& Q = *A.Q;
  std::vector<int> parts;
  for (std::size_t a = 0; a < A.size(); ++a) {
    const int ai = static_cast<int>(a);
    parts.push_back(Q.residual_left(s.at(ai), t.at(ai)).elt);
  }
  if (parts.empty()) return Q.meet(t.type, s.type, {});
  return Q.meet(t.type, s.type, parts);
}

std::vector<Presingleton> enumerate_presingletons(const QCategory& A, int type) {
  const Quantaloid& Q = *A.Q;
  const std::size_t n = A.size();
  // Presingletons are the join-closure of the principal ones M(-,a).w.
  std::set<std::vector<int>> found;
  std::vector<int> bottom(n);
  for (std::size_t a = 0; a < n; ++a) bottom[a] = Q.hom(type, A.typ(static_cast<int>(a))).bottom();
  found.insert(bottom);
  std::vector<std::vector<int>> generators;
  for (std::size_t a = 0; a < n; ++a) {
    const int ai = static_cast<int>(a);
    const SupLattice& H = Q.hom(type, A.typ(ai));
    for (std::size_t w = 0; w < H.size(); ++w) {
      std::vector<int> sigma(n);
      for (std::size_t b = 0; b < n; ++b) {
        const int bi = static_cast<int>(b);
        sigma[b] = Q.compose(A.hom(bi, ai), Cell{type, A.typ(ai), static_cast<int>(w)}).elt;
      }
      generators.push_back(std::move(sigma));
    }
  }
  std::vector<std::vector<int>> frontier;
  for (const auto& g : generators)
    if (found.insert(g).second) frontier.push_back(g);
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& s : frontier)
      for (const auto& g : generators) {
        std::vector<int> joined(n);
        for (std::size_t a = 0; a < n; ++a)
          joined[a] = Q.hom(type, A.typ(static_cast<int>(a))).join({s[a], g[a]});
        if (found.insert(joined).second) next.push_back(std::move(joined));
      }
    frontier = std::move(next);
    if (found.size() > 100000)
      throw Error("enumerate_presingletons: presingleton lattice exceeds the safety cap");
  }
  std::vector<Presingleton> out;
  for (const auto& sigma : found) out.push_back(Presingleton{A, type, sigma});
  return out;
}

QCategory presingleton_qcat(const QCategory& A) {
  const Quantaloid& Q = *A.Q;
  std::vector<Presingleton> all;
  for (std::size_t t = 0; t < Q.object_count(); ++t)
    for (Presingleton& p : enumerate_presingletons(A, static_cast<int>(t))) all.push_back(std::move(p));
  std::sort(all.begin(), all.end(), [](const Presingleton& x, const Presingleton& y) {
    return std::tie(x.type, x.sigma) < std::tie(y.type, y.sigma);
  });
  QCategory out;
  out.Q = A.Q;
  const std::size_t m = all.size();
  int width = 1;
  for (std::size_t k = m; k >= 10; k /= 10) ++width;
  for (std::size_t i = 0; i < m; ++i) {
    std::string id = std::to_string(i);
    out.base.elems.push_back("p" + std::string(static_cast<std::size_t>(width) - id.size(), '0') + id);
    out.base.typ.push_back(all[i].type);
  }
  out.M.assign(m, std::vector<int>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out.M[i][j] = presingleton_hom(all[i], all[j]).elt;
  return out;
}

}  // namespace qsheaf
