#include "qsheaf/qcat.hpp"

#include <algorithm>

namespace qsheaf {

int TypedSet::index(const std::string& name) const {
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (elems[i] == name) return static_cast<int>(i);
  throw Error("TypedSet: unknown element '" + name + "'");
}

std::vector<int> QCategory::column(int a) const {
  std::vector<int> col(size());
  for (std::size_t b = 0; b < size(); ++b) col[b] = M[b][static_cast<std::size_t>(a)];
  return col;
}

bool QCategory::operator==(const QCategory& other) const {
  return *Q == *other.Q && base.elems == other.base.elems && base.typ == other.base.typ && M == other.M;
}

Report validate_qcat(const QCategory& A) {
  Report report;
  if (!A.Q) {
    report.add("qcategory: no ambient quantaloid");
    return report;
  }
  const Quantaloid& Q = *A.Q;
  const std::size_t n = A.size();
  if (A.base.typ.size() != n) {
    report.add("qcategory: typing function has wrong length");
    return report;
  }
  {
    std::vector<std::string> sorted = A.base.elems;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      report.add("qcategory: duplicate element name");
  }
  for (std::size_t a = 0; a < n; ++a)
    if (A.typ(static_cast<int>(a)) < 0 ||
        static_cast<std::size_t>(A.typ(static_cast<int>(a))) >= Q.object_count()) {
      report.add("qcategory: element '" + A.elem(static_cast<int>(a)) + "' has an unknown type");
      return report;
    }
  if (A.M.size() != n) {
    report.add("qcategory: hom matrix has wrong shape");
    return report;
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (A.M[a].size() != n) {
      report.add("qcategory: hom matrix has wrong shape");
      return report;
    }
    for (std::size_t b = 0; b < n; ++b) {
      const SupLattice& H = Q.hom(A.typ(static_cast<int>(b)), A.typ(static_cast<int>(a)));
      if (A.M[a][b] < 0 || static_cast<std::size_t>(A.M[a][b]) >= H.size()) {
        report.add("qcategory: hom entry out of range at (" + A.elem(static_cast<int>(a)) + "," +
                   A.elem(static_cast<int>(b)) + ")");
        return report;
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    const int ai = static_cast<int>(a);
    if (!Q.leq(Q.identity(A.typ(ai)), A.hom(ai, ai)))
      report.add("qcategory: reflexivity fails at '" + A.elem(ai) + "'");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const int ai = static_cast<int>(a), bi = static_cast<int>(b), ci = static_cast<int>(c);
        if (!Q.leq(Q.compose(A.hom(ai, bi), A.hom(bi, ci)), A.hom(ai, ci)))
          report.add("qcategory: idempotency fails at ('" + A.elem(ai) + "','" + A.elem(bi) + "','" +
                     A.elem(ci) + "')");
      }
  return report;
}

Report validate_qfunctor(const QFunctor& f) {
  Report report;
  const std::size_t n = f.dom.size();
  if (f.on_obj.size() != n) {
    report.add("qfunctor: object map has wrong length");
    return report;
  }
  if (!(*f.dom.Q == *f.cod.Q)) report.add("qfunctor: domain and codomain live over different quantaloids");
  for (std::size_t a = 0; a < n; ++a) {
    const int fa = f.on_obj[a];
    if (fa < 0 || static_cast<std::size_t>(fa) >= f.cod.size()) {
      report.add("qfunctor: image out of range at '" + f.dom.elem(static_cast<int>(a)) + "'");
      return report;
    }
    if (f.cod.typ(fa) != f.dom.typ(static_cast<int>(a)))
      report.add("qfunctor: type not preserved at '" + f.dom.elem(static_cast<int>(a)) + "'");
  }
  if (!report.ok()) return report;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const int ai = static_cast<int>(a), bi = static_cast<int>(b);
      if (!f.dom.Q->leq(f.dom.hom(ai, bi), f.cod.hom(f(ai), f(bi))))
        report.add("qfunctor: hom inequality fails at ('" + f.dom.elem(ai) + "','" + f.dom.elem(bi) + "')");
    }
  return report;
}

QFunctor identity_qfunctor(const QCategory& A) {
  QFunctor f{A, A, {}};
  f.on_obj.resize(A.size());
  for (std::size_t a = 0; a < A.size(); ++a) f.on_obj[a] = static_cast<int>(a);
  return f;
}

QFunctor compose_qfunctors(const QFunctor& g, const QFunctor& f) {
  if (!(f.cod == g.dom)) throw Error("compose_qfunctors: shape mismatch");
  QFunctor gf{f.dom, g.cod, {}};
  gf.on_obj.resize(f.dom.size());
  for (std::size_t a = 0; a < f.dom.size(); ++a) gf.on_obj[a] = g(f(static_cast<int>(a)));
  return gf;
}

bool is_symmetric(const QCategory& A) {
  if (!A.Q->has_involution()) return false;
  for (std::size_t a = 0; a < A.size(); ++a)
    for (std::size_t b = 0; b < A.size(); ++b) {
      const int ai = static_cast<int>(a), bi = static_cast<int>(b);
      if (A.hom(ai, bi) != A.Q->involution(A.hom(bi, ai))) return false;
    }
  return true;
}

bool is_skeletal(const QCategory& A) {
  for (std::size_t a = 0; a < A.size(); ++a)
    for (std::size_t b = a + 1; b < A.size(); ++b) {
      const int ai = static_cast<int>(a), bi = static_cast<int>(b);
      if (A.typ(ai) == A.typ(bi) && A.column(ai) == A.column(bi)) return false;
    }
  return true;
}

QCategory symmetrize_meet(const QCategory& A) {
  if (!A.Q->has_involution()) throw Error("symmetrize_meet: quantaloid has no involution");
  QCategory out = A;
  for (std::size_t a = 0; a < A.size(); ++a)
    for (std::size_t b = 0; b < A.size(); ++b) {
      const int ai = static_cast<int>(a), bi = static_cast<int>(b);
      const Cell m = A.hom(ai, bi);
      const Cell mt = A.Q->involution(A.hom(bi, ai));
      out.M[a][b] = A.Q->meet(m.src, m.dst, {m.elt, mt.elt}).elt;
    }
  return out;
}

QCategory symmetrize_free(const QCategory& A) {
  if (!A.Q->has_involution()) throw Error("symmetrize_free: quantaloid has no involution");
  const Quantaloid& Q = *A.Q;
  QCategory out = A;
  const std::size_t n = A.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const int ai = static_cast<int>(a), bi = static_cast<int>(b);
      const Cell m = A.hom(ai, bi);
      const Cell mt = Q.involution(A.hom(bi, ai));
      int e = Q.join(m.src, m.dst, {m.elt, mt.elt}).elt;
      if (a == b) e = Q.join(m.src, m.dst, {e, Q.identity(A.typ(ai)).elt}).elt;
      out.M[a][b] = e;
    }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t c = 0; c < n; ++c) {
        const int ai = static_cast<int>(a), ci = static_cast<int>(c);
        std::vector<int> parts{out.M[a][c]};
        for (std::size_t b = 0; b < n; ++b)
          parts.push_back(Q.compose(out.hom(ai, static_cast<int>(b)), out.hom(static_cast<int>(b), ci)).elt);
        const int joined = Q.hom(out.typ(ci), out.typ(ai)).join(parts);
        if (joined != out.M[a][c]) {
          out.M[a][c] = joined;
          changed = true;
        }
      }
  }
  return out;
}

QCategory unit_qcat(QuantaloidPtr Q, int obj) {
  QCategory A;
  A.Q = std::move(Q);
  A.base.elems = {"*" + A.Q->object_name(obj)};
  A.base.typ = {obj};
  A.M = {{A.Q->identity(obj).elt}};
  return A;
}

QCategory arrows_qcat(QuantaloidPtr Q) {
  QCategory A;
  A.Q = std::move(Q);
  const Quantaloid& q = *A.Q;
  const int n = static_cast<int>(q.object_count());
  std::vector<Cell> cells;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (std::size_t e = 0; e < q.hom(x, y).size(); ++e) cells.push_back({x, y, static_cast<int>(e)});
  for (const Cell& c : cells) {
    A.base.elems.push_back(q.cell_str(c));
    A.base.typ.push_back(c.dst);  // typed by codomain
  }
  const std::size_t m = cells.size();
  A.M.assign(m, std::vector<int>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Cell& g = cells[i];
      const Cell& f = cells[j];
      A.M[i][j] = (f.src == g.src) ? q.residual_right(f, g).elt : q.bottom(f.dst, g.dst).elt;
    }
  return A;
}

}  // namespace qsheaf
