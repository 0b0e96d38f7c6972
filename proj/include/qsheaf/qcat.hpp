#pragma once

#include <string>
#include <vector>

#include "qsheaf/quantaloid.hpp"

namespace qsheaf {

// A typed set: element identifiers plus a typing function into the objects
// of an ambient quantaloid.
struct TypedSet {
  std::vector<std::string> elems;
  std::vector<int> typ;  // typ[i] is an object index

  std::size_t size() const { return elems.size(); }
  int index(const std::string& name) const;  // throws on unknown id
};

// A Q-category: a typed set with a hom matrix. M(a,b) lives in
// hom(typ b, typ a); reflexivity and idempotency are inequalities here, so
// all 2-cell coherence is decidable by validate_qcat.
struct QCategory {
  QuantaloidPtr Q;
  TypedSet base;
  std::vector<std::vector<int>> M;  // M[a][b], element of hom(typ b, typ a)

  std::size_t size() const { return base.size(); }
  int typ(int a) const { return base.typ[static_cast<std::size_t>(a)]; }
  const std::string& elem(int a) const { return base.elems[static_cast<std::size_t>(a)]; }
  Cell hom(int a, int b) const { return {typ(b), typ(a), M[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]}; }
  std::vector<int> column(int a) const;  // M(-,a) as a flat vector

  bool operator==(const QCategory&) const;
};

// A type-preserving function satisfying M(a,b) <= N(f a, f b).
struct QFunctor {
  QCategory dom;
  QCategory cod;
  std::vector<int> on_obj;

  int operator()(int a) const { return on_obj[static_cast<std::size_t>(a)]; }
};

Report validate_qcat(const QCategory& A);
Report validate_qfunctor(const QFunctor& f);
QFunctor identity_qfunctor(const QCategory& A);
QFunctor compose_qfunctors(const QFunctor& g, const QFunctor& f);

bool is_symmetric(const QCategory& A);
bool is_skeletal(const QCategory& A);

// Pointwise M(a,b) /\ M(b,a)°: the largest symmetric matrix below M.
QCategory symmetrize_meet(const QCategory& A);

// The least symmetric valid matrix above M: closes M \/ M° \/ identities
// under binary composition until the matrices stabilize.
QCategory symmetrize_free(const QCategory& A);

// The one-element Q-category on an object, with the identity as hom.
QCategory unit_qcat(QuantaloidPtr Q, int obj);

// All 1-cells of Q typed by codomain; the hom from f to g (with a common
// domain) is the right extension of g along f, and bottom otherwise.
QCategory arrows_qcat(QuantaloidPtr Q);

}  // namespace qsheaf
