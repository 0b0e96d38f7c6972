#pragma once

#include "qsheaf/qcat.hpp"

namespace qsheaf {

// A distributor phi: dom -> cod. phi(c,a) lives in hom(typ a, typ c); the
// double-action 2-cell is the single inequality checked by
// validate_distributor, so morphisms of distributors are just the pointwise
// order here.
struct Distributor {
  QCategory dom;
  QCategory cod;
  std::vector<std::vector<int>> phi;  // phi[c][a], element of hom(typ_dom a, typ_cod c)

  Cell at(int c, int a) const {
    return {dom.typ(a), cod.typ(c), phi[static_cast<std::size_t>(c)][static_cast<std::size_t>(a)]};
  }
  bool operator==(const Distributor&) const;
};

// left: A -> C and right: C -> A with M <= right.left and left.right <= N.
struct AdjointPair {
  Distributor left;
  Distributor right;
};

Report validate_distributor(const Distributor& phi);

// The structural matrix M as the identity distributor on A.
Distributor identity_distributor(const QCategory& A);

// (psi phi)(d,a) = join over c of psi(d,c) . phi(c,a).
Distributor compose_distributors(const Distributor& psi, const Distributor& phi);

// f_!(c,a) = N(c, f a) and f^!(a,c) = N(f a, c).
Distributor representable_lower(const QFunctor& f);
Distributor representable_upper(const QFunctor& f);

// phi°(a,c) = involution(phi(c,a)), between symmetric Q-categories.
Distributor involute_distributor(const Distributor& phi);

bool leq_distributor(const Distributor& phi1, const Distributor& phi2);

// Unit/counit inequalities for phi: A -> C, psi: C -> A.
bool is_adjoint_pair(const Distributor& phi, const Distributor& psi);

}  // namespace qsheaf
