#pragma once

#include <optional>

#include "qsheaf/distributor.hpp"

namespace qsheaf {

// A distributor from a one-element unit Q-category into `target`:
// sigma[a] lives in hom(type, typ a) and satisfies M(a,b).sigma(b) <= sigma(a).
struct Presingleton {
  QCategory target;
  int type = -1;
  std::vector<int> sigma;

  Cell at(int a) const { return {type, target.typ(a), sigma[static_cast<std::size_t>(a)]}; }
  bool operator==(const Presingleton&) const;
};

// A presingleton with its (unique, canonical) right adjoint.
struct Singleton {
  Presingleton base;
  std::vector<int> adjoint;  // adjoint[a] in hom(typ a, type)

  Cell adj_at(int a) const {
    return {base.target.typ(a), base.type, adjoint[static_cast<std::size_t>(a)]};
  }
  bool operator==(const Singleton&) const;
};

Report validate_presingleton(const Presingleton& s);

// adjoint(b) := meet over a of residual_left(sigma(a), M(a,b)); the largest
// family satisfying the counit, hence the only possible right adjoint.
std::vector<int> right_adjoint_candidate(const Presingleton& s);

// sigma is a singleton iff the canonical candidate satisfies the unit
// id_type <= join over a of adjoint(a).sigma(a).
bool is_singleton(const Presingleton& s);
bool is_symmetric_singleton(const Presingleton& s);
std::optional<Singleton> as_singleton(const Presingleton& s);

// The representable column M(-,a) with its adjoint row M(a,-).
Singleton representable_singleton(const QCategory& A, int a);

// All singletons of A of the given type, duplicate-free, in a deterministic
// order. Every singleton is a Galois-stable pair for the counit relation
// sigma(a).tau(b) <= M(a,b), so the search enumerates the stable closures of
// a finite generating set instead of the full product of hom lattices.
std::vector<Singleton> enumerate_singletons(const QCategory& A, int type, bool symmetric_only = false);

// sigma(b) = V /\ M(b,a), a presingleton of type V. Requires a quantaloid
// whose hom elements are named by shared opens (as built by from_topology);
// V is given as an object of the quantaloid.
Presingleton restriction_singleton(const QCategory& A, int a, int V);

// sigma(b) = join over i of M(b, a_i), of type V; same R(X) convention.
Presingleton glueing_singleton(const QCategory& A, const std::vector<int>& family, int V);

// All elements whose column equals sigma (empty, one, or several when the
// category is not skeletal).
std::vector<int> representing_elements(const Presingleton& s);

bool is_complete(const QCategory& A);
bool is_symmetrically_complete(const QCategory& A);

struct Completion {
  QCategory category;   // objects are singletons; hom S(s,t) = join_a adj_s(a).sigma_t(a)
  QFunctor yoneda;      // a |-> M(-,a)
  std::vector<Singleton> objects;  // provenance annex, aligned with category elements
};

Completion complete(const QCategory& A, bool symmetric);

// The Q-category of all presingletons; hom P(s,t) is the largest f with
// sigma_s(a).f <= sigma_t(a) for all a. Exponential in principle; meant for
// the small fixtures.
QCategory presingleton_qcat(const QCategory& A);
std::vector<Presingleton> enumerate_presingletons(const QCategory& A, int type);

// hom of the presingleton category, directly from the residual formula.
Cell presingleton_hom(const Presingleton& s, const Presingleton& t);

}  // namespace qsheaf
