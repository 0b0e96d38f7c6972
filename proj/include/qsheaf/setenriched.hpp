#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "qsheaf/common.hpp"

namespace qsheaf {

// A finite category given by explicit tables. Arrows carry src/dst; comp[g][f]
// is g after f (valid when dst(f) == src(g), -1 otherwise).
struct FinCategory {
  std::vector<std::string> objects;
  std::vector<std::string> arrow_names;
  std::vector<int> src, dst;
  std::vector<std::vector<int>> comp;
  std::vector<int> identity;  // per object

  std::size_t arrow_count() const { return arrow_names.size(); }
  int compose(int g, int f) const;  // throws if not composable
  std::vector<int> hom(int a, int b) const;
  bool is_idempotent(int e) const { return src[static_cast<std::size_t>(e)] == dst[static_cast<std::size_t>(e)] && comp[static_cast<std::size_t>(e)][static_cast<std::size_t>(e)] == e; }
  bool operator==(const FinCategory&) const = default;
};

Report validate_fincategory(const FinCategory& C);

struct FinFunctor {
  const FinCategory* dom = nullptr;
  const FinCategory* cod = nullptr;
  std::vector<int> on_obj;
  std::vector<int> on_arrow;

  bool operator==(const FinFunctor& o) const { return on_obj == o.on_obj && on_arrow == o.on_arrow; }
  auto operator<=>(const FinFunctor& o) const {
    return std::tie(on_obj, on_arrow) <=> std::tie(o.on_obj, o.on_arrow);
  }
};

Report validate_finfunctor(const FinFunctor& f);
std::vector<FinFunctor> enumerate_functors(const FinCategory& C, const FinCategory& D);

// A set-valued bimodule phi: A -> C. value[c][a] is a finite set of element
// names; arrows of C act on the left (post-composition side), arrows of A on
// the right.
struct Profunctor {
  const FinCategory* dom = nullptr;  // A
  const FinCategory* cod = nullptr;  // C
  std::vector<std::vector<std::vector<std::string>>> value;  // [c][a] -> elements
  // left_act[n][a]: value[src n][a] -> value[dst n][a], for n an arrow of C
  std::vector<std::vector<std::vector<int>>> left_act;
  // right_act[m][c]: value[c][dst m] -> value[c][src m], for m an arrow of A
  std::vector<std::vector<std::vector<int>>> right_act;
};

Report validate_profunctor(const Profunctor& p);

// The hom bimodule: value(c,a) = arrows a -> c, acting by composition.
Profunctor hom_profunctor(const FinCategory& C);

// Coend composite: disjoint sums of pairs quotiented by the zigzag relation
// (x.m, y) ~ (x, m.y), computed by union-find; class representatives are the
// least lexicographic members.
Profunctor compose_profunctors(const Profunctor& psi, const Profunctor& phi);

// Orbit count of the zigzag relation at (d,a), computed by breadth-first
// search over the explicit relation graph; the independent check against
// union-find composition.
std::size_t zigzag_orbit_count(const Profunctor& psi, const Profunctor& phi, int d, int a);

struct KaroubiEnvelope {
  FinCategory category;          // objects are the idempotents of C
  std::vector<int> object_of;    // envelope object -> idempotent arrow in C
  FinFunctor comparison;         // C -> envelope, a |-> id_a
};

KaroubiEnvelope karoubi_envelope(const FinCategory& C);

// All idempotents split.
bool is_cauchy_complete(const FinCategory& C);

// The Set backend has trivial typing, so the underlying category of a
// one-object-enriched category is the category itself; exposed for parity
// with the fiber functor at the unit object.
FinCategory underlying_category(const FinCategory& C);

// A left-adjoint set-valued module over C with one generator: the data found
// by the definitional search (right adjoint, unit, counit, triangles).
struct SetSingleton {
  std::vector<std::vector<std::string>> value;  // [object] -> elements
  std::vector<std::vector<int>> act;            // act[m]: value[src m] -> value[dst m]
  int generator_object = -1;
  int splitting_idempotent = -1;  // arrow of C

  bool operator==(const SetSingleton&) const = default;
};

// Exhaustive search for left-adjoint modules with value sets of size at most
// `bound`, up to isomorphism, via quotients of corepresentables paired with
// quotients of representables and checked against the triangle identities.
std::vector<SetSingleton> singleton_oracle(const FinCategory& C, int bound);

// Precomposition with the comparison functor C -> Kar(C) is a bijection
// between enumerated functor sets Kar(C) -> D and C -> D, for D complete.
bool free_and_underlying_adjunction_check(const FinCategory& C, const FinCategory& D);

}  // namespace qsheaf
