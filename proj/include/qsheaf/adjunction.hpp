#pragma once

#include "qsheaf/completion.hpp"
#include "qsheaf/presheaf.hpp"

namespace qsheaf {

// Grothendieck construction: elements are the disjoint union of the fibers,
// and N(a,b) is the join of the forwards of the site maps g: tb -> ta with
// b <= F(g)(a) in the fiber over tb.
QCategory sigma_construct(const Presheaf& F);

QFunctor sigma_on_morphism(const OplaxTransform& alpha);

// The element representing the singleton M(-,a).g; throws with a witness
// when no representative exists (the input is not complete enough).
int action_element(const QCategory& A, int a, const MapCell& g);

// The presheaf of fibers of a complete Q-category: elements of type x
// ordered by a <= b iff id_x <= M(b,a). The symmetric variant quotients by
// isomorphism, keeps least-identifier representatives, and uses the
// symmetric map site.
Presheaf fibers(const QCategory& A, bool symmetric);

// The two directions of the hom-set bijection. `g` goes sigma(F) -> A with A
// complete; `alpha` goes F -> fibers(A).
OplaxTransform phi(const Presheaf& F, const QFunctor& g, bool symmetric);
QFunctor gamma(const Presheaf& F, const QCategory& A, const OplaxTransform& alpha);

bool is_covering_family(const Quantaloid& Q, int q, const std::vector<MapCell>& family);

// The two sheaf-style conditions on symmetrize_free(sigma F): local
// representability of every symmetric singleton, and unique glueing of
// compatible covering families. Empty report = fixed point.
Report check_fixed_presheaf(const Presheaf& F);

// True iff every M(a,b) is the join of its map-forward factorizations
// f.g through elements x with f <= M(a,x) and g <= M(x,b).
bool check_fixed_category(const QCategory& A);

// Independent sheafification for presheaves over the symmetric site of a
// from_topology quantaloid: sections over V are compatible families of
// stalks over the join-irreducible opens below V.
Presheaf sheafify_oracle(const Presheaf& F);

// fibers(complete(symmetrize_free(sigma F), symmetric), symmetric).
Presheaf roundtrip(const Presheaf& F);

// Exact isomorphism: per-object fiber bijections preserving order both ways
// and commuting with every action map.
bool presheaf_isomorphic(const Presheaf& F, const Presheaf& G);

// Type-preserving bijection preserving the hom matrix on the nose.
bool qcat_isomorphic(const QCategory& A, const QCategory& B);

// Exhaustive hom-set enumerations used by the adjunction-bijection checks.
std::vector<QFunctor> enumerate_qfunctors(const QCategory& dom, const QCategory& cod);
std::vector<OplaxTransform> enumerate_oplax_transforms(const Presheaf& F, const Presheaf& G);

}  // namespace qsheaf
