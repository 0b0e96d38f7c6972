#pragma once

#include "qsheaf/quantaloid.hpp"

// Definition-level checkers, independent of the scan-based implementations:
// they verify a claimed value against the raw order relation.
namespace qsheaf::oracle {

inline bool is_least_upper_bound(const SupLattice& L, const std::vector<int>& subset, int j) {
  for (int s : subset)
    if (!L.leq(s, j)) return false;
  for (std::size_t z = 0; z < L.size(); ++z) {
    bool upper = true;
    for (int s : subset) upper = upper && L.leq(s, static_cast<int>(z));
    if (upper && !L.leq(j, static_cast<int>(z))) return false;
  }
  return true;
}

inline bool is_greatest_lower_bound(const SupLattice& L, const std::vector<int>& subset, int m) {
  for (int s : subset)
    if (!L.leq(m, s)) return false;
  for (std::size_t z = 0; z < L.size(); ++z) {
    bool lower = true;
    for (int s : subset) lower = lower && L.leq(static_cast<int>(z), s);
    if (lower && !L.leq(static_cast<int>(z), m)) return false;
  }
  return true;
}

// h is the right extension of g along f iff the Galois law holds pointwise.
inline bool is_right_extension(const Quantaloid& Q, const Cell& f, const Cell& g, const Cell& h) {
  const SupLattice& H = Q.hom(h.src, h.dst);
  for (std::size_t k = 0; k < H.size(); ++k) {
    const Cell kc{h.src, h.dst, static_cast<int>(k)};
    const bool below_h = Q.leq(kc, h);
    const bool law = Q.leq(Q.compose(kc, f), g);
    if (below_h != law) return false;
  }
  return true;
}

inline bool is_right_lifting(const Quantaloid& Q, const Cell& f, const Cell& g, const Cell& h) {
  const SupLattice& H = Q.hom(h.src, h.dst);
  for (std::size_t k = 0; k < H.size(); ++k) {
    const Cell kc{h.src, h.dst, static_cast<int>(k)};
    const bool below_h = Q.leq(kc, h);
    const bool law = Q.leq(Q.compose(f, kc), g);
    if (below_h != law) return false;
  }
  return true;
}

}  // namespace qsheaf::oracle
