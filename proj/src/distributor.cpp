#include "qsheaf/distributor.hpp"

namespace qsheaf {

bool Distributor::operator==(const Distributor& other) const {
  return dom == other.dom && cod == other.cod && phi == other.phi;
}

Report validate_distributor(const Distributor& d) {
  Report report;
  if (!d.dom.Q || !d.cod.Q || !(*d.dom.Q == *d.cod.Q)) {
    report.add("distributor: endpoint categories live over different quantaloids");
    return report;
  }
  const Quantaloid& Q = *d.dom.Q;
  const std::size_t nc = d.cod.size();
  const std::size_t na = d.dom.size();
  if (d.phi.size() != nc) {
    report.add("distributor: matrix has wrong shape");
    return report;
  }
  for (std::size_t c = 0; c < nc; ++c) {
    if (d.phi[c].size() != na) {
      report.add("distributor: matrix has wrong shape");
      return report;
    }
    for (std::size_t a = 0; a < na; ++a) {
      const SupLattice& H = Q.hom(d.dom.typ(static_cast<int>(a)), d.cod.typ(static_cast<int>(c)));
      if (d.phi[c][a] < 0 || static_cast<std::size_t>(d.phi[c][a]) >= H.size()) {
        report.add("distributor: entry out of range at (" + d.cod.elem(static_cast<int>(c)) + "," +
                   d.dom.elem(static_cast<int>(a)) + ")");
        return report;
      }
    }
  }
  for (std::size_t c = 0; c < nc; ++c)
    for (std::size_t c2 = 0; c2 < nc; ++c2)
      for (std::size_t a2 = 0; a2 < na; ++a2)
        for (std::size_t a = 0; a < na; ++a) {
          const int ci = static_cast<int>(c), c2i = static_cast<int>(c2);
          const int a2i = static_cast<int>(a2), ai = static_cast<int>(a);
          const Cell lhs =
              Q.compose(d.cod.hom(ci, c2i), Q.compose(d.at(c2i, a2i), d.dom.hom(a2i, ai)));
          if (!Q.leq(lhs, d.at(ci, ai)))
            report.add("distributor: action fails at (" + d.cod.elem(ci) + "," + d.cod.elem(c2i) + "," +
                       d.dom.elem(a2i) + "," + d.dom.elem(ai) + ")");
        }
  return report;
}

Distributor identity_distributor(const QCategory& A) { return Distributor{A, A, A.M}; }

Distributor compose_distributors(const Distributor& psi, const Distributor& phi) {
  if (!(phi.cod == psi.dom)) throw Error("compose_distributors: shape mismatch");
  const Quantaloid& Q = *phi.dom.Q;
  Distributor out{phi.dom, psi.cod, {}};
  const std::size_t nd = psi.cod.size();
  const std::size_t na = phi.dom.size();
  const std::size_t nc = psi.dom.size();
  out.phi.assign(nd, std::vector<int>(na, 0));
  for (std::size_t d = 0; d < nd; ++d)
    for (std::size_t a = 0; a < na; ++a) {
      std::vector<int> parts;
      for (std::size_t c = 0; c < nc; ++c)
        parts.push_back(
            Q.compose(psi.at(static_cast<int>(d), static_cast<int>(c)), phi.at(static_cast<int>(c), static_cast<int>(a)))
                .elt);
      out.phi[d][a] = Q.hom(phi.dom.typ(static_cast<int>(a)), psi.cod.typ(static_cast<int>(d))).join(parts);
    }
  return out;
}

Distributor representable_lower(const QFunctor& f) {
  Distributor out{f.dom, f.cod, {}};
  out.phi.assign(f.cod.size(), std::vector<int>(f.dom.size(), 0));
  for (std::size_t c = 0; c < f.cod.size(); ++c)
    for (std::size_t a = 0; a < f.dom.size(); ++a)
      out.phi[c][a] = f.cod.M[c][static_cast<std::size_t>(f(static_cast<int>(a)))];
  return out;
}

Distributor representable_upper(const QFunctor& f) {
  Distributor out{f.cod, f.dom, {}};
  out.phi.assign(f.dom.size(), std::vector<int>(f.cod.size(), 0));
  for (std::size_t a = 0; a < f.dom.size(); ++a)
    for (std::size_t c = 0; c < f.cod.size(); ++c)
      out.phi[a][c] = f.cod.M[static_cast<std::size_t>(f(static_cast<int>(a)))][c];
  return out;
}

Distributor involute_distributor(const Distributor& phi) {
  const Quantaloid& Q = *phi.dom.Q;
  if (!Q.has_involution()) throw Error("involute_distributor: quantaloid has no involution");
  Distributor out{phi.cod, phi.dom, {}};
  out.phi.assign(phi.dom.size(), std::vector<int>(phi.cod.size(), 0));
  for (std::size_t a = 0; a < phi.dom.size(); ++a)
    for (std::size_t c = 0; c < phi.cod.size(); ++c)
      out.phi[a][c] = Q.involution(phi.at(static_cast<int>(c), static_cast<int>(a))).elt;
  return out;
}

bool leq_distributor(const Distributor& phi1, const Distributor& phi2) {
  if (!(phi1.dom == phi2.dom) || !(phi1.cod == phi2.cod))
    throw Error("leq_distributor: shape mismatch");
  const Quantaloid& Q = *phi1.dom.Q;
  for (std::size_t c = 0; c < phi1.cod.size(); ++c)
    for (std::size_t a = 0; a < phi1.dom.size(); ++a)
      if (!Q.leq(phi1.at(static_cast<int>(c), static_cast<int>(a)),
                 phi2.at(static_cast<int>(c), static_cast<int>(a))))
        return false;
  return true;
}

bool is_adjoint_pair(const Distributor& phi, const Distributor& psi) {
  if (!(phi.dom == psi.cod) || !(phi.cod == psi.dom)) throw Error("is_adjoint_pair: shape mismatch");
  const Distributor unit = compose_distributors(psi, phi);
  const Distributor counit = compose_distributors(phi, psi);
  return leq_distributor(identity_distributor(phi.dom), unit) &&
         leq_distributor(counit, identity_distributor(phi.cod));
}

}  // namespace qsheaf
