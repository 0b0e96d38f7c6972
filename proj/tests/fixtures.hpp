#pragma once

#include "qsheaf/adjunction.hpp"
#include "qsheaf/setenriched.hpp"

namespace qsheaf::fixtures {

// Sierpinski-space quantaloid: opens nil < U < X.
inline QuantaloidPtr rs() {
  static const auto q = std::make_shared<Quantaloid>(
      from_topology({{"nil", {}}, {"U", {1}}, {"X", {1, 2}}}));
  return q;
}

// One-object metric quantale {0,1,2,inf}, reversed order, saturating addition.
inline QuantaloidPtr q3() {
  static const auto q = std::make_shared<Quantaloid>(metric_quantale(1, 2));
  return q;
}

// Two-element Boolean quantale {0,1} with meet as tensor.
inline QuantaloidPtr bool2() {
  static const auto q = std::make_shared<Quantaloid>(from_quantale(
      {"0", "1"}, {{"0", "1"}}, {{"0", "0"}, {"0", "1"}}, "1", true));
  return q;
}

inline Presheaf f_sheaf() {
  Presheaf F;
  F.site = make_map_site(rs(), true);
  const Quantaloid& Q = *F.site.Q;
  F.fibers.resize(Q.object_count());
  F.fibers[static_cast<std::size_t>(Q.object_index("nil"))] = Fiber::discrete({"bot"});
  F.fibers[static_cast<std::size_t>(Q.object_index("U"))] = Fiber::discrete({"p"});
  F.fibers[static_cast<std::size_t>(Q.object_index("X"))] = Fiber::discrete({"s", "t"});
  F.action.resize(F.site.cells.size());
  for (std::size_t c = 0; c < F.site.cells.size(); ++c) {
    const MapCell& m = F.site.cells[c];
    F.action[c].assign(F.fiber(m.dst).size(), 0);  // every smaller fiber is a point
    if (m.src == m.dst)
      for (std::size_t e = 0; e < F.fiber(m.dst).size(); ++e) F.action[c][e] = static_cast<int>(e);
  }
  return F;
}

// Same but with two elements over the empty open; p restricts to a.
inline Presheaf f_bad() {
  Presheaf F = f_sheaf();
  const Quantaloid& Q = *F.site.Q;
  const int nil = Q.object_index("nil");
  F.fibers[static_cast<std::size_t>(nil)] = Fiber::discrete({"a", "b"});
  for (std::size_t c = 0; c < F.site.cells.size(); ++c) {
    const MapCell& m = F.site.cells[c];
    if (m.src != nil) continue;
    if (m.src == m.dst) {
      F.action[c] = {0, 1};
    } else {
      F.action[c].assign(F.fiber(m.dst).size(), 0);  // everything restricts to a
    }
  }
  return F;
}

// All fibers are one-point sets.
inline Presheaf terminal_presheaf(QuantaloidPtr Q, bool symmetric) {
  Presheaf F;
  F.site = make_map_site(std::move(Q), symmetric);
  const Quantaloid& q = *F.site.Q;
  F.fibers.resize(q.object_count());
  for (std::size_t x = 0; x < q.object_count(); ++x)
    F.fibers[x] = Fiber::discrete({"pt" + q.object_name(static_cast<int>(x))});
  F.action.resize(F.site.cells.size());
  for (std::size_t c = 0; c < F.site.cells.size(); ++c) F.action[c] = {0};
  return F;
}

inline QCategory sections_f_sheaf() { return sigma_construct(f_sheaf()); }

// The local-equality category of sections: M(f,g) is the largest open on
// which both restrict equally. For these fixtures it matches
// symmetrize_free(sigma F); built directly here from the presheaf data.
inline QCategory sections_qcat(const Presheaf& F) {
  const Quantaloid& Q = *F.site.Q;
  QCategory A = sigma_construct(F);
  // local equality: join of opens W <= ta /\ tb with equal restrictions
  const int n = static_cast<int>(A.size());
  std::vector<int> off(Q.object_count() + 1, 0);
  for (std::size_t x = 0; x < Q.object_count(); ++x)
    off[x + 1] = off[x] + static_cast<int>(F.fibers[x].size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> parts;
      for (std::size_t w = 0; w < Q.object_count(); ++w) {
        const int wi = static_cast<int>(w);
        // cells W -> ta and W -> tb, when they exist, restrict both sections
        int cell_a = -1, cell_b = -1;
        for (std::size_t c = 0; c < F.site.cells.size(); ++c) {
          if (F.site.cells[c].src == wi && F.site.cells[c].dst == A.typ(a)) cell_a = static_cast<int>(c);
          if (F.site.cells[c].src == wi && F.site.cells[c].dst == A.typ(b)) cell_b = static_cast<int>(c);
        }
        if (cell_a < 0 || cell_b < 0) continue;
        const int ea = a - off[static_cast<std::size_t>(A.typ(a))];
        const int eb = b - off[static_cast<std::size_t>(A.typ(b))];
        if (F.act(cell_a, ea) == F.act(cell_b, eb))
          parts.push_back(Q.hom(A.typ(b), A.typ(a)).index(Q.object_name(wi)));
      }
      A.M[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          Q.hom(A.typ(b), A.typ(a)).join(parts);
    }
  return A;
}

inline FinCategory e_idem() {
  FinCategory C;
  C.objects = {"*"};
  C.arrow_names = {"id", "e"};
  C.src = {0, 0};
  C.dst = {0, 0};
  C.identity = {0};
  C.comp = {{0, 1}, {1, 1}};  // id.id=id, id.e=e, e.id=e, e.e=e
  return C;
}

}  // namespace qsheaf::fixtures
