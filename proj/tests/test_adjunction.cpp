#include "doctest.h"
#include "fixtures.hpp"
#include "qsheaf/adjunction.hpp"

using namespace qsheaf;

TEST_CASE("presheaf fixtures validate") {
  CHECK(validate_presheaf(fixtures::f_sheaf()).ok());
  CHECK(validate_presheaf(fixtures::f_bad()).ok());
  CHECK(validate_presheaf(fixtures::terminal_presheaf(fixtures::rs(), true)).ok());
  CHECK(fixtures::f_sheaf().site.validate().ok());
}

TEST_CASE("sigma of the sheaf fixture: witnesses by restriction") {
  const QCategory N = sigma_construct(fixtures::f_sheaf());
  const Quantaloid& Q = *N.Q;
  auto name = [&](int a, int b) {
    const Cell h = N.hom(a, b);
    return Q.hom(h.src, h.dst).name(h.elt);
  };
  CHECK(name(N.base.index("s"), N.base.index("p")) == "U");
  CHECK(name(N.base.index("p"), N.base.index("s")) == "nil");
  CHECK(name(N.base.index("s"), N.base.index("t")) == "nil");
  for (std::size_t a = 0; a < N.size(); ++a)
    CHECK(Q.leq(Q.identity(N.typ(static_cast<int>(a))),
                N.hom(static_cast<int>(a), static_cast<int>(a))));
}

TEST_CASE("sigma of the terminal presheaf is the restriction order of opens") {
  const QCategory N = sigma_construct(fixtures::terminal_presheaf(fixtures::rs(), true));
  const Quantaloid& Q = *N.Q;
  CHECK(N.size() == Q.object_count());
  for (std::size_t a = 0; a < N.size(); ++a)
    for (std::size_t b = 0; b < N.size(); ++b) {
      const int ai = static_cast<int>(a), bi = static_cast<int>(b);
      // hom is the smaller open when comparable, empty otherwise
      const Cell h = N.hom(ai, bi);
      const std::string got = Q.hom(h.src, h.dst).name(h.elt);
      const SupLattice& total = Q.hom(Q.object_index("X"), Q.object_index("X"));
      if (total.leq(total.index(Q.object_name(N.typ(bi))), total.index(Q.object_name(N.typ(ai)))))
        CHECK(got == Q.object_name(N.typ(bi)));
      else
        CHECK(got == "nil");
    }
}

TEST_CASE("sigma on morphisms: identity, composition, fiberwise inclusion") {
  const Presheaf F = fixtures::f_sheaf();
  const OplaxTransform id = identity_oplax(F);
  CHECK(validate_oplax(id).ok());
  const QFunctor sid = sigma_on_morphism(id);
  CHECK(sid.on_obj == identity_qfunctor(sigma_construct(F)).on_obj);

  // inclusion of F_sheaf into the terminal presheaf
  const Presheaf T = fixtures::terminal_presheaf(fixtures::rs(), true);
  OplaxTransform incl{F, T, {}};
  incl.components.resize(F.fibers.size());
  for (std::size_t x = 0; x < F.fibers.size(); ++x)
    incl.components[x].assign(F.fibers[x].size(), 0);
  REQUIRE(validate_oplax(incl).ok());
  const QFunctor sincl = sigma_on_morphism(incl);
  CHECK(validate_qfunctor(sincl).ok());

  // functoriality through the terminal endo-transforms
  const OplaxTransform idT = identity_oplax(T);
  const QFunctor left = sigma_on_morphism(compose_oplax(idT, incl));
  const QFunctor right = compose_qfunctors(sigma_on_morphism(idT), sincl);
  CHECK(left.on_obj == right.on_obj);
}

TEST_CASE("action elements on the sheaf sections") {
  const QCategory A = fixtures::sections_qcat(fixtures::f_sheaf());
  const Quantaloid& Q = *A.Q;
  const int s = A.base.index("s");
  const int p = A.base.index("p");

  const MapCell u_into_x = *Q.find_map(Q.object_index("U"), Q.object_index("X"),
                                       Q.hom(Q.object_index("U"), Q.object_index("X")).index("U"));
  CHECK(action_element(A, s, u_into_x) == p);

  const MapCell id_x =
      *Q.find_map(Q.object_index("X"), Q.object_index("X"), Q.identity(Q.object_index("X")).elt);
  CHECK(action_element(A, s, id_x) == s);

  // column law M(-, a.g) = M(-,a) . forward g
  for (std::size_t b = 0; b < A.size(); ++b) {
    const int bi = static_cast<int>(b);
    CHECK(A.hom(bi, action_element(A, s, u_into_x)) ==
          Q.compose(A.hom(bi, s), u_into_x.forward_cell()));
  }

  // an incomplete category has no representative
  const QCategory N = fixtures::sections_f_sheaf();
  const int sn = N.base.index("s");
  CHECK_THROWS_AS((void)action_element(N, sn, u_into_x), Error);
}

TEST_CASE("fibers of the completed sheaf sections recover the presheaf") {
  const Presheaf F = fixtures::f_sheaf();
  const QCategory A = fixtures::sections_qcat(F);
  const Presheaf P = fibers(A, true);
  CHECK(validate_presheaf(P).ok());
  CHECK(presheaf_isomorphic(P, F));

  // posetal variant also validates
  const Presheaf Pp = fibers(A, false);
  CHECK(validate_presheaf(Pp).ok());
}

TEST_CASE("fiber of the F_bad completion over the empty open is one point") {
  const QCategory S = symmetrize_free(sigma_construct(fixtures::f_bad()));
  const Completion C = complete(S, true);
  const Presheaf P = fibers(C.category, true);
  CHECK(P.fiber(P.site.Q->object_index("nil")).size() == 1);
}

TEST_CASE("covering families") {
  const Quantaloid& RS = *fixtures::rs();
  const int X = RS.object_index("X");
  const int U = RS.object_index("U");
  const MapCell id_x = *RS.find_map(X, X, RS.identity(X).elt);
  const MapCell u_into_x = *RS.find_map(U, X, RS.hom(U, X).index("U"));
  const MapCell u_id = *RS.find_map(U, U, RS.identity(U).elt);

  CHECK(is_covering_family(RS, X, {id_x}));
  CHECK_FALSE(is_covering_family(RS, X, {u_into_x}));  // join is only U
  CHECK(is_covering_family(RS, U, {u_id}));
}

TEST_CASE("fixed-presheaf conditions") {
  CHECK(check_fixed_presheaf(fixtures::f_sheaf()).ok());
  CHECK(check_fixed_presheaf(fixtures::terminal_presheaf(fixtures::rs(), true)).ok());
  const Report bad = check_fixed_presheaf(fixtures::f_bad());
  CHECK_FALSE(bad.ok());
  // the witness names the two indistinguishable sections over the empty open
  bool mentions = false;
  for (const auto& issue : bad.issues)
    mentions = mentions || issue.find("'a' and 'b'") != std::string::npos;
  CHECK(mentions);
}

TEST_CASE("sheafification oracle") {
  const Presheaf F = fixtures::f_sheaf();
  CHECK(presheaf_isomorphic(sheafify_oracle(F), F));

  const Presheaf T = fixtures::terminal_presheaf(fixtures::rs(), true);
  CHECK(presheaf_isomorphic(sheafify_oracle(T), T));

  const Presheaf B = sheafify_oracle(fixtures::f_bad());
  CHECK(validate_presheaf(B).ok());
  CHECK(B.fiber(B.site.Q->object_index("nil")).size() == 1);
  CHECK_FALSE(presheaf_isomorphic(B, fixtures::f_bad()));
}

TEST_CASE("roundtrip matches the oracle on the fixtures") {
  for (const Presheaf& F : {fixtures::f_sheaf(), fixtures::f_bad(),
                            fixtures::terminal_presheaf(fixtures::rs(), true)}) {
    const Presheaf R = roundtrip(F);
    CHECK(validate_presheaf(R).ok());
    CHECK(presheaf_isomorphic(R, sheafify_oracle(F)));
    // idempotence
    CHECK(presheaf_isomorphic(roundtrip(R), R));
  }
  CHECK(presheaf_isomorphic(roundtrip(fixtures::f_sheaf()), fixtures::f_sheaf()));
  CHECK_FALSE(presheaf_isomorphic(roundtrip(fixtures::f_bad()), fixtures::f_bad()));
}

TEST_CASE("fixed q-categories") {
  // complete R(X)-categories are fixed points
  CHECK(check_fixed_category(fixtures::sections_qcat(fixtures::f_sheaf())));
  const QCategory C = complete(symmetrize_free(sigma_construct(fixtures::f_bad())), true).category;
  CHECK(check_fixed_category(C));

  // map-dense base: every complete category passes; the unit category is one
  CHECK(fixtures::bool2()->is_map_dense());
  const QCategory u = unit_qcat(fixtures::bool2(), 0);
  CHECK(check_fixed_category(u));

  // a two-point metric space at finite distance is not a fixed point: the
  // only map is 0, and no span of maps reaches distance 1
  QCategory E;
  E.Q = fixtures::q3();
  E.base.elems = {"e0", "e1"};
  E.base.typ = {0, 0};
  const SupLattice& L = E.Q->hom(0, 0);
  E.M = {{L.index("0"), L.index("1")}, {L.index("1"), L.index("0")}};
  REQUIRE(validate_qcat(E).ok());
  CHECK_FALSE(check_fixed_category(E));
}

TEST_CASE("phi and gamma are mutually inverse on the sheaf fixture") {
  const Presheaf F = fixtures::f_sheaf();
  const QCategory A = fixtures::sections_qcat(F);
  const QCategory sF = sigma_construct(F);
  const Presheaf PA = fibers(A, true);

  const auto functors = enumerate_qfunctors(sF, A);
  const auto transforms = enumerate_oplax_transforms(F, PA);
  CHECK(functors.size() == transforms.size());
  CHECK(!functors.empty());

  std::set<std::vector<std::vector<int>>> transform_set;
  for (const auto& t : transforms) transform_set.insert(t.components);
  std::set<std::vector<int>> functor_set;
  for (const auto& g : functors) functor_set.insert(g.on_obj);

  for (const auto& g : functors) {
    const OplaxTransform t = phi(F, g, true);
    CHECK(validate_oplax(t).ok());
    CHECK(transform_set.count(t.components) == 1);
    const QFunctor back = gamma(F, A, t);
    CHECK(back.on_obj == g.on_obj);
  }
  for (const auto& t : transforms) {
    const QFunctor g = gamma(F, A, t);
    CHECK(validate_qfunctor(g).ok());
    CHECK(functor_set.count(g.on_obj) == 1);
    CHECK(phi(F, g, true).components == t.components);
  }
}

TEST_CASE("phi of the counit instance is the identity transform") {
  const QCategory A = fixtures::sections_qcat(fixtures::f_sheaf());
  const Presheaf PA = fibers(A, true);
  // F = fibers(A); the counit functor sigma(PA) -> A sends each fiber
  // element to the category element of the same name
  const QCategory sPA = sigma_construct(PA);
  QFunctor counit{sPA, A, {}};
  for (std::size_t e = 0; e < sPA.size(); ++e)
    counit.on_obj.push_back(A.base.index(sPA.elem(static_cast<int>(e))));
  REQUIRE(validate_qfunctor(counit).ok());
  const OplaxTransform t = phi(PA, counit, true);
  CHECK(t.components == identity_oplax(PA).components);
}
