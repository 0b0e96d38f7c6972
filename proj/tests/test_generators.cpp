#include "doctest.h"
#include "generators.hpp"
#include "qsheaf/serialize.hpp"

using namespace qsheaf;

TEST_CASE("topology enumeration counts") {
  // labeled topologies: 1 on one point, 4 on two, 29 on three
  CHECK(gen::all_topologies(1).size() == 1);
  CHECK(gen::all_topologies(2).size() == 1 + 4);
  CHECK(gen::all_topologies(3).size() == 1 + 4 + 29);
  for (const auto& spec : gen::all_topologies(3))
    CHECK(gen::topology_quantaloid(spec)->validate().ok());
}

TEST_CASE("random presheaves validate and stay within the fiber bound") {
  gen::Rng rng(7);
  for (const auto& spec : gen::all_topologies(3)) {
    auto Q = gen::topology_quantaloid(spec);
    for (int k = 0; k < 2; ++k) {
      const Presheaf F = gen::random_presheaf(spec, Q, rng);
      CHECK(validate_presheaf(F).ok());
      for (const Fiber& f : F.fibers) CHECK(f.size() <= 3);
    }
    CHECK(validate_presheaf(gen::terminal_presheaf(Q)).ok());
    CHECK(validate_presheaf(gen::constant_presheaf(Q, 2)).ok());
  }
}

TEST_CASE("random finite categories validate") {
  gen::Rng rng(11);
  for (int k = 0; k < 25; ++k) {
    const FinCategory C = gen::random_fincategory(rng);
    CHECK(validate_fincategory(C).ok());
    CHECK(C.objects.size() <= 4);
    CHECK(C.arrow_count() <= 12);
  }
}

TEST_CASE("free quantaloids validate") {
  gen::Rng rng(13);
  for (int k = 0; k < 5; ++k) {
    const Quantaloid Q = gen::free_quantaloid(gen::random_fincategory(rng));
    CHECK(Q.validate().ok());
  }
}

TEST_CASE("random gms, q-categories, and distributors validate") {
  gen::Rng rng(17);
  auto Q6 = std::make_shared<Quantaloid>(metric_quantale(1, 6));
  for (int k = 0; k < 10; ++k) {
    const QCategory E = gen::random_gms(Q6, 5, rng);
    CHECK(validate_qcat(E).ok());
  }
  auto RSq = std::make_shared<Quantaloid>(from_topology({{"nil", {}}, {"U", {1}}, {"X", {1, 2}}}));
  for (int k = 0; k < 10; ++k) {
    const QCategory A = gen::random_qcat(RSq, 3, rng);
    const QCategory B = gen::random_qcat(RSq, 3, rng);
    CHECK(validate_qcat(A).ok());
    const Distributor d = gen::random_distributor(A, B, rng);
    CHECK(validate_distributor(d).ok());
  }
}
