#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "qsheaf/lattice.hpp"

using namespace qsheaf;

namespace {

std::vector<std::vector<int>> all_subsets(std::size_t n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(static_cast<int>(i));
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

TEST_CASE("joins and meets on the Sierpinski hom lattice") {
  const Quantaloid& RS = *fixtures::rs();
  const int X = RS.object_index("X");
  const SupLattice& L = RS.hom(X, X);  // chain nil < U < X

  CHECK(L.size() == 3);
  CHECK(L.name(L.join({L.index("nil"), L.index("U")})) == "U");
  CHECK(L.name(L.join({})) == "nil");  // empty join is bottom
  CHECK(L.name(L.meet({})) == "X");    // empty meet is top

  for (const auto& s : all_subsets(L.size())) {
    CHECK(oracle::is_least_upper_bound(L, s, L.join(s)));
    CHECK(oracle::is_greatest_lower_bound(L, s, L.meet(s)));
  }
}

TEST_CASE("reversed metric order: 0 on top") {
  const Quantaloid& Q3 = *fixtures::q3();
  const SupLattice& L = Q3.hom(0, 0);

  CHECK(L.name(L.join({L.index("1"), L.index("2")})) == "1");
  CHECK(L.leq(L.index("2"), L.index("1")));
  CHECK_FALSE(L.leq(L.index("1"), L.index("2")));
  CHECK(L.name(L.bottom()) == "inf");
  CHECK(L.name(L.top()) == "0");
  for (const auto& s : all_subsets(L.size())) {
    CHECK(oracle::is_least_upper_bound(L, s, L.join(s)));
    CHECK(oracle::is_greatest_lower_bound(L, s, L.meet(s)));
  }
}

TEST_CASE("bottom and non-ordered pairs in RS hom(U,X)") {
  const Quantaloid& RS = *fixtures::rs();
  const SupLattice& L = RS.hom(RS.object_index("U"), RS.object_index("X"));
  CHECK(L.leq(L.index("nil"), L.index("U")));
  CHECK_FALSE(L.leq(L.index("U"), L.index("nil")));
}

TEST_CASE("join is associative over unions and monotone") {
  for (const auto& Q : {fixtures::rs(), fixtures::q3()}) {
    const SupLattice& L = Q->hom(0, 0);
    const auto subsets = all_subsets(L.size());
    for (const auto& s : subsets)
      for (const auto& t : subsets) {
        std::vector<int> both = s;
        both.insert(both.end(), t.begin(), t.end());
        CHECK(L.join(both) == L.join({L.join(s), L.join(t)}));
        if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
          CHECK(L.leq(L.join(s), L.join(t)));
          CHECK(L.leq(L.meet(t), L.meet(s)));
        }
      }
  }
}

TEST_CASE("validator finds broken orders") {
  // 2-element antichain: no join of the pair, no bottom
  SupLattice bad({"a", "b"}, {{true, false}, {false, true}});
  CHECK_FALSE(bad.validate().ok());

  // cyclic relation is not antisymmetric
  SupLattice cyc({"a", "b"}, {{true, true}, {true, true}});
  CHECK_FALSE(cyc.validate().ok());

  CHECK_THROWS_AS((void)bad.index("zzz"), Error);
  CHECK_THROWS_AS((void)bad.join({0, 1}), Error);
}
