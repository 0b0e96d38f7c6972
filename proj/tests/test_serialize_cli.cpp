#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "qsheaf/commands.hpp"
#include "qsheaf/serialize.hpp"

using namespace qsheaf;

namespace {

std::string data_path(const std::string& name) { return std::string(QSHEAF_DATA_DIR) + "/" + name; }

std::string temp_path(const std::string& name) {
  return std::string(QSHEAF_BINARY_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("documents round-trip byte-identically") {
  const std::string q = save_quantaloid(*fixtures::rs());
  CHECK(save_quantaloid(load_quantaloid(q)) == q);

  const std::string q3 = save_quantaloid(*fixtures::q3());
  CHECK(save_quantaloid(load_quantaloid(q3)) == q3);

  const QCategory A = fixtures::sections_qcat(fixtures::f_sheaf());
  const std::string a = save_qcategory(A);
  CHECK(save_qcategory(load_qcategory(a)) == a);
  CHECK(load_qcategory(a) == A);

  const std::string d = save_distributor(identity_distributor(A));
  CHECK(save_distributor(load_distributor(d)) == d);

  const std::string f = save_presheaf(fixtures::f_sheaf());
  CHECK(save_presheaf(load_presheaf(f)) == f);
  CHECK(load_presheaf(f) == fixtures::f_sheaf());

  const std::string c = save_fincategory(fixtures::e_idem());
  CHECK(save_fincategory(load_fincategory(c)) == c);

  const std::string p = save_profunctor(hom_profunctor(fixtures::e_idem()));
  const ProfunctorDoc doc = load_profunctor(p);
  CHECK(save_profunctor(doc.p) == p);
}

TEST_CASE("repository fixtures match the built-in constructions") {
  CHECK(load_quantaloid(read_file(data_path("rs.quantaloid"))) == *fixtures::rs());
  CHECK(load_quantaloid(read_file(data_path("q3.quantaloid"))) == *fixtures::q3());
  CHECK(load_presheaf(read_file(data_path("f_sheaf.presheaf"))) == fixtures::f_sheaf());
  CHECK(load_presheaf(read_file(data_path("f_bad.presheaf"))) == fixtures::f_bad());
  CHECK(load_fincategory(read_file(data_path("e_idem.fincategory"))) == fixtures::e_idem());
}

TEST_CASE("parse errors carry line numbers") {
  std::string text = read_file(data_path("rs.quantaloid"));
  // corrupt one composition entry to an unknown element name
  const auto pos = text.find("compose U U U U U U");
  REQUIRE(pos != std::string::npos);
  std::string bad = text;
  bad.replace(pos, 19, "compose U U U U U Z");
  try {
    (void)load_quantaloid(bad);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line") != std::string::npos);
  }
  CHECK(detect_kind(text) == "quantaloid");
  CHECK_THROWS_AS(detect_kind("qsheaf nonsense 1\n"), Error);
}

TEST_CASE("cmd_validate exit codes") {
  std::ostringstream out;
  CHECK(cmd_validate(data_path("rs.quantaloid"), {}, out) == 0);
  CHECK(cmd_validate(data_path("q3.quantaloid"), {}, out) == 0);
  CHECK(cmd_validate(data_path("f_sheaf.presheaf"), {}, out) == 0);
  CHECK(cmd_validate(data_path("e_idem.fincategory"), {}, out) == 0);
  CHECK(cmd_validate(data_path("missing.quantaloid"), {}, out) == 2);

  // corrupted composition table: locatable diagnostic, exit 2
  std::string text = read_file(data_path("rs.quantaloid"));
  const auto pos = text.find("compose X X X X X X");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 19, "compose X X X X X nil");
  const std::string bad_path = temp_path("broken.quantaloid");
  write_file(bad_path, text);
  std::ostringstream diag;
  CHECK(cmd_validate(bad_path, {}, diag) == 2);
  CHECK(diag.str().find("invalid quantaloid") != std::string::npos);
}

TEST_CASE("cmd_maps lists the six inclusions of RS") {
  std::ostringstream out;
  CmdOptions opt;
  opt.symmetric = true;
  CHECK(cmd_maps(data_path("rs.quantaloid"), opt, out) == 0);
  int lines = 0;
  std::istringstream is(out.str());
  for (std::string line; std::getline(is, line);) ++lines;
  CHECK(lines == 6);
  CHECK(out.str().find("map U X U U symmetric") != std::string::npos);
}

TEST_CASE("sigma, complete, fibers pipeline through files") {
  CmdOptions opt;
  opt.symmetric = true;

  std::ostringstream out;
  opt.out_path = temp_path("f_sheaf.sigma.qcategory");
  REQUIRE(cmd_sigma(data_path("f_sheaf.presheaf"), opt, out) == 0);
  const QCategory N = load_qcategory(read_file(*opt.out_path));
  CHECK(N == sigma_construct(fixtures::f_sheaf()));

  // the raw sigma category is not symmetrically complete, so fibers fails
  std::ostringstream witness;
  CmdOptions fib_opt;
  fib_opt.symmetric = true;
  CHECK(cmd_fibers(*opt.out_path, fib_opt, witness) == 1);
  CHECK(witness.str().find("not complete") != std::string::npos);

  // completing the symmetrized sections recovers a completable input
  const std::string sections_path = temp_path("sections.qcategory");
  write_file(sections_path, save_qcategory(fixtures::sections_qcat(fixtures::f_sheaf())));
  CmdOptions comp_opt;
  comp_opt.symmetric = true;
  comp_opt.out_path = temp_path("sections.complete.qcategory");
  REQUIRE(cmd_complete(sections_path, comp_opt, out) == 0);
  const std::string completed = read_file(*comp_opt.out_path);
  CHECK(completed.find("# singleton") != std::string::npos);  // provenance annex
  const QCategory C = load_qcategory(completed);               // annex parses as comments
  CHECK(C.size() == 4);

  CmdOptions fib2;
  fib2.symmetric = true;
  fib2.out_path = temp_path("sections.fibers.presheaf");
  REQUIRE(cmd_fibers(*comp_opt.out_path, fib2, out) == 0);
  CHECK(presheaf_isomorphic(load_presheaf(read_file(*fib2.out_path)), fixtures::f_sheaf()));
}

TEST_CASE("roundtrip and fixed-point commands") {
  std::ostringstream out;
  CHECK(cmd_roundtrip(data_path("f_sheaf.presheaf"), {}, out) == 0);
  CHECK(out.str().find("FIXED") == 0);

  std::ostringstream out2;
  CHECK(cmd_roundtrip(data_path("f_bad.presheaf"), {}, out2) == 1);
  CHECK(out2.str().find("NOT-FIXED") != std::string::npos);
  CHECK(out2.str().find("witness") != std::string::npos);

  std::ostringstream out3;
  CHECK(cmd_roundtrip(data_path("terminal.presheaf"), {}, out3) == 0);

  std::ostringstream out4;
  CHECK(cmd_check_fixed_presheaf(data_path("f_sheaf.presheaf"), {}, out4) == 0);
  std::ostringstream out5;
  CHECK(cmd_check_fixed_presheaf(data_path("f_bad.presheaf"), {}, out5) == 1);

  const std::string sections_path = temp_path("sections2.qcategory");
  write_file(sections_path, save_qcategory(fixtures::sections_qcat(fixtures::f_sheaf())));
  std::ostringstream out6;
  CHECK(cmd_check_fixed_cat(sections_path, {}, out6) == 0);
}

TEST_CASE("karoubi and oracle-sheafify commands") {
  CmdOptions opt;
  opt.out_path = temp_path("e_idem.karoubi.fincategory");
  std::ostringstream out;
  REQUIRE(cmd_karoubi(data_path("e_idem.fincategory"), opt, out) == 0);
  const FinCategory K = load_fincategory(read_file(*opt.out_path));
  CHECK(K.objects.size() == 2);
  CHECK(K.arrow_count() == 5);

  CmdOptions opt2;
  opt2.out_path = temp_path("f_bad.sheafified.presheaf");
  REQUIRE(cmd_oracle_sheafify(data_path("f_bad.presheaf"), opt2, out) == 0);
  const Presheaf S = load_presheaf(read_file(*opt2.out_path));
  CHECK(S.fiber(S.site.Q->object_index("nil")).size() == 1);
  CHECK(presheaf_isomorphic(S, roundtrip(fixtures::f_bad())));
}
