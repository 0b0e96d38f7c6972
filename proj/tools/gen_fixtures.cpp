// Regenerates the documents under data/ from the built-in constructions.
#include <iostream>

#include "qsheaf/serialize.hpp"

using namespace qsheaf;

namespace {

Presheaf f_sheaf() {
  Presheaf F;
  F.site = make_map_site(std::make_shared<Quantaloid>(
                             from_topology({{"nil", {}}, {"U", {1}}, {"X", {1, 2}}})),
                         true);
  const Quantaloid& Q = *F.site.Q;
  F.fibers.resize(Q.object_count());
  F.fibers[static_cast<std::size_t>(Q.object_index("nil"))] = Fiber::discrete({"bot"});
  F.fibers[static_cast<std::size_t>(Q.object_index("U"))] = Fiber::discrete({"p"});
  F.fibers[static_cast<std::size_t>(Q.object_index("X"))] = Fiber::discrete({"s", "t"});
  F.action.resize(F.site.cells.size());
  for (std::size_t c = 0; c < F.site.cells.size(); ++c) {
    const MapCell& m = F.site.cells[c];
    F.action[c].assign(F.fiber(m.dst).size(), 0);
    if (m.src == m.dst)
      for (std::size_t e = 0; e < F.fiber(m.dst).size(); ++e) F.action[c][e] = static_cast<int>(e);
  }
  return F;
}

FinCategory e_idem() {
  FinCategory C;
  C.objects = {"*"};
  C.arrow_names = {"id", "e"};
  C.src = {0, 0};
  C.dst = {0, 0};
  C.identity = {0};
  C.comp = {{0, 1}, {1, 1}};
  return C;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "data";
  const auto rs = from_topology({{"nil", {}}, {"U", {1}}, {"X", {1, 2}}});
  write_file(dir + "/rs.quantaloid", save_quantaloid(rs));
  write_file(dir + "/q3.quantaloid", save_quantaloid(metric_quantale(1, 2)));
  write_file(dir + "/f_sheaf.presheaf", save_presheaf(f_sheaf()));

  Presheaf bad = f_sheaf();
  const Quantaloid& Q = *bad.site.Q;
  const int nil = Q.object_index("nil");
  bad.fibers[static_cast<std::size_t>(nil)] = Fiber::discrete({"a", "b"});
  for (std::size_t c = 0; c < bad.site.cells.size(); ++c) {
    const MapCell& m = bad.site.cells[c];
    if (m.src != nil) continue;
    if (m.src == m.dst)
      bad.action[c] = {0, 1};
    else
      bad.action[c].assign(bad.fiber(m.dst).size(), 0);
  }
  write_file(dir + "/f_bad.presheaf", save_presheaf(bad));

  write_file(dir + "/e_idem.fincategory", save_fincategory(e_idem()));

  Presheaf terminal;
  terminal.site = make_map_site(std::make_shared<Quantaloid>(rs), true);
  terminal.fibers.resize(Q.object_count());
  for (std::size_t x = 0; x < Q.object_count(); ++x)
    terminal.fibers[x] = Fiber::discrete({"pt" + Q.object_name(static_cast<int>(x))});
  terminal.action.assign(terminal.site.cells.size(), {0});
  write_file(dir + "/terminal.presheaf", save_presheaf(terminal));

  std::cout << "fixtures written to " << dir << "\n";
  return 0;
}
