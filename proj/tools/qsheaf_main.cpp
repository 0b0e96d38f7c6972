#include <iostream>

#include "CLI11.hpp"
#include "qsheaf/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"qsheaf: quantaloid-enriched categories, completion, and sheaf checks"};
  app.require_subcommand(1);

  std::string path;
  qsheaf::CmdOptions opt;
  std::string out;

  auto add = [&](const std::string& name, const std::string& desc, bool takes_out,
                 bool takes_symmetric) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("path", path, "input document")->required();
    if (takes_out) sub->add_option("--out", out, "write the result to this file");
    if (takes_symmetric) sub->add_flag("--symmetric", opt.symmetric, "use the symmetric map site");
    sub->add_option("--seed", opt.seed, "seed for randomized subroutines (commands are deterministic)");
    return sub;
  };

  CLI::App* validate = add("validate", "run the kind-appropriate validator", false, false);
  CLI::App* maps = add("maps", "enumerate the map cells of a quantaloid", true, true);
  CLI::App* sigma = add("sigma", "Grothendieck construction of a presheaf", true, false);
  CLI::App* fib = add("fibers", "fiber presheaf of a complete q-category", true, true);
  CLI::App* comp = add("complete", "Cauchy completion with a singleton annex", true, true);
  CLI::App* rt = add("roundtrip", "FIXED/NOT-FIXED verdict for a presheaf", false, false);
  CLI::App* cfc = add("check-fixed-cat", "fixed-point check for a q-category", false, false);
  CLI::App* cfp = add("check-fixed-presheaf", "sheaf-style conditions for a presheaf", false, false);
  CLI::App* kar = add("karoubi", "Karoubi envelope of a finite category", true, false);
  CLI::App* orc = add("oracle-sheafify", "independent sheafification of a presheaf", true, false);

  CLI11_PARSE(app, argc, argv);
  if (!out.empty()) opt.out_path = out;

  if (validate->parsed()) return qsheaf::cmd_validate(path, opt, std::cout);
  if (maps->parsed()) return qsheaf::cmd_maps(path, opt, std::cout);
  if (sigma->parsed()) return qsheaf::cmd_sigma(path, opt, std::cout);
  if (fib->parsed()) return qsheaf::cmd_fibers(path, opt, std::cout);
  if (comp->parsed()) return qsheaf::cmd_complete(path, opt, std::cout);
  if (rt->parsed()) return qsheaf::cmd_roundtrip(path, opt, std::cout);
  if (cfc->parsed()) return qsheaf::cmd_check_fixed_cat(path, opt, std::cout);
  if (cfp->parsed()) return qsheaf::cmd_check_fixed_presheaf(path, opt, std::cout);
  if (kar->parsed()) return qsheaf::cmd_karoubi(path, opt, std::cout);
  if (orc->parsed()) return qsheaf::cmd_oracle_sheafify(path, opt, std::cout);
  return 2;
}
