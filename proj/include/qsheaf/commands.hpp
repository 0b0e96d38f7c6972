#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace qsheaf {

// CLI entry points, exposed as library functions so tests can drive them.
// Exit-code contract: 0 = success / property holds, 1 = property fails
// (a witness is printed), 2 = input error.

struct CmdOptions {
  bool symmetric = false;
  std::optional<std::string> out_path;
  unsigned long seed = 20240905;  // accepted everywhere; commands are deterministic
};

int cmd_validate(const std::string& path, const CmdOptions& opt, std::ostream& os);
int cmd_maps(const std::string& quantaloid_path, const CmdOptions& opt, std::ostream& os);
int cmd_sigma(const std::string& presheaf_path, const CmdOptions& opt, std::ostream& os);
int cmd_fibers(const std::string& qcategory_path, const CmdOptions& opt, std::ostream& os);
int cmd_complete(const std::string& qcategory_path, const CmdOptions& opt, std::ostream& os);
int cmd_roundtrip(const std::string& presheaf_path, const CmdOptions& opt, std::ostream& os);
int cmd_check_fixed_cat(const std::string& qcategory_path, const CmdOptions& opt, std::ostream& os);
int cmd_check_fixed_presheaf(const std::string& presheaf_path, const CmdOptions& opt, std::ostream& os);
int cmd_karoubi(const std::string& fincategory_path, const CmdOptions& opt, std::ostream& os);
int cmd_oracle_sheafify(const std::string& presheaf_path, const CmdOptions& opt, std::ostream& os);

}  // namespace qsheaf
