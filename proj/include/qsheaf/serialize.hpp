#pragma once

#include <string>

#include "qsheaf/adjunction.hpp"
#include "qsheaf/setenriched.hpp"

namespace qsheaf {

// Self-describing text documents, one per mathematical object. Everything is
// referenced by name, one declaration per line, in a fixed emission order, so
// serializer output round-trips byte-identically through parse -> serialize.
// Headers: "qsheaf <kind> 1" with kind one of quantaloid, qcategory,
// distributor, presheaf, fincategory, profunctor.

std::string detect_kind(const std::string& text);  // throws Error on bad header

std::string save_quantaloid(const Quantaloid& Q);
Quantaloid load_quantaloid(const std::string& text);

std::string save_qcategory(const QCategory& A);
QCategory load_qcategory(const std::string& text);

std::string save_distributor(const Distributor& d);
Distributor load_distributor(const std::string& text);

std::string save_presheaf(const Presheaf& F);
Presheaf load_presheaf(const std::string& text);

std::string save_fincategory(const FinCategory& C);
FinCategory load_fincategory(const std::string& text);

// Profunctor documents embed copies of their endpoint categories; the loaded
// object owns them.
struct ProfunctorDoc {
  std::shared_ptr<FinCategory> dom;
  std::shared_ptr<FinCategory> cod;
  Profunctor p;
};

std::string save_profunctor(const Profunctor& p);
ProfunctorDoc load_profunctor(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace qsheaf
