#include "qsheaf/commands.hpp"

#include <ostream>
#include <sstream>

#include "qsheaf/serialize.hpp"

namespace qsheaf {

namespace {

int input_error(std::ostream& os, const std::string& path, const std::string& what) {
  os << "error: " << path << ": " << what << "\n";
  return 2;
}

void emit(const CmdOptions& opt, std::ostream& os, const std::string& doc) {
  if (opt.out_path)
    write_file(*opt.out_path, doc);
  else
    os << doc;
}

Report validate_any(const std::string& kind, const std::string& text) {
  if (kind == "quantaloid") return load_quantaloid(text).validate();
  if (kind == "qcategory") {
    QCategory A = load_qcategory(text);
    Report r = A.Q->validate();
    if (!r.ok()) return r;
    return validate_qcat(A);
  }
  if (kind == "distributor") {
    Distributor d = load_distributor(text);
    Report r = d.dom.Q->validate();
    if (!r.ok()) return r;
    r = validate_qcat(d.dom);
    if (!r.ok()) return r;
    r = validate_qcat(d.cod);
    if (!r.ok()) return r;
    return validate_distributor(d);
  }
  if (kind == "presheaf") {
    Presheaf F = load_presheaf(text);
    Report r = F.site.Q->validate();
    if (!r.ok()) return r;
    return validate_presheaf(F);
  }
  if (kind == "fincategory") return validate_fincategory(load_fincategory(text));
  if (kind == "profunctor") {
    ProfunctorDoc doc = load_profunctor(text);
    Report r = validate_fincategory(*doc.dom);
    if (!r.ok()) return r;
    r = validate_fincategory(*doc.cod);
    if (!r.ok()) return r;
    return validate_profunctor(doc.p);
  }
  throw Error("unknown kind '" + kind + "'");
}

}  // namespace

int cmd_validate(const std::string& path, const CmdOptions&, std::ostream& os) {
  try {
    const std::string text = read_file(path);
    const std::string kind = detect_kind(text);
    const Report r = validate_any(kind, text);
    if (!r.ok()) {
      os << "invalid " << kind << ":\n" << r.str();
      return 2;
    }
    os << "valid " << kind << "\n";
    return 0;
  } catch (const Error& e) {
    return input_error(os, path, e.what());
  }
}

int cmd_maps(const std::string& quantaloid_path, const CmdOptions& opt, std::ostream& os) {
  try {
    const Quantaloid Q = load_quantaloid(read_file(quantaloid_path));
    Report r = Q.validate();
    if (!r.ok()) return input_error(os, quantaloid_path, "invalid quantaloid:\n" + r.str());
    std::ostringstream doc;
    for (const MapCell& m : Q.enumerate_maps(opt.symmetric))
      doc << "map " << Q.object_name(m.src) << " " << Q.object_name(m.dst) << " "
          << Q.hom(m.src, m.dst).name(m.forward) << " " << Q.hom(m.dst, m.src).name(m.adjoint) << " "
          << (m.symmetric ? "symmetric" : "-") << "\n";
    emit(opt, os, doc.str());
    return 0;
  } catch (const Error& e) {
    return input_error(os, quantaloid_path, e.what());
  }
}

int cmd_sigma(const std::string& presheaf_path, const CmdOptions& opt, std::ostream& os) {
  try {
    const Presheaf F = load_presheaf(read_file(presheaf_path));
    emit(opt, os, save_qcategory(sigma_construct(F)));
    return 0;
  } catch (const Error& e) {
    return input_error(os, presheaf_path, e.what());
  }
}

int cmd_fibers(const std::string& qcategory_path, const CmdOptions& opt, std::ostream& os) {
  QCategory A;
  try {
    A = load_qcategory(read_file(qcategory_path));
    Report r = validate_qcat(A);
    if (!r.ok()) return input_error(os, qcategory_path, "invalid q-category:\n" + r.str());
  } catch (const Error& e) {
    return input_error(os, qcategory_path, e.what());
  }
  try {
    emit(opt, os, save_presheaf(fibers(A, opt.symmetric)));
    return 0;
  } catch (const Error& e) {
    os << "not complete: " << e.what() << "\n";
    return 1;
  }
}

int cmd_complete(const std::string& qcategory_path, const CmdOptions& opt, std::ostream& os) {
  try {
    const QCategory A = load_qcategory(read_file(qcategory_path));
    Report r = validate_qcat(A);
    if (!r.ok()) return input_error(os, qcategory_path, "invalid q-category:\n" + r.str());
    const Completion C = complete(A, opt.symmetric);
    std::ostringstream doc;
    doc << save_qcategory(C.category);
    // provenance annex: comment lines keep the document loadable as-is
    const Quantaloid& Q = *A.Q;
    for (std::size_t i = 0; i < C.objects.size(); ++i) {
      const Singleton& s = C.objects[i];
      doc << "# singleton " << C.category.elem(static_cast<int>(i)) << " type "
          << Q.object_name(s.base.type);
      for (std::size_t a = 0; a < A.size(); ++a) {
        const Cell c = s.base.at(static_cast<int>(a));
        doc << " " << A.elem(static_cast<int>(a)) << "=" << Q.hom(c.src, c.dst).name(c.elt);
      }
      doc << "\n";
    }
    for (std::size_t a = 0; a < A.size(); ++a)
      doc << "# yoneda " << A.elem(static_cast<int>(a)) << " -> "
          << C.category.elem(C.yoneda(static_cast<int>(a))) << "\n";
    emit(opt, os, doc.str());
    return 0;
  } catch (const Error& e) {
    return input_error(os, qcategory_path, e.what());
  }
}

int cmd_roundtrip(const std::string& presheaf_path, const CmdOptions&, std::ostream& os) {
  Presheaf F;
  try {
    F = load_presheaf(read_file(presheaf_path));
    Report r = validate_presheaf(F);
    if (!r.ok()) return input_error(os, presheaf_path, "invalid presheaf:\n" + r.str());
  } catch (const Error& e) {
    return input_error(os, presheaf_path, e.what());
  }
  try {
    const Presheaf R = roundtrip(F);
    const bool fixed = presheaf_isomorphic(R, F);
    const Report conditions = check_fixed_presheaf(F);
    if (fixed != conditions.ok())
      os << "warning: roundtrip comparison and the fixed-point conditions disagree\n";
    if (fixed) {
      os << "FIXED\n";
      return 0;
    }
    os << "NOT-FIXED\n";
    for (const auto& issue : conditions.issues) os << "witness: " << issue << "\n";
    if (conditions.ok()) os << "witness: roundtrip presheaf is not isomorphic to the input\n";
    return 1;
  } catch (const Error& e) {
    return input_error(os, presheaf_path, e.what());
  }
}

int cmd_check_fixed_cat(const std::string& qcategory_path, const CmdOptions&, std::ostream& os) {
  try {
    const QCategory A = load_qcategory(read_file(qcategory_path));
    Report r = validate_qcat(A);
    if (!r.ok()) return input_error(os, qcategory_path, "invalid q-category:\n" + r.str());
    if (check_fixed_category(A)) {
      os << "FIXED\n";
      return 0;
    }
    os << "NOT-FIXED\n";
    return 1;
  } catch (const Error& e) {
    return input_error(os, qcategory_path, e.what());
  }
}

int cmd_check_fixed_presheaf(const std::string& presheaf_path, const CmdOptions&, std::ostream& os) {
  try {
    const Presheaf F = load_presheaf(read_file(presheaf_path));
    Report r = validate_presheaf(F);
    if (!r.ok()) return input_error(os, presheaf_path, "invalid presheaf:\n" + r.str());
    const Report verdict = check_fixed_presheaf(F);
    if (verdict.ok()) {
      os << "FIXED\n";
      return 0;
    }
    os << "NOT-FIXED\n" << verdict.str();
    return 1;
  } catch (const Error& e) {
    return input_error(os, presheaf_path, e.what());
  }
}

int cmd_karoubi(const std::string& fincategory_path, const CmdOptions& opt, std::ostream& os) {
  try {
    const FinCategory C = load_fincategory(read_file(fincategory_path));
    Report r = validate_fincategory(C);
    if (!r.ok()) return input_error(os, fincategory_path, "invalid category:\n" + r.str());
    const KaroubiEnvelope env = karoubi_envelope(C);
    std::ostringstream doc;
    doc << save_fincategory(env.category);
    for (std::size_t x = 0; x < C.objects.size(); ++x)
      doc << "# comparison " << C.objects[x] << " -> "
          << env.category.objects[static_cast<std::size_t>(env.comparison.on_obj[x])] << "\n";
    emit(opt, os, doc.str());
    return 0;
  } catch (const Error& e) {
    return input_error(os, fincategory_path, e.what());
  }
}

int cmd_oracle_sheafify(const std::string& presheaf_path, const CmdOptions& opt, std::ostream& os) {
  try {
    const Presheaf F = load_presheaf(read_file(presheaf_path));
    Report r = validate_presheaf(F);
    if (!r.ok()) return input_error(os, presheaf_path, "invalid presheaf:\n" + r.str());
    emit(opt, os, save_presheaf(sheafify_oracle(F)));
    return 0;
  } catch (const Error& e) {
    return input_error(os, presheaf_path, e.what());
  }
}

}  // namespace qsheaf
