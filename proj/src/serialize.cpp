#include "qsheaf/serialize.hpp"

#include <fstream>
#include <sstream>

namespace qsheaf {

namespace {

struct Lines {
  std::vector<std::vector<std::string>> tokens;  // per line
  std::vector<std::size_t> numbers;              // original line numbers
  std::size_t pos = 0;

  bool done() const { return pos >= tokens.size(); }
  const std::vector<std::string>& peek() const {
    if (done()) throw Error("document: unexpected end of file");
    return tokens[pos];
  }
  std::vector<std::string> next() {
    auto t = peek();
    ++pos;
    return t;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    const std::size_t line = done() ? (numbers.empty() ? 0 : numbers.back()) : numbers[pos];
    throw Error("line " + std::to_string(line) + ": " + msg);
  }
};

Lines tokenize(const std::string& text) {
  Lines out;
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::vector<std::string> toks;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty() || toks.front().starts_with("#")) continue;
    out.tokens.push_back(std::move(toks));
    out.numbers.push_back(number);
  }
  return out;
}

int parse_int(Lines& in, const std::string& tok) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    in.fail("expected a number, got '" + tok + "'");
  }
}

void expect_header(Lines& in, const std::string& kind) {
  const auto& h = in.peek();
  if (h.size() != 3 || h[0] != "qsheaf" || h[1] != kind || h[2] != "1")
    in.fail("expected header 'qsheaf " + kind + " 1'");
  in.next();
}

// ---- quantaloid ----

void emit_quantaloid(std::ostream& os, const Quantaloid& Q) {
  const int n = static_cast<int>(Q.object_count());
  os << "objects " << n << "\n";
  for (int x = 0; x < n; ++x) os << "object " << Q.object_name(x) << "\n";
  for (int s = 0; s < n; ++s)
    for (int d = 0; d < n; ++d) {
      const SupLattice& H = Q.hom(s, d);
      os << "hom " << Q.object_name(s) << " " << Q.object_name(d) << " " << H.size();
      for (const auto& e : H.elements()) os << " " << e;
      os << "\n";
    }
  for (int s = 0; s < n; ++s)
    for (int d = 0; d < n; ++d) {
      const SupLattice& H = Q.hom(s, d);
      for (std::size_t x = 0; x < H.size(); ++x)
        for (std::size_t y = 0; y < H.size(); ++y)
          if (x != y && H.leq(static_cast<int>(x), static_cast<int>(y)))
            os << "leq " << Q.object_name(s) << " " << Q.object_name(d) << " " << H.name(static_cast<int>(x))
               << " " << H.name(static_cast<int>(y)) << "\n";
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const SupLattice& F = Q.hom(x, y);
        const SupLattice& G = Q.hom(y, z);
        for (std::size_t g = 0; g < G.size(); ++g)
          for (std::size_t f = 0; f < F.size(); ++f) {
            const Cell r = Q.compose(Cell{y, z, static_cast<int>(g)}, Cell{x, y, static_cast<int>(f)});
            os << "compose " << Q.object_name(x) << " " << Q.object_name(y) << " " << Q.object_name(z)
               << " " << G.name(static_cast<int>(g)) << " " << F.name(static_cast<int>(f)) << " "
               << Q.hom(x, z).name(r.elt) << "\n";
          }
      }
  for (int x = 0; x < n; ++x)
    os << "identity " << Q.object_name(x) << " " << Q.hom(x, x).name(Q.identity(x).elt) << "\n";
  if (Q.has_involution())
    for (int s = 0; s < n; ++s)
      for (int d = 0; d < n; ++d) {
        const SupLattice& H = Q.hom(s, d);
        for (std::size_t e = 0; e < H.size(); ++e) {
          const Cell i = Q.involution(Cell{s, d, static_cast<int>(e)});
          os << "involution " << Q.object_name(s) << " " << Q.object_name(d) << " "
             << H.name(static_cast<int>(e)) << " " << Q.hom(d, s).name(i.elt) << "\n";
        }
      }
}

Quantaloid parse_quantaloid(Lines& in) {
  auto head = in.next();
  if (head.size() != 2 || head[0] != "objects") in.fail("expected 'objects <n>'");
  const int n = parse_int(in, head[1]);
  std::vector<std::string> objects;
  for (int i = 0; i < n; ++i) {
    auto t = in.next();
    if (t.size() != 2 || t[0] != "object") in.fail("expected 'object <name>'");
    objects.push_back(t[1]);
  }
  auto obj_index = [&](const std::string& name) {
    for (std::size_t i = 0; i < objects.size(); ++i)
      if (objects[i] == name) return static_cast<int>(i);
    in.fail("unknown object '" + name + "'");
  };
  const std::size_t nn = static_cast<std::size_t>(n);
  std::vector<std::vector<std::string>> elems(nn * nn);
  for (std::size_t k = 0; k < nn * nn; ++k) {
    auto t = in.next();
    if (t.size() < 4 || t[0] != "hom") in.fail("expected 'hom <src> <dst> <k> ...'");
    const int s = obj_index(t[1]);
    const int d = obj_index(t[2]);
    const int cnt = parse_int(in, t[3]);
    if (static_cast<int>(t.size()) != 4 + cnt) in.fail("hom line has wrong element count");
    auto& dst = elems[static_cast<std::size_t>(s) * nn + static_cast<std::size_t>(d)];
    if (!dst.empty()) in.fail("duplicate hom declaration");
    dst.assign(t.begin() + 4, t.end());
    if (dst.empty()) in.fail("hom lattice must not be empty");
  }
  std::vector<std::vector<std::pair<std::string, std::string>>> pairs(nn * nn);
  while (!in.done() && in.peek()[0] == "leq") {
    auto t = in.next();
    if (t.size() != 5) in.fail("expected 'leq <src> <dst> <x> <y>'");
    pairs[static_cast<std::size_t>(obj_index(t[1])) * nn + static_cast<std::size_t>(obj_index(t[2]))]
        .emplace_back(t[3], t[4]);
  }
  std::vector<SupLattice> homs(nn * nn);
  for (std::size_t k = 0; k < nn * nn; ++k) {
    // from_pairs closes reflexively and transitively; validation happens later
    try {
      homs[k] = SupLattice::from_pairs(elems[k], pairs[k]);
    } catch (const Error& e) {
      in.fail(e.what());
    }
  }
  auto hom_of = [&](int s, int d) -> SupLattice& {
    return homs[static_cast<std::size_t>(s) * nn + static_cast<std::size_t>(d)];
  };
  std::vector<std::vector<int>> tables(nn * nn * nn);
  for (std::size_t x = 0; x < nn; ++x)
    for (std::size_t y = 0; y < nn; ++y)
      for (std::size_t z = 0; z < nn; ++z)
        tables[(x * nn + y) * nn + z].assign(
            hom_of(static_cast<int>(x), static_cast<int>(y)).size() *
                hom_of(static_cast<int>(y), static_cast<int>(z)).size(),
            -1);
  while (!in.done() && in.peek()[0] == "compose") {
    auto t = in.next();
    if (t.size() != 7) in.fail("expected 'compose <x> <y> <z> <g> <f> <r>'");
    const int x = obj_index(t[1]), y = obj_index(t[2]), z = obj_index(t[3]);
    SupLattice& F = hom_of(x, y);
    SupLattice& G = hom_of(y, z);
    SupLattice& R = hom_of(x, z);
    const int g = G.find(t[4]);
    const int f = F.find(t[5]);
    const int r = R.find(t[6]);
    if (g < 0 || f < 0 || r < 0) in.fail("compose line names an unknown element");
    tables[(static_cast<std::size_t>(x) * nn + static_cast<std::size_t>(y)) * nn +
           static_cast<std::size_t>(z)][static_cast<std::size_t>(g) * F.size() + static_cast<std::size_t>(f)] =
        r;
  }
  for (std::size_t k = 0; k < nn * nn * nn; ++k)
    for (int v : tables[k])
      if (v < 0) in.fail("composition table incomplete");
  std::vector<int> identities(nn, -1);
  for (std::size_t i = 0; i < nn; ++i) {
    auto t = in.next();
    if (t.size() != 3 || t[0] != "identity") in.fail("expected 'identity <obj> <elt>'");
    const int x = obj_index(t[1]);
    const int e = hom_of(x, x).find(t[2]);
    if (e < 0) in.fail("identity names an unknown element");
    identities[static_cast<std::size_t>(x)] = e;
  }
  for (int e : identities)
    if (e < 0) in.fail("missing identity declaration");
  std::optional<std::vector<std::vector<int>>> involution;
  if (!in.done() && in.peek()[0] == "involution") {
    involution.emplace(nn * nn);
    for (std::size_t k = 0; k < nn * nn; ++k) (*involution)[k].assign(homs[k].size(), -1);
    while (!in.done() && in.peek()[0] == "involution") {
      auto t = in.next();
      if (t.size() != 5) in.fail("expected 'involution <src> <dst> <e> <e2>'");
      const int s = obj_index(t[1]), d = obj_index(t[2]);
      const int e = hom_of(s, d).find(t[3]);
      const int e2 = hom_of(d, s).find(t[4]);
      if (e < 0 || e2 < 0) in.fail("involution names an unknown element");
      (*involution)[static_cast<std::size_t>(s) * nn + static_cast<std::size_t>(d)]
                   [static_cast<std::size_t>(e)] = e2;
    }
    for (std::size_t k = 0; k < nn * nn; ++k)
      for (int v : (*involution)[k])
        if (v < 0) in.fail("involution table incomplete");
  }
  try {
    return Quantaloid(std::move(objects), std::move(homs), std::move(tables), std::move(identities),
                      std::move(involution));
  } catch (const Error& e) {
    in.fail(e.what());
  }
}

void expect_line(Lines& in, const std::string& literal) {
  auto t = in.next();
  std::vector<std::string> want;
  std::istringstream ws(literal);
  std::string tok;
  while (ws >> tok) want.push_back(tok);
  if (t != want) in.fail("expected '" + literal + "'");
}

// ---- q-category bodies (without their quantaloid) ----

void emit_qcategory_body(std::ostream& os, const QCategory& A) {
  for (std::size_t a = 0; a < A.size(); ++a)
    os << "elem " << A.elem(static_cast<int>(a)) << " "
       << A.Q->object_name(A.typ(static_cast<int>(a))) << "\n";
  for (std::size_t a = 0; a < A.size(); ++a)
    for (std::size_t b = 0; b < A.size(); ++b) {
      const Cell h = A.hom(static_cast<int>(a), static_cast<int>(b));
      os << "hom " << A.elem(static_cast<int>(a)) << " " << A.elem(static_cast<int>(b)) << " "
         << A.Q->hom(h.src, h.dst).name(h.elt) << "\n";
    }
}

QCategory parse_qcategory_body(Lines& in, QuantaloidPtr Q) {
  QCategory A;
  A.Q = std::move(Q);
  while (!in.done() && in.peek()[0] == "elem") {
    auto t = in.next();
    if (t.size() != 3) in.fail("expected 'elem <name> <type>'");
    A.base.elems.push_back(t[1]);
    try {
      A.base.typ.push_back(A.Q->object_index(t[2]));
    } catch (const Error& e) {
      in.fail(e.what());
    }
  }
  const std::size_t n = A.size();
  A.M.assign(n, std::vector<int>(n, -1));
  for (std::size_t k = 0; k < n * n; ++k) {
    auto t = in.next();
    if (t.size() != 4 || t[0] != "hom") in.fail("expected 'hom <a> <b> <elt>'");
    int a = -1, b = -1;
    try {
      a = A.base.index(t[1]);
      b = A.base.index(t[2]);
    } catch (const Error& e) {
      in.fail(e.what());
    }
    const int e = A.Q->hom(A.typ(b), A.typ(a)).find(t[3]);
    if (e < 0) in.fail("hom entry names an unknown element");
    A.M[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = e;
  }
  for (const auto& row : A.M)
    for (int v : row)
      if (v < 0) in.fail("q-category hom matrix incomplete");
  return A;
}

}  // namespace

std::string detect_kind(const std::string& text) {
  Lines in = tokenize(text);
  const auto& h = in.peek();
  if (h.size() != 3 || h[0] != "qsheaf" || h[2] != "1") in.fail("bad document header");
  for (const char* kind : {"quantaloid", "qcategory", "distributor", "presheaf", "fincategory",
                           "profunctor"})
    if (h[1] == kind) return h[1];
  in.fail("unknown document kind '" + h[1] + "'");
}

std::string save_quantaloid(const Quantaloid& Q) {
  std::ostringstream os;
  os << "qsheaf quantaloid 1\n";
  emit_quantaloid(os, Q);
  os << "end\n";
  return os.str();
}

Quantaloid load_quantaloid(const std::string& text) {
  Lines in = tokenize(text);
  expect_header(in, "quantaloid");
  Quantaloid Q = parse_quantaloid(in);
  expect_line(in, "end");
  return Q;
}

std::string save_qcategory(const QCategory& A) {
  std::ostringstream os;
  os << "qsheaf qcategory 1\n";
  os << "begin quantaloid\n";
  emit_quantaloid(os, *A.Q);
  os << "end quantaloid\n";
  emit_qcategory_body(os, A);
  os << "end\n";
  return os.str();
}

QCategory load_qcategory(const std::string& text) {
  Lines in = tokenize(text);
  expect_header(in, "qcategory");
  expect_line(in, "begin quantaloid");
  auto Q = std::make_shared<Quantaloid>(parse_quantaloid(in));
  expect_line(in, "end quantaloid");
  QCategory A = parse_qcategory_body(in, Q);
  expect_line(in, "end");
  return A;
}

std::string save_distributor(const Distributor& d) {
  std::ostringstream os;
  os << "qsheaf distributor 1\n";
  os << "begin quantaloid\n";
  emit_quantaloid(os, *d.dom.Q);
  os << "end quantaloid\n";
  os << "begin dom\n";
  emit_qcategory_body(os, d.dom);
  os << "end dom\n";
  os << "begin cod\n";
  emit_qcategory_body(os, d.cod);
  os << "end cod\n";
  for (std::size_t c = 0; c < d.cod.size(); ++c)
    for (std::size_t a = 0; a < d.dom.size(); ++a) {
      const Cell v = d.at(static_cast<int>(c), static_cast<int>(a));
      os << "phi " << d.cod.elem(static_cast<int>(c)) << " " << d.dom.elem(static_cast<int>(a)) << " "
         << d.dom.Q->hom(v.src, v.dst).name(v.elt) << "\n";
    }
  os << "end\n";
  return os.str();
}

Distributor load_distributor(const std::string& text) {
  Lines in = tokenize(text);
  expect_header(in, "distributor");
  expect_line(in, "begin quantaloid");
  auto Q = std::make_shared<Quantaloid>(parse_quantaloid(in));
  expect_line(in, "end quantaloid");
  expect_line(in, "begin dom");
  Distributor d;
  d.dom = parse_qcategory_body(in, Q);
  expect_line(in, "end dom");
  expect_line(in, "begin cod");
  d.cod = parse_qcategory_body(in, Q);
  expect_line(in, "end cod");
  d.phi.assign(d.cod.size(), std::vector<int>(d.dom.size(), -1));
  for (std::size_t k = 0; k < d.cod.size() * d.dom.size(); ++k) {
    auto t = in.next();
    if (t.size() != 4 || t[0] != "phi") in.fail("expected 'phi <c> <a> <elt>'");
    int c = -1, a = -1;
    try {
      c = d.cod.base.index(t[1]);
      a = d.dom.base.index(t[2]);
    } catch (const Error& e) {
      in.fail(e.what());
    }
    const int e = Q->hom(d.dom.typ(a), d.cod.typ(c)).find(t[3]);
    if (e < 0) in.fail("phi entry names an unknown element");
    d.phi[static_cast<std::size_t>(c)][static_cast<std::size_t>(a)] = e;
  }
  expect_line(in, "end");
  return d;
}

std::string save_presheaf(const Presheaf& F) {
  std::ostringstream os;
  os << "qsheaf presheaf 1\n";
  os << "begin quantaloid\n";
  emit_quantaloid(os, *F.site.Q);
  os << "end quantaloid\n";
  os << "site " << (F.site.symmetric ? "symmetric" : "all") << "\n";
  const Quantaloid& Q = *F.site.Q;
  for (std::size_t x = 0; x < F.fibers.size(); ++x) {
    os << "fiber " << Q.object_name(static_cast<int>(x)) << " " << F.fibers[x].size();
    for (const auto& e : F.fibers[x].elems) os << " " << e;
    os << "\n";
  }
  for (std::size_t x = 0; x < F.fibers.size(); ++x) {
    const Fiber& f = F.fibers[x];
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = 0; j < f.size(); ++j)
        if (i != j && f.leq[i][j])
          os << "fleq " << Q.object_name(static_cast<int>(x)) << " " << f.elems[i] << " " << f.elems[j]
             << "\n";
  }
  for (std::size_t c = 0; c < F.site.cells.size(); ++c) {
    const MapCell& g = F.site.cells[c];
    for (std::size_t e = 0; e < F.fiber(g.dst).size(); ++e)
      os << "action " << Q.object_name(g.src) << " " << Q.object_name(g.dst) << " "
         << Q.hom(g.src, g.dst).name(g.forward) << " " << F.fiber(g.dst).elems[e] << " "
         << F.fiber(g.src).elems[static_cast<std::size_t>(F.act(static_cast<int>(c), static_cast<int>(e)))]
         << "\n";
  }
  os << "end\n";
  return os.str();
}

Presheaf load_presheaf(const std::string& text) {
  Lines in = tokenize(text);
  expect_header(in, "presheaf");
  expect_line(in, "begin quantaloid");
  auto Q = std::make_shared<Quantaloid>(parse_quantaloid(in));
  expect_line(in, "end quantaloid");
  auto t = in.next();
  if (t.size() != 2 || t[0] != "site" || (t[1] != "symmetric" && t[1] != "all"))
    in.fail("expected 'site symmetric' or 'site all'");
  Presheaf F;
  F.site = make_map_site(Q, t[1] == "symmetric");
  const std::size_t n = Q->object_count();
  F.fibers.resize(n);
  std::vector<bool> seen(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    auto ft = in.next();
    if (ft.size() < 3 || ft[0] != "fiber") in.fail("expected 'fiber <obj> <k> ...'");
    int x = -1;
    try {
      x = Q->object_index(ft[1]);
    } catch (const Error& e) {
      in.fail(e.what());
    }
    if (seen[static_cast<std::size_t>(x)]) in.fail("duplicate fiber declaration");
    seen[static_cast<std::size_t>(x)] = true;
    const int cnt = parse_int(in, ft[2]);
    if (static_cast<int>(ft.size()) != 3 + cnt) in.fail("fiber line has wrong element count");
    F.fibers[static_cast<std::size_t>(x)] =
        Fiber::discrete(std::vector<std::string>(ft.begin() + 3, ft.end()));
  }
  auto fiber_index = [&](int x, const std::string& name) {
    const auto& elems = F.fibers[static_cast<std::size_t>(x)].elems;
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (elems[i] == name) return static_cast<int>(i);
    in.fail("unknown fiber element '" + name + "'");
  };
  while (!in.done() && in.peek()[0] == "fleq") {
    auto lt = in.next();
    if (lt.size() != 4) in.fail("expected 'fleq <obj> <x> <y>'");
    int x = -1;
    try {
      x = Q->object_index(lt[1]);
    } catch (const Error& e) {
      in.fail(e.what());
    }
    F.fibers[static_cast<std::size_t>(x)]
        .leq[static_cast<std::size_t>(fiber_index(x, lt[2]))]
            [static_cast<std::size_t>(fiber_index(x, lt[3]))] = true;
  }
  F.action.resize(F.site.cells.size());
  for (std::size_t c = 0; c < F.site.cells.size(); ++c)
    F.action[c].assign(F.fiber(F.site.cells[c].dst).size(), -1);
  while (!in.done() && in.peek()[0] == "action") {
    auto at = in.next();
    if (at.size() != 6) in.fail("expected 'action <src> <dst> <forward> <from> <to>'");
    int s = -1, d = -1;
    try {
      s = Q->object_index(at[1]);
      d = Q->object_index(at[2]);
    } catch (const Error& e) {
      in.fail(e.what());
    }
    const int fwd = Q->hom(s, d).find(at[3]);
    if (fwd < 0) in.fail("action names an unknown 1-cell");
    const int cell = F.site.find_cell(s, d, fwd);
    if (cell < 0) in.fail("action names a 1-cell outside the site");
    F.action[static_cast<std::size_t>(cell)][static_cast<std::size_t>(fiber_index(d, at[4]))] =
        fiber_index(s, at[5]);
  }
  for (const auto& row : F.action)
    for (int v : row)
      if (v < 0) in.fail("presheaf action tables incomplete");
  expect_line(in, "end");
  return F;
}

namespace {

void emit_fincategory_body(std::ostream& os, const FinCategory& C) {
  for (const auto& o : C.objects) os << "object " << o << "\n";
  for (std::size_t m = 0; m < C.arrow_count(); ++m)
    os << "arrow " << C.arrow_names[m] << " " << C.objects[static_cast<std::size_t>(C.src[m])] << " "
       << C.objects[static_cast<std::size_t>(C.dst[m])] << "\n";
  for (std::size_t x = 0; x < C.objects.size(); ++x)
    os << "identity " << C.objects[x] << " " << C.arrow_names[static_cast<std::size_t>(C.identity[x])]
       << "\n";
  for (std::size_t g = 0; g < C.arrow_count(); ++g)
    for (std::size_t f = 0; f < C.arrow_count(); ++f)
      if (C.dst[f] == C.src[g])
        os << "compose " << C.arrow_names[g] << " " << C.arrow_names[f] << " "
           << C.arrow_names[static_cast<std::size_t>(C.comp[g][f])] << "\n";
}

FinCategory parse_fincategory_body(Lines& in) {
  FinCategory C;
  while (!in.done() && in.peek()[0] == "object") {
    auto t = in.next();
    if (t.size() != 2) in.fail("expected 'object <name>'");
    C.objects.push_back(t[1]);
  }
  auto obj_index = [&](const std::string& name) {
    for (std::size_t i = 0; i < C.objects.size(); ++i)
      if (C.objects[i] == name) return static_cast<int>(i);
    in.fail("unknown object '" + name + "'");
  };
  while (!in.done() && in.peek()[0] == "arrow") {
    auto t = in.next();
    if (t.size() != 4) in.fail("expected 'arrow <name> <src> <dst>'");
    C.arrow_names.push_back(t[1]);
    C.src.push_back(obj_index(t[2]));
    C.dst.push_back(obj_index(t[3]));
  }
  auto arrow_index = [&](const std::string& name) {
    for (std::size_t i = 0; i < C.arrow_names.size(); ++i)
      if (C.arrow_names[i] == name) return static_cast<int>(i);
    in.fail("unknown arrow '" + name + "'");
  };
  C.identity.assign(C.objects.size(), -1);
  for (std::size_t k = 0; k < C.objects.size(); ++k) {
    auto t = in.next();
    if (t.size() != 3 || t[0] != "identity") in.fail("expected 'identity <obj> <arrow>'");
    C.identity[static_cast<std::size_t>(obj_index(t[1]))] = arrow_index(t[2]);
  }
  C.comp.assign(C.arrow_count(), std::vector<int>(C.arrow_count(), -1));
  while (!in.done() && in.peek()[0] == "compose") {
    auto t = in.next();
    if (t.size() != 4) in.fail("expected 'compose <g> <f> <r>'");
    C.comp[static_cast<std::size_t>(arrow_index(t[1]))][static_cast<std::size_t>(arrow_index(t[2]))] =
        arrow_index(t[3]);
  }
  for (std::size_t g = 0; g < C.arrow_count(); ++g)
    for (std::size_t f = 0; f < C.arrow_count(); ++f)
      if (C.dst[f] == C.src[g] && C.comp[g][f] < 0) in.fail("composition table incomplete");
  return C;
}

}  // namespace

std::string save_fincategory(const FinCategory& C) {
  std::ostringstream os;
  os << "qsheaf fincategory 1\n";
  emit_fincategory_body(os, C);
  os << "end\n";
  return os.str();
}

FinCategory load_fincategory(const std::string& text) {
  Lines in = tokenize(text);
  expect_header(in, "fincategory");
  FinCategory C = parse_fincategory_body(in);
  expect_line(in, "end");
  return C;
}

std::string save_profunctor(const Profunctor& p) {
  std::ostringstream os;
  os << "qsheaf profunctor 1\n";
  os << "begin dom\n";
  emit_fincategory_body(os, *p.dom);
  os << "end dom\n";
  os << "begin cod\n";
  emit_fincategory_body(os, *p.cod);
  os << "end cod\n";
  const FinCategory& A = *p.dom;
  const FinCategory& C = *p.cod;
  for (std::size_t c = 0; c < C.objects.size(); ++c)
    for (std::size_t a = 0; a < A.objects.size(); ++a) {
      os << "value " << C.objects[c] << " " << A.objects[a] << " " << p.value[c][a].size();
      for (const auto& e : p.value[c][a]) os << " " << e;
      os << "\n";
    }
  for (std::size_t m = 0; m < C.arrow_count(); ++m)
    for (std::size_t a = 0; a < A.objects.size(); ++a)
      for (std::size_t v = 0; v < p.value[static_cast<std::size_t>(C.src[m])][a].size(); ++v)
        os << "lact " << C.arrow_names[m] << " " << A.objects[a] << " "
           << p.value[static_cast<std::size_t>(C.src[m])][a][v] << " "
           << p.value[static_cast<std::size_t>(C.dst[m])][a][static_cast<std::size_t>(p.left_act[m][a][v])]
           << "\n";
  for (std::size_t m = 0; m < A.arrow_count(); ++m)
    for (std::size_t c = 0; c < C.objects.size(); ++c)
      for (std::size_t v = 0; v < p.value[c][static_cast<std::size_t>(A.dst[m])].size(); ++v)
        os << "ract " << A.arrow_names[m] << " " << C.objects[c] << " "
           << p.value[c][static_cast<std::size_t>(A.dst[m])][v] << " "
           << p.value[c][static_cast<std::size_t>(A.src[m])][static_cast<std::size_t>(p.right_act[m][c][v])]
           << "\n";
  os << "end\n";
  return os.str();
}

ProfunctorDoc load_profunctor(const std::string& text) {
  Lines in = tokenize(text);
  expect_header(in, "profunctor");
  ProfunctorDoc doc;
  expect_line(in, "begin dom");
  doc.dom = std::make_shared<FinCategory>(parse_fincategory_body(in));
  expect_line(in, "end dom");
  expect_line(in, "begin cod");
  doc.cod = std::make_shared<FinCategory>(parse_fincategory_body(in));
  expect_line(in, "end cod");
  const FinCategory& A = *doc.dom;
  const FinCategory& C = *doc.cod;
  doc.p.dom = doc.dom.get();
  doc.p.cod = doc.cod.get();
  auto obj_index = [&](const FinCategory& cat, const std::string& name) {
    for (std::size_t i = 0; i < cat.objects.size(); ++i)
      if (cat.objects[i] == name) return static_cast<int>(i);
    in.fail("unknown object '" + name + "'");
  };
  auto arrow_index = [&](const FinCategory& cat, const std::string& name) {
    for (std::size_t i = 0; i < cat.arrow_names.size(); ++i)
      if (cat.arrow_names[i] == name) return static_cast<int>(i);
    in.fail("unknown arrow '" + name + "'");
  };
  doc.p.value.assign(C.objects.size(), std::vector<std::vector<std::string>>(A.objects.size()));
  for (std::size_t k = 0; k < C.objects.size() * A.objects.size(); ++k) {
    auto t = in.next();
    if (t.size() < 4 || t[0] != "value") in.fail("expected 'value <c> <a> <k> ...'");
    const int c = obj_index(C, t[1]);
    const int a = obj_index(A, t[2]);
    const int cnt = parse_int(in, t[3]);
    if (static_cast<int>(t.size()) != 4 + cnt) in.fail("value line has wrong element count");
    doc.p.value[static_cast<std::size_t>(c)][static_cast<std::size_t>(a)].assign(t.begin() + 4, t.end());
  }
  auto value_index = [&](std::size_t c, std::size_t a, const std::string& name) {
    const auto& v = doc.p.value[c][a];
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] == name) return static_cast<int>(i);
    in.fail("unknown profunctor element '" + name + "'");
  };
  doc.p.left_act.resize(C.arrow_count());
  for (std::size_t m = 0; m < C.arrow_count(); ++m) {
    doc.p.left_act[m].resize(A.objects.size());
    for (std::size_t a = 0; a < A.objects.size(); ++a)
      doc.p.left_act[m][a].assign(doc.p.value[static_cast<std::size_t>(C.src[m])][a].size(), -1);
  }
  doc.p.right_act.resize(A.arrow_count());
  for (std::size_t m = 0; m < A.arrow_count(); ++m) {
    doc.p.right_act[m].resize(C.objects.size());
    for (std::size_t c = 0; c < C.objects.size(); ++c)
      doc.p.right_act[m][c].assign(doc.p.value[c][static_cast<std::size_t>(A.dst[m])].size(), -1);
  }
  while (!in.done() && (in.peek()[0] == "lact" || in.peek()[0] == "ract")) {
    auto t = in.next();
    if (t.size() != 5) in.fail("expected 'lact|ract <arrow> <obj> <from> <to>'");
    if (t[0] == "lact") {
      const int m = arrow_index(C, t[1]);
      const int a = obj_index(A, t[2]);
      doc.p.left_act[static_cast<std::size_t>(m)][static_cast<std::size_t>(a)][static_cast<std::size_t>(
          value_index(static_cast<std::size_t>(C.src[static_cast<std::size_t>(m)]),
                      static_cast<std::size_t>(a), t[3]))] =
          value_index(static_cast<std::size_t>(C.dst[static_cast<std::size_t>(m)]),
                      static_cast<std::size_t>(a), t[4]);
    } else {
      const int m = arrow_index(A, t[1]);
      const int c = obj_index(C, t[2]);
      doc.p.right_act[static_cast<std::size_t>(m)][static_cast<std::size_t>(c)][static_cast<std::size_t>(
          value_index(static_cast<std::size_t>(c),
                      static_cast<std::size_t>(A.dst[static_cast<std::size_t>(m)]), t[3]))] =
          value_index(static_cast<std::size_t>(c),
                      static_cast<std::size_t>(A.src[static_cast<std::size_t>(m)]), t[4]);
    }
  }
  for (const auto& per_arrow : doc.p.left_act)
    for (const auto& row : per_arrow)
      for (int v : row)
        if (v < 0) in.fail("left action tables incomplete");
  for (const auto& per_arrow : doc.p.right_act)
    for (const auto& row : per_arrow)
      for (int v : row)
        if (v < 0) in.fail("right action tables incomplete");
  expect_line(in, "end");
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

}  // namespace qsheaf
