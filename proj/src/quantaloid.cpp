#include "qsheaf/quantaloid.hpp"

#include <algorithm>
#include <map>

namespace qsheaf {

Quantaloid::Quantaloid(std::vector<std::string> objects, std::vector<SupLattice> homs,
                       std::vector<std::vector<int>> compose_tables, std::vector<int> identities,
                       std::optional<std::vector<std::vector<int>>> involution)
    : objects_(std::move(objects)),
      homs_(std::move(homs)),
      compose_tables_(std::move(compose_tables)),
      identities_(std::move(identities)),
      involution_(std::move(involution)) {
  const std::size_t n = objects_.size();
  if (homs_.size() != n * n) throw Error("Quantaloid: expected one hom lattice per object pair");
  if (compose_tables_.size() != n * n * n) throw Error("Quantaloid: expected one compose table per triple");
  if (identities_.size() != n) throw Error("Quantaloid: expected one identity per object");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const auto& t = compose_tables_[(x * n + y) * n + z];
        const std::size_t want = hom(static_cast<int>(x), static_cast<int>(y)).size() *
                                 hom(static_cast<int>(y), static_cast<int>(z)).size();
        if (t.size() != want) throw Error("Quantaloid: compose table has wrong shape");
      }
  if (involution_) {
    if (involution_->size() != n * n) throw Error("Quantaloid: involution table has wrong shape");
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if ((*involution_)[x * n + y].size() != homs_[x * n + y].size())
          throw Error("Quantaloid: involution table has wrong shape");
  }
}

int Quantaloid::object_index(const std::string& name) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == name) return static_cast<int>(i);
  throw Error("Quantaloid: unknown object '" + name + "'");
}

std::size_t Quantaloid::hom_slot(int src, int dst) const {
  const std::size_t n = objects_.size();
  if (src < 0 || dst < 0 || static_cast<std::size_t>(src) >= n || static_cast<std::size_t>(dst) >= n)
    throw Error("Quantaloid: object index out of range");
  return static_cast<std::size_t>(src) * n + static_cast<std::size_t>(dst);
}

std::size_t Quantaloid::triple_slot(int x, int y, int z) const {
  const std::size_t n = objects_.size();
  return (static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)) * n + static_cast<std::size_t>(z);
}

const SupLattice& Quantaloid::hom(int src, int dst) const { return homs_[hom_slot(src, dst)]; }

void Quantaloid::check_cell(const Cell& c) const {
  const SupLattice& L = hom(c.src, c.dst);
  if (c.elt < 0 || static_cast<std::size_t>(c.elt) >= L.size())
    throw Error("Quantaloid: cell element out of range");
}

Cell Quantaloid::cell(const std::string& src, const std::string& dst, const std::string& elt) const {
  const int s = object_index(src);
  const int d = object_index(dst);
  return {s, d, hom(s, d).index(elt)};
}

std::string Quantaloid::cell_str(const Cell& c) const {
  return hom(c.src, c.dst).name(c.elt) + ":" + object_name(c.src) + ">" + object_name(c.dst);
}

Cell Quantaloid::compose(const Cell& g, const Cell& f) const {
  check_cell(g);
  check_cell(f);
  if (f.dst != g.src)
    throw Error("Quantaloid: compose shape mismatch (" + cell_str(g) + " after " + cell_str(f) + ")");
  const auto& table = compose_tables_[triple_slot(f.src, f.dst, g.dst)];
  const std::size_t stride = hom(f.src, f.dst).size();
  return {f.src, g.dst, table[static_cast<std::size_t>(g.elt) * stride + static_cast<std::size_t>(f.elt)]};
}

Cell Quantaloid::identity(int x) const {
  (void)hom_slot(x, x);
  return {x, x, identities_[static_cast<std::size_t>(x)]};
}

Cell Quantaloid::involution(const Cell& c) const {
  if (!involution_) throw Error("Quantaloid: no involution");
  check_cell(c);
  const std::size_t n = objects_.size();
  return {c.dst, c.src,
          (*involution_)[static_cast<std::size_t>(c.src) * n + static_cast<std::size_t>(c.dst)]
                        [static_cast<std::size_t>(c.elt)]};
}

bool Quantaloid::leq(const Cell& a, const Cell& b) const {
  check_cell(a);
  check_cell(b);
  if (a.src != b.src || a.dst != b.dst) throw Error("Quantaloid: order compares parallel cells only");
  return hom(a.src, a.dst).leq(a.elt, b.elt);
}

Cell Quantaloid::join(int src, int dst, const std::vector<int>& elts) const {
  return {src, dst, hom(src, dst).join(elts)};
}

Cell Quantaloid::meet(int src, int dst, const std::vector<int>& elts) const {
  return {src, dst, hom(src, dst).meet(elts)};
}

Cell Quantaloid::residual_right(const Cell& f, const Cell& g) const {
  check_cell(f);
  check_cell(g);
  if (f.src != g.src) throw Error("Quantaloid: residual_right needs a common domain");
  const SupLattice& H = hom(f.dst, g.dst);
  std::vector<int> good;
  for (std::size_t h = 0; h < H.size(); ++h) {
    Cell hc{f.dst, g.dst, static_cast<int>(h)};
    if (leq(compose(hc, f), g)) good.push_back(static_cast<int>(h));
  }
  return join(f.dst, g.dst, good);
}

Cell Quantaloid::residual_left(const Cell& f, const Cell& g) const {
  check_cell(f);
  check_cell(g);
  if (f.dst != g.dst) throw Error("Quantaloid: residual_left needs a common codomain");
  const SupLattice& H = hom(g.src, f.src);
  std::vector<int> good;
  for (std::size_t h = 0; h < H.size(); ++h) {
    Cell hc{g.src, f.src, static_cast<int>(h)};
    if (leq(compose(f, hc), g)) good.push_back(static_cast<int>(h));
  }
  return join(g.src, f.src, good);
}

std::vector<MapCell> Quantaloid::enumerate_maps(bool symmetric_only) const {
  std::vector<MapCell> out;
  const int n = static_cast<int>(objects_.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const SupLattice& fwd = hom(x, y);
      const SupLattice& bwd = hom(y, x);
      for (std::size_t f = 0; f < fwd.size(); ++f)
        for (std::size_t a = 0; a < bwd.size(); ++a) {
          Cell fc{x, y, static_cast<int>(f)};
          Cell ac{y, x, static_cast<int>(a)};
          if (!leq(identity(x), compose(ac, fc))) continue;
          if (!leq(compose(fc, ac), identity(y))) continue;
          MapCell m{x, y, static_cast<int>(f), static_cast<int>(a), false};
          m.symmetric = involution_ && involution(fc) == ac;
          if (symmetric_only && !m.symmetric) continue;
          out.push_back(m);
        }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<MapCell> Quantaloid::find_map(int src, int dst, int forward) const {
  const SupLattice& bwd = hom(dst, src);
  Cell fc{src, dst, forward};
  for (std::size_t a = 0; a < bwd.size(); ++a) {
    Cell ac{dst, src, static_cast<int>(a)};
    if (leq(identity(src), compose(ac, fc)) && leq(compose(fc, ac), identity(dst))) {
      MapCell m{src, dst, forward, static_cast<int>(a), false};
      m.symmetric = involution_ && involution(fc) == ac;
      return m;
    }
  }
  return std::nullopt;
}

bool Quantaloid::is_map_dense() const {
  const auto maps = enumerate_maps(false);
  const int n = static_cast<int>(objects_.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const SupLattice& H = hom(x, y);
      for (std::size_t f = 0; f < H.size(); ++f) {
        Cell fc{x, y, static_cast<int>(f)};
        std::vector<int> below;
        for (const MapCell& m : maps)
          if (m.src == x && m.dst == y && leq(m.forward_cell(), fc)) below.push_back(m.forward);
        if (join(x, y, below) != fc) return false;
      }
    }
  return true;
}

Report Quantaloid::validate() const {
  Report report;
  const int n = static_cast<int>(objects_.size());
  if (n == 0) {
    report.add("quantaloid: no objects");
    return report;
  }
  {
    std::vector<std::string> sorted = objects_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      report.add("quantaloid: duplicate object name");
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Report r = hom(x, y).validate();
      for (auto& issue : r.issues)
        report.add("hom(" + object_name(x) + "," + object_name(y) + "): " + issue);
    }
  if (!report.ok()) return report;

  auto cells_of = [&](int x, int y) {
    std::vector<Cell> cs;
    for (std::size_t e = 0; e < hom(x, y).size(); ++e) cs.push_back({x, y, static_cast<int>(e)});
    return cs;
  };

  // associativity and unitality
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (const Cell& f : cells_of(x, y))
          for (const Cell& g : cells_of(y, z)) {
            for (int w = 0; w < n; ++w)
              for (const Cell& h : cells_of(z, w))
                if (compose(h, compose(g, f)) != compose(compose(h, g), f)) {
                  report.add("quantaloid: composition not associative at " + cell_str(h) + ", " + cell_str(g) +
                             ", " + cell_str(f));
                  goto assoc_done;
                }
          }
assoc_done:
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (const Cell& f : cells_of(x, y)) {
        if (compose(f, identity(x)) != f)
          report.add("quantaloid: identity on " + object_name(x) + " is not a right unit at " + cell_str(f));
        if (compose(identity(y), f) != f)
          report.add("quantaloid: identity on " + object_name(y) + " is not a left unit at " + cell_str(f));
      }

  // sup-preservation in each argument: empty and binary joins suffice.
  for (int x = 0; x < n && report.ok(); ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const Cell bot_xy = bottom(x, y);
        const Cell bot_yz = bottom(y, z);
        for (const Cell& f : cells_of(x, y))
          if (compose(bot_yz, f) != bottom(x, z))
            report.add("quantaloid: composition does not preserve bottom (post " + cell_str(f) + ")");
        for (const Cell& g : cells_of(y, z))
          if (compose(g, bot_xy) != bottom(x, z))
            report.add("quantaloid: composition does not preserve bottom (pre " + cell_str(g) + ")");
        for (const Cell& g : cells_of(y, z))
          for (const Cell& f1 : cells_of(x, y))
            for (const Cell& f2 : cells_of(x, y)) {
              Cell lhs = compose(g, join(x, y, {f1.elt, f2.elt}));
              Cell rhs = join(x, z, {compose(g, f1).elt, compose(g, f2).elt});
              if (lhs != rhs)
                report.add("quantaloid: precomposition with " + cell_str(g) + " does not preserve joins");
            }
        for (const Cell& f : cells_of(x, y))
          for (const Cell& g1 : cells_of(y, z))
            for (const Cell& g2 : cells_of(y, z)) {
              Cell lhs = compose(join(y, z, {g1.elt, g2.elt}), f);
              Cell rhs = join(x, z, {compose(g1, f).elt, compose(g2, f).elt});
              if (lhs != rhs)
                report.add("quantaloid: postcomposition with " + cell_str(f) + " does not preserve joins");
            }
      }

  if (involution_) {
    for (int x = 0; x < n; ++x) {
      if (involution(identity(x)) != identity(x))
        report.add("quantaloid: involution does not fix the identity on " + object_name(x));
      for (int y = 0; y < n; ++y) {
        for (const Cell& f : cells_of(x, y)) {
          if (involution(involution(f)) != f)
            report.add("quantaloid: involution not self-inverse at " + cell_str(f));
          for (const Cell& g : cells_of(x, y))
            if (leq(f, g) && !leq(involution(f), involution(g)))
              report.add("quantaloid: involution not order-preserving at " + cell_str(f));
        }
        for (int z = 0; z < n; ++z)
          for (const Cell& f : cells_of(x, y))
            for (const Cell& g : cells_of(y, z))
              if (involution(compose(g, f)) != compose(involution(f), involution(g)))
                report.add("quantaloid: involution not contravariant at " + cell_str(g) + ", " + cell_str(f));
      }
    }
  }
  return report;
}

namespace {

std::set<int> set_union(const std::set<int>& a, const std::set<int>& b) {
  std::set<int> out = a;
  out.insert(b.begin(), b.end());
  return out;
}

std::set<int> set_intersect(const std::set<int>& a, const std::set<int>& b) {
  std::set<int> out;
  for (int p : a)
    if (b.count(p)) out.insert(p);
  return out;
}

}  // namespace

Quantaloid from_topology(const std::vector<std::pair<std::string, std::set<int>>>& opens) {
  if (opens.empty()) throw Error("from_topology: no opens given");
  std::map<std::set<int>, std::string> by_set;
  std::set<int> total;
  for (const auto& [name, pts] : opens) {
    if (!by_set.emplace(pts, name).second) throw Error("from_topology: duplicate open '" + name + "'");
    total = set_union(total, pts);
  }
  if (!by_set.count(std::set<int>{})) throw Error("from_topology: the empty set is not an open");
  if (!by_set.count(total)) throw Error("from_topology: the total set is not an open");
  for (const auto& [a, an] : by_set)
    for (const auto& [b, bn] : by_set) {
      if (!by_set.count(set_union(a, b)))
        throw Error("from_topology: not closed under union ('" + an + "', '" + bn + "')");
      if (!by_set.count(set_intersect(a, b)))
        throw Error("from_topology: not closed under intersection ('" + an + "', '" + bn + "')");
    }

  // Canonical object order: lexicographic on names.
  std::vector<std::pair<std::string, std::set<int>>> objs(opens);
  std::sort(objs.begin(), objs.end());
  const std::size_t n = objs.size();

  std::vector<std::string> names;
  for (const auto& [name, pts] : objs) names.push_back(name);

  // hom(A,B): opens below A and B, ordered by inclusion.
  std::vector<std::vector<int>> hom_opens(n * n);  // indices into objs
  std::vector<SupLattice> homs(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::set<int> cap = set_intersect(objs[a].second, objs[b].second);
      std::vector<std::string> elems;
      for (std::size_t w = 0; w < n; ++w)
        if (set_intersect(objs[w].second, cap) == objs[w].second) {
          hom_opens[a * n + b].push_back(static_cast<int>(w));
          elems.push_back(objs[w].first);
        }
      const std::size_t m = elems.size();
      std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          const auto& wi = objs[static_cast<std::size_t>(hom_opens[a * n + b][i])].second;
          const auto& wj = objs[static_cast<std::size_t>(hom_opens[a * n + b][j])].second;
          leq[i][j] = set_intersect(wi, wj) == wi;
        }
      homs[a * n + b] = SupLattice(std::move(elems), std::move(leq));
    }

  std::vector<std::vector<int>> tables(n * n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const auto& fs = hom_opens[x * n + y];
        const auto& gs = hom_opens[y * n + z];
        auto& table = tables[(x * n + y) * n + z];
        table.resize(fs.size() * gs.size());
        for (std::size_t g = 0; g < gs.size(); ++g)
          for (std::size_t f = 0; f < fs.size(); ++f) {
            const std::set<int> w = set_intersect(objs[static_cast<std::size_t>(gs[g])].second,
                                                  objs[static_cast<std::size_t>(fs[f])].second);
            int idx = -1;
            const auto& xs = hom_opens[x * n + z];
            for (std::size_t k = 0; k < xs.size(); ++k)
              if (objs[static_cast<std::size_t>(xs[k])].second == w) idx = static_cast<int>(k);
            table[g * fs.size() + f] = idx;
          }
      }

  std::vector<int> identities(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto& xs = hom_opens[x * n + x];
    identities[x] = -1;
    for (std::size_t k = 0; k < xs.size(); ++k)
      if (static_cast<std::size_t>(xs[k]) == x) identities[x] = static_cast<int>(k);
  }

  // Involution keeps the open and swaps direction.
  std::vector<std::vector<int>> inv(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto& fwd = hom_opens[a * n + b];
      const auto& bwd = hom_opens[b * n + a];
      inv[a * n + b].resize(fwd.size());
      for (std::size_t e = 0; e < fwd.size(); ++e) {
        int idx = -1;
        for (std::size_t k = 0; k < bwd.size(); ++k)
          if (bwd[k] == fwd[e]) idx = static_cast<int>(k);
        inv[a * n + b][e] = idx;
      }
    }

  return Quantaloid(std::move(names), std::move(homs), std::move(tables), std::move(identities),
                    std::move(inv));
}

Quantaloid from_quantale(const std::vector<std::string>& elements,
                         const std::vector<std::pair<std::string, std::string>>& leq_pairs,
                         const std::vector<std::vector<std::string>>& tensor, const std::string& unit,
                         bool with_involution) {
  SupLattice L = SupLattice::from_pairs(elements, leq_pairs);
  const std::size_t m = elements.size();
  const int unit_idx = L.index(unit);
  if (tensor.size() != m) throw Error("from_quantale: tensor table has wrong shape");
  std::vector<int> table(m * m);
  for (std::size_t g = 0; g < m; ++g) {
    if (tensor[g].size() != m) throw Error("from_quantale: tensor table has wrong shape");
    for (std::size_t f = 0; f < m; ++f) table[g * m + f] = L.index(tensor[g][f]);
  }
  std::optional<std::vector<std::vector<int>>> inv;
  if (with_involution) {
    std::vector<int> ident(m);
    for (std::size_t e = 0; e < m; ++e) ident[e] = static_cast<int>(e);
    inv = std::vector<std::vector<int>>{ident};
  }
  Quantaloid Q({"*"}, {std::move(L)}, {std::move(table)}, {unit_idx}, std::move(inv));
  Report r = Q.validate();
  if (!r.ok()) throw Error("from_quantale: invalid quantale:\n" + r.str());
  return Q;
}

Quantaloid metric_quantale(int step, int cap) {
  if (step <= 0 || cap < 0 || cap % step != 0) throw Error("metric_quantale: bad step/cap");
  std::vector<int> values;
  for (int v = 0; v <= cap; v += step) values.push_back(v);
  const int inf = -1;
  values.push_back(inf);
  auto name = [&](int v) { return v == inf ? std::string("inf") : std::to_string(v); };
  auto plus = [&](int a, int b) {
    if (a == inf || b == inf) return inf;
    return a + b > cap ? inf : a + b;
  };

  std::vector<std::string> elems;
  for (int v : values) elems.push_back(name(v));
  std::vector<std::pair<std::string, std::string>> pairs;
  // Reversed order: numerically larger distances sit lower; 0 is the top.
  for (int a : values)
    for (int b : values) {
      const bool num_geq = (a == inf) || (b != inf && a >= b);
      if (num_geq) pairs.emplace_back(name(a), name(b));
    }
  std::vector<std::vector<std::string>> tensor(values.size(), std::vector<std::string>(values.size()));
  for (std::size_t g = 0; g < values.size(); ++g)
    for (std::size_t f = 0; f < values.size(); ++f) tensor[g][f] = name(plus(values[g], values[f]));
  return from_quantale(elems, pairs, tensor, "0", true);
}

}  // namespace qsheaf
