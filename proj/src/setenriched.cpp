#include "qsheaf/setenriched.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace qsheaf {

int FinCategory::compose(int g, int f) const {
  if (dst[static_cast<std::size_t>(f)] != src[static_cast<std::size_t>(g)])
    throw Error("FinCategory: arrows do not compose");
  const int r = comp[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)];
  if (r < 0) throw Error("FinCategory: composition table incomplete");
  return r;
}

std::vector<int> FinCategory::hom(int a, int b) const {
  std::vector<int> out;
  for (std::size_t m = 0; m < arrow_count(); ++m)
    if (src[m] == a && dst[m] == b) out.push_back(static_cast<int>(m));
  return out;
}

Report validate_fincategory(const FinCategory& C) {
  Report report;
  const std::size_t n = C.arrow_count();
  if (C.src.size() != n || C.dst.size() != n || C.comp.size() != n) {
    report.add("fincategory: ragged arrow tables");
    return report;
  }
  for (const auto& row : C.comp)
    if (row.size() != n) {
      report.add("fincategory: ragged composition table");
      return report;
    }
  if (C.identity.size() != C.objects.size()) {
    report.add("fincategory: expected one identity per object");
    return report;
  }
  for (std::size_t m = 0; m < n; ++m)
    if (C.src[m] < 0 || C.dst[m] < 0 || static_cast<std::size_t>(C.src[m]) >= C.objects.size() ||
        static_cast<std::size_t>(C.dst[m]) >= C.objects.size()) {
      report.add("fincategory: arrow endpoints out of range");
      return report;
    }
  {
    std::vector<std::string> names = C.arrow_names;
    std::sort(names.begin(), names.end());
    if (std::adjacent_find(names.begin(), names.end()) != names.end())
      report.add("fincategory: duplicate arrow name");
  }
  for (std::size_t x = 0; x < C.objects.size(); ++x) {
    const int e = C.identity[x];
    if (e < 0 || static_cast<std::size_t>(e) >= n || C.src[static_cast<std::size_t>(e)] != static_cast<int>(x) ||
        C.dst[static_cast<std::size_t>(e)] != static_cast<int>(x)) {
      report.add("fincategory: bad identity on '" + C.objects[x] + "'");
      return report;
    }
  }
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f) {
      const bool composable = C.dst[f] == C.src[g];
      const int r = C.comp[g][f];
      if (composable) {
        if (r < 0 || static_cast<std::size_t>(r) >= n) {
          report.add("fincategory: missing composite " + C.arrow_names[g] + " . " + C.arrow_names[f]);
          return report;
        }
        if (C.src[static_cast<std::size_t>(r)] != C.src[f] || C.dst[static_cast<std::size_t>(r)] != C.dst[g])
          report.add("fincategory: composite " + C.arrow_names[g] + " . " + C.arrow_names[f] +
                     " has wrong endpoints");
      } else if (r >= 0) {
        report.add("fincategory: table defines a non-composable pair");
      }
    }
  if (!report.ok()) return report;
  for (std::size_t m = 0; m < n; ++m) {
    if (C.compose(static_cast<int>(m), C.identity[static_cast<std::size_t>(C.src[m])]) !=
        static_cast<int>(m))
      report.add("fincategory: right unit law fails at " + C.arrow_names[m]);
    if (C.compose(C.identity[static_cast<std::size_t>(C.dst[m])], static_cast<int>(m)) !=
        static_cast<int>(m))
      report.add("fincategory: left unit law fails at " + C.arrow_names[m]);
  }
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t g = 0; g < n; ++g) {
      if (C.dst[g] != C.src[h]) continue;
      for (std::size_t f = 0; f < n; ++f) {
        if (C.dst[f] != C.src[g]) continue;
        if (C.compose(static_cast<int>(h), C.compose(static_cast<int>(g), static_cast<int>(f))) !=
            C.compose(C.compose(static_cast<int>(h), static_cast<int>(g)), static_cast<int>(f)))
          report.add("fincategory: associativity fails at " + C.arrow_names[h] + ", " + C.arrow_names[g] +
                     ", " + C.arrow_names[f]);
      }
    }
  return report;
}

Report validate_finfunctor(const FinFunctor& f) {
  Report report;
  const FinCategory& C = *f.dom;
  const FinCategory& D = *f.cod;
  if (f.on_obj.size() != C.objects.size() || f.on_arrow.size() != C.arrow_count()) {
    report.add("finfunctor: wrong table sizes");
    return report;
  }
  for (std::size_t m = 0; m < C.arrow_count(); ++m) {
    const int fm = f.on_arrow[m];
    if (fm < 0 || static_cast<std::size_t>(fm) >= D.arrow_count()) {
      report.add("finfunctor: arrow image out of range");
      return report;
    }
    if (D.src[static_cast<std::size_t>(fm)] != f.on_obj[static_cast<std::size_t>(C.src[m])] ||
        D.dst[static_cast<std::size_t>(fm)] != f.on_obj[static_cast<std::size_t>(C.dst[m])])
      report.add("finfunctor: endpoints not preserved at " + C.arrow_names[m]);
  }
  if (!report.ok()) return report;
  for (std::size_t x = 0; x < C.objects.size(); ++x)
    if (f.on_arrow[static_cast<std::size_t>(C.identity[x])] !=
        D.identity[static_cast<std::size_t>(f.on_obj[x])])
      report.add("finfunctor: identity not preserved on '" + C.objects[x] + "'");
  for (std::size_t g = 0; g < C.arrow_count(); ++g)
    for (std::size_t fa = 0; fa < C.arrow_count(); ++fa) {
      if (C.dst[fa] != C.src[g]) continue;
      if (f.on_arrow[static_cast<std::size_t>(C.comp[g][fa])] !=
          D.compose(f.on_arrow[g], f.on_arrow[fa]))
        report.add("finfunctor: composition not preserved at " + C.arrow_names[g] + " . " +
                   C.arrow_names[fa]);
    }
  return report;
}

std::vector<FinFunctor> enumerate_functors(const FinCategory& C, const FinCategory& D) {
  std::vector<FinFunctor> out;
  std::vector<int> on_obj(C.objects.size(), -1);
  std::vector<int> on_arrow(C.arrow_count(), -1);

  std::function<void(std::size_t)> arrows = [&](std::size_t m) {
    if (m == C.arrow_count()) {
      FinFunctor f{&C, &D, on_obj, on_arrow};
      if (validate_finfunctor(f).ok()) out.push_back(std::move(f));
      return;
    }
    // identities are forced
    bool forced = false;
    for (std::size_t x = 0; x < C.objects.size(); ++x)
      if (C.identity[x] == static_cast<int>(m)) {
        on_arrow[m] = D.identity[static_cast<std::size_t>(on_obj[x])];
        arrows(m + 1);
        on_arrow[m] = -1;
        forced = true;
        break;
      }
    if (forced) return;
    for (std::size_t d = 0; d < D.arrow_count(); ++d) {
      if (D.src[d] != on_obj[static_cast<std::size_t>(C.src[m])] ||
          D.dst[d] != on_obj[static_cast<std::size_t>(C.dst[m])])
        continue;
      bool ok = true;
      // incremental composition checks against already-assigned arrows
      for (std::size_t g = 0; g < C.arrow_count() && ok; ++g) {
        if (on_arrow[g] < 0 && g != m) continue;
        const int ig = (g == m) ? static_cast<int>(d) : on_arrow[g];
        if (C.dst[m] == C.src[g]) {
          const int c = C.comp[g][m];
          if (on_arrow[static_cast<std::size_t>(c)] >= 0 || static_cast<std::size_t>(c) == m)
            ok = (static_cast<std::size_t>(c) == m ? static_cast<int>(d)
                                                   : on_arrow[static_cast<std::size_t>(c)]) ==
                 D.compose(ig, static_cast<int>(d));
        }
        if (ok && C.dst[g] == C.src[m]) {
          const int c = C.comp[m][g];
          if (on_arrow[static_cast<std::size_t>(c)] >= 0 || static_cast<std::size_t>(c) == m)
            ok = (static_cast<std::size_t>(c) == m ? static_cast<int>(d)
                                                   : on_arrow[static_cast<std::size_t>(c)]) ==
                 D.compose(static_cast<int>(d), ig);
        }
      }
      if (!ok) continue;
      on_arrow[m] = static_cast<int>(d);
      arrows(m + 1);
      on_arrow[m] = -1;
    }
  };

  std::function<void(std::size_t)> objects = [&](std::size_t x) {
    if (x == C.objects.size()) {
      arrows(0);
      return;
    }
    for (std::size_t d = 0; d < D.objects.size(); ++d) {
      on_obj[x] = static_cast<int>(d);
      objects(x + 1);
      on_obj[x] = -1;
    }
  };
  objects(0);
  std::sort(out.begin(), out.end());
  return out;
}

Report validate_profunctor(const Profunctor& p) {
  Report report;
  const FinCategory& A = *p.dom;
  const FinCategory& C = *p.cod;
  if (p.value.size() != C.objects.size()) {
    report.add("profunctor: value table has wrong shape");
    return report;
  }
  for (const auto& row : p.value)
    if (row.size() != A.objects.size()) {
      report.add("profunctor: value table has wrong shape");
      return report;
    }
  if (p.left_act.size() != C.arrow_count() || p.right_act.size() != A.arrow_count()) {
    report.add("profunctor: action tables have wrong shape");
    return report;
  }
  auto check_fun = [&](const std::vector<int>& fun, std::size_t from, std::size_t to, const std::string& what) {
    if (fun.size() != from) {
      report.add("profunctor: " + what + " has wrong shape");
      return false;
    }
    for (int v : fun)
      if (v < 0 || static_cast<std::size_t>(v) >= to) {
        report.add("profunctor: " + what + " out of range");
        return false;
      }
    return true;
  };
  for (std::size_t narr = 0; narr < C.arrow_count(); ++narr)
    for (std::size_t a = 0; a < A.objects.size(); ++a)
      if (!check_fun(p.left_act[narr][a], p.value[static_cast<std::size_t>(C.src[narr])][a].size(),
                     p.value[static_cast<std::size_t>(C.dst[narr])][a].size(),
                     "left action along " + C.arrow_names[narr]))
        return report;
  for (std::size_t marr = 0; marr < A.arrow_count(); ++marr)
    for (std::size_t c = 0; c < C.objects.size(); ++c)
      if (!check_fun(p.right_act[marr][c], p.value[c][static_cast<std::size_t>(A.dst[marr])].size(),
                     p.value[c][static_cast<std::size_t>(A.src[marr])].size(),
                     "right action along " + A.arrow_names[marr]))
        return report;

  // identity and composition laws for both actions, then bimodule compatibility
  for (std::size_t x = 0; x < C.objects.size(); ++x)
    for (std::size_t a = 0; a < A.objects.size(); ++a)
      for (std::size_t v = 0; v < p.value[x][a].size(); ++v)
        if (p.left_act[static_cast<std::size_t>(C.identity[x])][a][v] != static_cast<int>(v))
          report.add("profunctor: identity left action is not the identity");
  for (std::size_t x = 0; x < A.objects.size(); ++x)
    for (std::size_t c = 0; c < C.objects.size(); ++c)
      for (std::size_t v = 0; v < p.value[c][x].size(); ++v)
        if (p.right_act[static_cast<std::size_t>(A.identity[x])][c][v] != static_cast<int>(v))
          report.add("profunctor: identity right action is not the identity");
  for (std::size_t n2 = 0; n2 < C.arrow_count(); ++n2)
    for (std::size_t n1 = 0; n1 < C.arrow_count(); ++n1) {
      if (C.dst[n1] != C.src[n2]) continue;
      const int nc = C.comp[n2][n1];
      for (std::size_t a = 0; a < A.objects.size(); ++a)
        for (std::size_t v = 0; v < p.value[static_cast<std::size_t>(C.src[n1])][a].size(); ++v)
          if (p.left_act[static_cast<std::size_t>(nc)][a][v] !=
              p.left_act[n2][a][static_cast<std::size_t>(p.left_act[n1][a][v])])
            report.add("profunctor: left action not functorial");
    }
  for (std::size_t m2 = 0; m2 < A.arrow_count(); ++m2)
    for (std::size_t m1 = 0; m1 < A.arrow_count(); ++m1) {
      if (A.dst[m1] != A.src[m2]) continue;
      const int mc = A.comp[m2][m1];
      for (std::size_t c = 0; c < C.objects.size(); ++c)
        for (std::size_t v = 0; v < p.value[c][static_cast<std::size_t>(A.dst[m2])].size(); ++v)
          if (p.right_act[static_cast<std::size_t>(mc)][c][v] !=
              p.right_act[m1][c][static_cast<std::size_t>(p.right_act[m2][c][v])])
            report.add("profunctor: right action not functorial");
    }
  for (std::size_t narr = 0; narr < C.arrow_count(); ++narr)
    for (std::size_t marr = 0; marr < A.arrow_count(); ++marr)
      for (std::size_t v = 0;
           v < p.value[static_cast<std::size_t>(C.src[narr])][static_cast<std::size_t>(A.dst[marr])].size();
           ++v) {
        const int via_left = p.right_act[marr][static_cast<std::size_t>(C.dst[narr])]
                                        [static_cast<std::size_t>(p.left_act[narr][static_cast<std::size_t>(
                                            A.dst[marr])][v])];
        const int via_right = p.left_act[narr][static_cast<std::size_t>(A.src[marr])]
                                        [static_cast<std::size_t>(p.right_act[marr][static_cast<std::size_t>(
                                            C.src[narr])][v])];
        if (via_left != via_right) report.add("profunctor: actions do not commute");
      }
  return report;
}

Profunctor hom_profunctor(const FinCategory& C) {
  Profunctor p;
  p.dom = &C;
  p.cod = &C;
  const std::size_t n = C.objects.size();
  p.value.assign(n, std::vector<std::vector<std::string>>(n));
  std::vector<std::vector<std::vector<int>>> arrows_at(n, std::vector<std::vector<int>>(n));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t a = 0; a < n; ++a) {
      arrows_at[c][a] = C.hom(static_cast<int>(a), static_cast<int>(c));
      for (int m : arrows_at[c][a]) p.value[c][a].push_back(C.arrow_names[static_cast<std::size_t>(m)]);
    }
  auto position = [&](std::size_t c, std::size_t a, int arrow) {
    const auto& v = arrows_at[c][a];
    return static_cast<int>(std::find(v.begin(), v.end(), arrow) - v.begin());
  };
  p.left_act.resize(C.arrow_count());
  for (std::size_t narr = 0; narr < C.arrow_count(); ++narr) {
    p.left_act[narr].resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      const auto& from = arrows_at[static_cast<std::size_t>(C.src[narr])][a];
      for (int v : from)
        p.left_act[narr][a].push_back(
            position(static_cast<std::size_t>(C.dst[narr]), a, C.compose(static_cast<int>(narr), v)));
    }
  }
  p.right_act.resize(C.arrow_count());
  for (std::size_t marr = 0; marr < C.arrow_count(); ++marr) {
    p.right_act[marr].resize(n);
    for (std::size_t c = 0; c < n; ++c) {
      const auto& from = arrows_at[c][static_cast<std::size_t>(C.dst[marr])];
      for (int v : from)
        p.right_act[marr][c].push_back(
            position(c, static_cast<std::size_t>(C.src[marr]), C.compose(v, static_cast<int>(marr))));
    }
  }
  return p;
}

namespace {

struct PairSpace {
  // flat index per (c, x, y) triple at a fixed (d, a)
  std::vector<int> offset;  // per object c of the middle category
  int total = 0;

  int index(int c, int x, std::size_t width, int y) const {
    return offset[static_cast<std::size_t>(c)] + x * static_cast<int>(width) + y;
  }
};

PairSpace pair_space(const Profunctor& psi, const Profunctor& phi, int d, int a) {
  PairSpace s;
  const std::size_t mid = psi.dom->objects.size();
  s.offset.resize(mid);
  for (std::size_t c = 0; c < mid; ++c) {
    s.offset[c] = s.total;
    s.total += static_cast<int>(psi.value[static_cast<std::size_t>(d)][c].size() *
                                phi.value[c][static_cast<std::size_t>(a)].size());
  }
  return s;
}

}  // namespace

Profunctor compose_profunctors(const Profunctor& psi, const Profunctor& phi) {
  if (phi.cod != psi.dom) throw Error("compose_profunctors: shape mismatch");
  const FinCategory& A = *phi.dom;
  const FinCategory& Cm = *phi.cod;  // middle
  const FinCategory& D = *psi.cod;

  Profunctor out;
  out.dom = &A;
  out.cod = &D;
  out.value.assign(D.objects.size(), std::vector<std::vector<std::string>>(A.objects.size()));

  // per (d,a): class id per pair, list of class representatives
  std::vector<std::vector<std::vector<int>>> cls(D.objects.size(),
                                                 std::vector<std::vector<int>>(A.objects.size()));
  for (std::size_t d = 0; d < D.objects.size(); ++d)
    for (std::size_t a = 0; a < A.objects.size(); ++a) {
      const PairSpace space = pair_space(psi, phi, static_cast<int>(d), static_cast<int>(a));
      UnionFind uf(static_cast<std::size_t>(space.total));
      for (std::size_t m = 0; m < Cm.arrow_count(); ++m) {
        const int c = Cm.src[m];
        const int c2 = Cm.dst[m];
        const auto& xs = psi.value[d][static_cast<std::size_t>(c2)];
        const auto& ys = phi.value[static_cast<std::size_t>(c)][a];
        const std::size_t w_c = phi.value[static_cast<std::size_t>(c)][a].size();
        const std::size_t w_c2 = phi.value[static_cast<std::size_t>(c2)][a].size();
        for (std::size_t x = 0; x < xs.size(); ++x)
          for (std::size_t y = 0; y < ys.size(); ++y) {
            const int xm = psi.right_act[m][d][x];
            const int my = phi.left_act[m][a][y];
            uf.merge(static_cast<std::size_t>(space.index(c, xm, w_c, static_cast<int>(y))),
                     static_cast<std::size_t>(space.index(c2, static_cast<int>(x), w_c2, my)));
          }
      }
      // name classes by their least lexicographic member
      std::map<std::size_t, std::pair<std::string, int>> reps;  // root -> (name, class index)
      std::vector<std::pair<std::string, std::size_t>> named;   // (name, root)
      for (std::size_t c = 0; c < Cm.objects.size(); ++c) {
        const auto& xs = psi.value[d][c];
        const auto& ys = phi.value[c][a];
        for (std::size_t x = 0; x < xs.size(); ++x)
          for (std::size_t y = 0; y < ys.size(); ++y) {
            const std::size_t root = uf.find(
                static_cast<std::size_t>(space.index(static_cast<int>(c), static_cast<int>(x), ys.size(),
                                                     static_cast<int>(y))));
            const std::string name = xs[x] + "*" + ys[y];
            auto it = reps.find(root);
            if (it == reps.end())
              reps[root] = {name, -1};
            else if (name < it->second.first)
              it->second.first = name;
          }
      }
      for (auto& [root, entry] : reps) named.emplace_back(entry.first, root);
      std::sort(named.begin(), named.end());
      for (std::size_t k = 0; k < named.size(); ++k) {
        reps[named[k].second].second = static_cast<int>(k);
        out.value[d][a].push_back(named[k].first);
      }
      cls[d][a].assign(static_cast<std::size_t>(space.total), -1);
      for (std::size_t i = 0; i < static_cast<std::size_t>(space.total); ++i)
        cls[d][a][i] = reps[uf.find(i)].second;
    }

  auto pair_class = [&](int d, int a, int c, int x, int y) {
    const PairSpace space = pair_space(psi, phi, d, a);
    const std::size_t width = phi.value[static_cast<std::size_t>(c)][static_cast<std::size_t>(a)].size();
    return cls[static_cast<std::size_t>(d)][static_cast<std::size_t>(a)]
              [static_cast<std::size_t>(space.index(c, x, width, y))];
  };
  auto any_member = [&](int d, int a, int klass) {
    for (std::size_t c = 0; c < Cm.objects.size(); ++c) {
      const auto& xs = psi.value[static_cast<std::size_t>(d)][c];
      const auto& ys = phi.value[c][static_cast<std::size_t>(a)];
      for (std::size_t x = 0; x < xs.size(); ++x)
        for (std::size_t y = 0; y < ys.size(); ++y)
          if (pair_class(d, a, static_cast<int>(c), static_cast<int>(x), static_cast<int>(y)) == klass)
            return std::tuple<int, int, int>{static_cast<int>(c), static_cast<int>(x), static_cast<int>(y)};
    }
    throw Error("compose_profunctors: empty class");
  };

  out.left_act.resize(D.arrow_count());
  for (std::size_t narr = 0; narr < D.arrow_count(); ++narr) {
    out.left_act[narr].resize(A.objects.size());
    for (std::size_t a = 0; a < A.objects.size(); ++a) {
      const int d_from = D.src[narr];
      const std::size_t sz = out.value[static_cast<std::size_t>(d_from)][a].size();
      for (std::size_t k = 0; k < sz; ++k) {
        const auto [c, x, y] = any_member(d_from, static_cast<int>(a), static_cast<int>(k));
        const int nx = psi.left_act[narr][static_cast<std::size_t>(c)][static_cast<std::size_t>(x)];
        out.left_act[narr][a].push_back(pair_class(D.dst[narr], static_cast<int>(a), c, nx, y));
      }
    }
  }
  out.right_act.resize(A.arrow_count());
  for (std::size_t marr = 0; marr < A.arrow_count(); ++marr) {
    out.right_act[marr].resize(D.objects.size());
    for (std::size_t d = 0; d < D.objects.size(); ++d) {
      const int a_from = A.dst[marr];
      const std::size_t sz = out.value[d][static_cast<std::size_t>(a_from)].size();
      for (std::size_t k = 0; k < sz; ++k) {
        const auto [c, x, y] = any_member(static_cast<int>(d), a_from, static_cast<int>(k));
        const int ym = phi.right_act[marr][static_cast<std::size_t>(c)][static_cast<std::size_t>(y)];
        out.right_act[marr][d].push_back(pair_class(static_cast<int>(d), A.src[marr], c, x, ym));
      }
    }
  }
  return out;
}

std::size_t zigzag_orbit_count(const Profunctor& psi, const Profunctor& phi, int d, int a) {
  const FinCategory& Cm = *phi.cod;
  const PairSpace space = pair_space(psi, phi, d, a);
  // explicit relation graph, then breadth-first component count
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(space.total));
  for (std::size_t m = 0; m < Cm.arrow_count(); ++m) {
    const int c = Cm.src[m];
    const int c2 = Cm.dst[m];
    const auto& xs = psi.value[static_cast<std::size_t>(d)][static_cast<std::size_t>(c2)];
    const auto& ys = phi.value[static_cast<std::size_t>(c)][static_cast<std::size_t>(a)];
    const std::size_t w_c = ys.size();
    const std::size_t w_c2 = phi.value[static_cast<std::size_t>(c2)][static_cast<std::size_t>(a)].size();
    for (std::size_t x = 0; x < xs.size(); ++x)
      for (std::size_t y = 0; y < ys.size(); ++y) {
        const int u = space.index(c, psi.right_act[m][static_cast<std::size_t>(d)][x], w_c,
                                  static_cast<int>(y));
        const int v = space.index(c2, static_cast<int>(x), w_c2,
                                  phi.left_act[m][static_cast<std::size_t>(a)][y]);
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
      }
  }
  std::vector<bool> seen(static_cast<std::size_t>(space.total), false);
  std::size_t components = 0;
  for (int start = 0; start < space.total; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++components;
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = true;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : adj[static_cast<std::size_t>(u)])
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = true;
          stack.push_back(v);
        }
    }
  }
  return components;
}

KaroubiEnvelope karoubi_envelope(const FinCategory& C) {
  KaroubiEnvelope env;
  FinCategory& K = env.category;
  for (std::size_t e = 0; e < C.arrow_count(); ++e)
    if (C.is_idempotent(static_cast<int>(e))) {
      env.object_of.push_back(static_cast<int>(e));
      K.objects.push_back("[" + C.arrow_names[e] + "]");
    }
  struct EnvArrow {
    int from, to;  // envelope object indices
    int m;         // arrow of C
  };
  std::vector<EnvArrow> arrows;
  for (std::size_t i = 0; i < env.object_of.size(); ++i)
    for (std::size_t j = 0; j < env.object_of.size(); ++j) {
      const int e = env.object_of[i];
      const int f = env.object_of[j];
      for (std::size_t m = 0; m < C.arrow_count(); ++m) {
        if (C.src[m] != C.src[static_cast<std::size_t>(e)] || C.dst[m] != C.src[static_cast<std::size_t>(f)])
          continue;
        if (C.compose(f, C.compose(static_cast<int>(m), e)) == static_cast<int>(m))
          arrows.push_back({static_cast<int>(i), static_cast<int>(j), static_cast<int>(m)});
      }
    }
  for (const EnvArrow& ar : arrows) {
    K.arrow_names.push_back(C.arrow_names[static_cast<std::size_t>(ar.m)] + "[" +
                            C.arrow_names[static_cast<std::size_t>(env.object_of[static_cast<std::size_t>(ar.from)])] +
                            ">" +
                            C.arrow_names[static_cast<std::size_t>(env.object_of[static_cast<std::size_t>(ar.to)])] +
                            "]");
    K.src.push_back(ar.from);
    K.dst.push_back(ar.to);
  }
  auto find_arrow = [&](int from, int to, int m) {
    for (std::size_t k = 0; k < arrows.size(); ++k)
      if (arrows[k].from == from && arrows[k].to == to && arrows[k].m == m) return static_cast<int>(k);
    throw Error("karoubi_envelope: composite escaped the envelope");
  };
  K.comp.assign(arrows.size(), std::vector<int>(arrows.size(), -1));
  for (std::size_t g = 0; g < arrows.size(); ++g)
    for (std::size_t f = 0; f < arrows.size(); ++f) {
      if (arrows[f].to != arrows[g].from) continue;
      K.comp[g][f] = find_arrow(arrows[f].from, arrows[g].to, C.compose(arrows[g].m, arrows[f].m));
    }
  K.identity.resize(env.object_of.size());
  for (std::size_t i = 0; i < env.object_of.size(); ++i)
    K.identity[i] = find_arrow(static_cast<int>(i), static_cast<int>(i), env.object_of[i]);

  env.comparison.dom = &C;
  env.comparison.cod = &K;
  for (std::size_t x = 0; x < C.objects.size(); ++x) {
    const int id_x = C.identity[x];
    const auto it = std::find(env.object_of.begin(), env.object_of.end(), id_x);
    env.comparison.on_obj.push_back(static_cast<int>(it - env.object_of.begin()));
  }
  for (std::size_t m = 0; m < C.arrow_count(); ++m)
    env.comparison.on_arrow.push_back(
        find_arrow(env.comparison.on_obj[static_cast<std::size_t>(C.src[m])],
                   env.comparison.on_obj[static_cast<std::size_t>(C.dst[m])], static_cast<int>(m)));
  return env;
}

bool is_cauchy_complete(const FinCategory& C) {
  for (std::size_t e = 0; e < C.arrow_count(); ++e) {
    if (!C.is_idempotent(static_cast<int>(e))) continue;
    bool split = false;
    for (std::size_t b = 0; b < C.objects.size() && !split; ++b)
      for (int r : C.hom(C.src[e], static_cast<int>(b))) {
        if (split) break;
        for (int s : C.hom(static_cast<int>(b), C.src[e]))
          if (C.compose(s, r) == static_cast<int>(e) && C.compose(r, s) == C.identity[b]) {
            split = true;
            break;
          }
      }
    if (!split) return false;
  }
  return true;
}

FinCategory underlying_category(const FinCategory& C) { return C; }

namespace {

// Stable congruences on the co-representable C(c0,-) (post-composition
// stable) or on the representable C(-,d0) (pre-composition stable),
// enumerated as the join-closure of the principal ones.
struct Congruence {
  std::vector<int> cls;  // arrow (with the right src/dst) -> class id, -1 elsewhere

  bool operator<(const Congruence& o) const { return cls < o.cls; }
  bool operator==(const Congruence& o) const { return cls == o.cls; }
};

Congruence normalize(const FinCategory& C, const std::vector<int>& member_arrows,
                     UnionFind& uf) {
  Congruence out;
  out.cls.assign(C.arrow_count(), -1);
  std::map<std::size_t, int> roots;
  for (int m : member_arrows) {
    const std::size_t r = uf.find(static_cast<std::size_t>(m));
    auto it = roots.find(r);
    if (it == roots.end()) {
      const int id = static_cast<int>(roots.size());
      roots[r] = id;
      out.cls[static_cast<std::size_t>(m)] = id;
    } else {
      out.cls[static_cast<std::size_t>(m)] = it->second;
    }
  }
  return out;
}

// closes pair identifications under post- (covariant) or pre- (contravariant)
// composition, keeping classes inside each hom set
void close_stable(const FinCategory& C, const std::vector<int>& member_arrows, bool covariant,
                  UnionFind& uf) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int m1 : member_arrows)
      for (int m2 : member_arrows) {
        if (m1 >= m2) continue;
        if (uf.find(static_cast<std::size_t>(m1)) != uf.find(static_cast<std::size_t>(m2))) continue;
        if (C.dst[static_cast<std::size_t>(m1)] != C.dst[static_cast<std::size_t>(m2)] ||
            C.src[static_cast<std::size_t>(m1)] != C.src[static_cast<std::size_t>(m2)])
          continue;
        for (std::size_t n = 0; n < C.arrow_count(); ++n) {
          if (covariant && C.src[n] == C.dst[static_cast<std::size_t>(m1)]) {
            const int a = C.compose(static_cast<int>(n), m1);
            const int b = C.compose(static_cast<int>(n), m2);
            if (uf.find(static_cast<std::size_t>(a)) != uf.find(static_cast<std::size_t>(b))) {
              uf.merge(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
              changed = true;
            }
          }
          if (!covariant && C.dst[n] == C.src[static_cast<std::size_t>(m1)]) {
            const int a = C.compose(m1, static_cast<int>(n));
            const int b = C.compose(m2, static_cast<int>(n));
            if (uf.find(static_cast<std::size_t>(a)) != uf.find(static_cast<std::size_t>(b))) {
              uf.merge(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
              changed = true;
            }
          }
        }
      }
  }
}

std::vector<Congruence> stable_congruences(const FinCategory& C, int base, bool covariant) {
  std::vector<int> member_arrows;
  for (std::size_t m = 0; m < C.arrow_count(); ++m) {
    if (covariant && C.src[m] == base) member_arrows.push_back(static_cast<int>(m));
    if (!covariant && C.dst[m] == base) member_arrows.push_back(static_cast<int>(m));
  }
  std::set<Congruence> all;
  {
    UnionFind discrete(C.arrow_count());
    all.insert(normalize(C, member_arrows, discrete));
  }
  // principal congruences
  std::vector<Congruence> principals;
  for (std::size_t i = 0; i < member_arrows.size(); ++i)
    for (std::size_t j = i + 1; j < member_arrows.size(); ++j) {
      const int m1 = member_arrows[i];
      const int m2 = member_arrows[j];
      if (C.src[static_cast<std::size_t>(m1)] != C.src[static_cast<std::size_t>(m2)] ||
          C.dst[static_cast<std::size_t>(m1)] != C.dst[static_cast<std::size_t>(m2)])
        continue;
      UnionFind uf(C.arrow_count());
      uf.merge(static_cast<std::size_t>(m1), static_cast<std::size_t>(m2));
      close_stable(C, member_arrows, covariant, uf);
      principals.push_back(normalize(C, member_arrows, uf));
    }
  std::vector<Congruence> frontier(all.begin(), all.end());
  for (const auto& p : principals)
    if (all.insert(p).second) frontier.push_back(p);
  while (!frontier.empty()) {
    std::vector<Congruence> next;
    for (const auto& c : frontier)
      for (const auto& p : principals) {
        UnionFind uf(C.arrow_count());
        for (int m1 : member_arrows)
          for (int m2 : member_arrows) {
            if ((c.cls[static_cast<std::size_t>(m1)] >= 0 &&
                 c.cls[static_cast<std::size_t>(m1)] == c.cls[static_cast<std::size_t>(m2)]) ||
                (p.cls[static_cast<std::size_t>(m1)] >= 0 &&
                 p.cls[static_cast<std::size_t>(m1)] == p.cls[static_cast<std::size_t>(m2)]))
              uf.merge(static_cast<std::size_t>(m1), static_cast<std::size_t>(m2));
          }
        close_stable(C, member_arrows, covariant, uf);
        Congruence joined = normalize(C, member_arrows, uf);
        if (all.insert(joined).second) next.push_back(std::move(joined));
      }
    frontier = std::move(next);
  }
  return {all.begin(), all.end()};
}

bool singletons_isomorphic(const FinCategory& C, const SetSingleton& s1, const SetSingleton& s2) {
  for (std::size_t x = 0; x < s1.value.size(); ++x)
    if (s1.value[x].size() != s2.value[x].size()) return false;
  // backtrack over per-object bijections commuting with every action
  std::vector<std::vector<int>> bij(s1.value.size());
  std::function<bool(std::size_t)> place = [&](std::size_t x) -> bool {
    if (x == s1.value.size()) {
      for (std::size_t m = 0; m < C.arrow_count(); ++m) {
        const std::size_t from = static_cast<std::size_t>(C.src[m]);
        const std::size_t to = static_cast<std::size_t>(C.dst[m]);
        for (std::size_t v = 0; v < s1.value[from].size(); ++v)
          if (bij[to][static_cast<std::size_t>(s1.act[m][v])] !=
              s2.act[m][static_cast<std::size_t>(bij[from][v])])
            return false;
      }
      return true;
    }
    std::vector<int> perm(s1.value[x].size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end());
    do {
      bij[x] = perm;
      if (place(x + 1)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    bij[x].clear();
    return false;
  };
  return place(0);
}

}  // namespace

std::vector<SetSingleton> singleton_oracle(const FinCategory& C, int bound) {
  std::vector<SetSingleton> found;
  if (bound <= 0) return found;

  for (std::size_t c0 = 0; c0 < C.objects.size(); ++c0) {
    for (const Congruence& cong : stable_congruences(C, static_cast<int>(c0), true)) {
      // sigma = C(c0,-)/cong as a covariant module
      SetSingleton sigma;
      sigma.generator_object = static_cast<int>(c0);
      sigma.value.resize(C.objects.size());
      std::vector<int> class_of(C.arrow_count(), -1);
      std::vector<int> class_rep;  // class -> representative arrow
      {
        std::vector<std::vector<int>> classes;
        for (std::size_t m = 0; m < C.arrow_count(); ++m) {
          if (cong.cls[m] < 0) continue;
          if (static_cast<std::size_t>(cong.cls[m]) >= classes.size())
            classes.resize(static_cast<std::size_t>(cong.cls[m]) + 1);
          classes[static_cast<std::size_t>(cong.cls[m])].push_back(static_cast<int>(m));
        }
        // stable per-object numbering
        std::vector<std::vector<int>> per_obj(C.objects.size());
        class_rep.resize(classes.size(), -1);
        for (std::size_t k = 0; k < classes.size(); ++k) {
          class_rep[k] = classes[k].front();
          per_obj[static_cast<std::size_t>(C.dst[static_cast<std::size_t>(classes[k].front())])].push_back(
              static_cast<int>(k));
        }
        std::vector<int> local(classes.size(), -1);
        for (std::size_t x = 0; x < C.objects.size(); ++x)
          for (std::size_t i = 0; i < per_obj[x].size(); ++i) {
            local[static_cast<std::size_t>(per_obj[x][i])] = static_cast<int>(i);
            sigma.value[x].push_back("q" + std::to_string(per_obj[x][i]));
          }
        for (std::size_t m = 0; m < C.arrow_count(); ++m)
          if (cong.cls[m] >= 0) class_of[m] = local[static_cast<std::size_t>(cong.cls[m])];
      }
      bool small = true;
      for (const auto& v : sigma.value) small = small && v.size() <= static_cast<std::size_t>(bound);
      if (!small) continue;

      sigma.act.resize(C.arrow_count());
      std::vector<std::vector<int>> members(C.objects.size());  // per object, rep arrows in order
      for (std::size_t x = 0; x < C.objects.size(); ++x) {
        members[x].resize(sigma.value[x].size(), -1);
        for (std::size_t m = 0; m < C.arrow_count(); ++m)
          if (cong.cls[m] >= 0 && C.dst[m] == static_cast<int>(x) &&
              members[x][static_cast<std::size_t>(class_of[m])] < 0)
            members[x][static_cast<std::size_t>(class_of[m])] = static_cast<int>(m);
      }
      for (std::size_t w = 0; w < C.arrow_count(); ++w) {
        const std::size_t from = static_cast<std::size_t>(C.src[w]);
        sigma.act[w].resize(sigma.value[from].size());
        for (std::size_t v = 0; v < sigma.value[from].size(); ++v)
          sigma.act[w][v] = class_of[static_cast<std::size_t>(C.compose(static_cast<int>(w), members[from][v]))];
      }

      // definitional right-adjoint search
      bool adjoint_found = false;
      for (std::size_t d0 = 0; d0 < C.objects.size() && !adjoint_found; ++d0) {
        for (const Congruence& tcong : stable_congruences(C, static_cast<int>(d0), false)) {
          if (adjoint_found) break;
          auto tclass = [&](int arrow) { return tcong.cls[static_cast<std::size_t>(arrow)]; };
          for (int eps0 : C.hom(static_cast<int>(d0), static_cast<int>(c0))) {
            // well-definedness of eps([m],[u]) = m . eps0 . u
            bool well = true;
            for (std::size_t m1 = 0; m1 < C.arrow_count() && well; ++m1)
              for (std::size_t m2 = 0; m2 < C.arrow_count() && well; ++m2) {
                if (cong.cls[m1] < 0 || cong.cls[m1] != cong.cls[m2]) continue;
                if (C.dst[m1] != C.dst[m2]) continue;
                for (std::size_t u1 = 0; u1 < C.arrow_count() && well; ++u1)
                  for (std::size_t u2 = 0; u2 < C.arrow_count() && well; ++u2) {
                    if (tclass(static_cast<int>(u1)) < 0 ||
                        tclass(static_cast<int>(u1)) != tclass(static_cast<int>(u2)))
                      continue;
                    if (C.src[u1] != C.src[u2]) continue;
                    well = C.compose(static_cast<int>(m1), C.compose(eps0, static_cast<int>(u1))) ==
                           C.compose(static_cast<int>(m2), C.compose(eps0, static_cast<int>(u2)));
                  }
              }
            if (!well) continue;
            // candidate units: one (tau, sigma) pair per middle object
            for (std::size_t cu = 0; cu < C.objects.size() && !adjoint_found; ++cu) {
              for (std::size_t uhat = 0; uhat < C.arrow_count() && !adjoint_found; ++uhat) {
                if (tclass(static_cast<int>(uhat)) < 0 || C.src[uhat] != static_cast<int>(cu)) continue;
                for (std::size_t mhat = 0; mhat < C.arrow_count() && !adjoint_found; ++mhat) {
                  if (cong.cls[mhat] < 0 || C.dst[mhat] != static_cast<int>(cu)) continue;
                  // triangle 1: [ (m . eps0 . uhat) . mhat ] = [m] for all [m]
                  bool ok = true;
                  for (std::size_t m = 0; m < C.arrow_count() && ok; ++m) {
                    if (cong.cls[m] < 0) continue;
                    const int trip = C.compose(
                        C.compose(static_cast<int>(m), C.compose(eps0, static_cast<int>(uhat))),
                        static_cast<int>(mhat));
                    ok = cong.cls[static_cast<std::size_t>(trip)] == cong.cls[m];
                  }
                  // triangle 2: [ uhat . (mhat . eps0 . u) ] = [u] for all [u]
                  for (std::size_t u = 0; u < C.arrow_count() && ok; ++u) {
                    if (tclass(static_cast<int>(u)) < 0) continue;
                    const int trip = C.compose(
                        static_cast<int>(uhat),
                        C.compose(static_cast<int>(mhat), C.compose(eps0, static_cast<int>(u))));
                    ok = tclass(trip) == tclass(static_cast<int>(u));
                  }
                  if (!ok) continue;
                  adjoint_found = true;
                  const int split = C.compose(static_cast<int>(mhat), C.compose(eps0, static_cast<int>(uhat)));
                  sigma.splitting_idempotent = split;
                }
              }
            }
          }
        }
      }
      if (!adjoint_found) continue;
      bool duplicate = false;
      for (const SetSingleton& other : found)
        if (singletons_isomorphic(C, sigma, other)) {
          duplicate = true;
          break;
        }
      if (!duplicate) found.push_back(std::move(sigma));
    }
  }
  return found;
}

bool free_and_underlying_adjunction_check(const FinCategory& C, const FinCategory& D) {
  if (!is_cauchy_complete(D)) throw Error("adjunction check: the target category must be Cauchy-complete");
  const KaroubiEnvelope env = karoubi_envelope(C);
  const std::vector<FinFunctor> from_c = enumerate_functors(C, D);
  const std::vector<FinFunctor> from_k = enumerate_functors(env.category, D);
  std::set<std::pair<std::vector<int>, std::vector<int>>> images;
  for (const FinFunctor& G : from_k) {
    // precompose with the comparison functor
    std::vector<int> on_obj(C.objects.size()), on_arrow(C.arrow_count());
    for (std::size_t x = 0; x < C.objects.size(); ++x)
      on_obj[x] = G.on_obj[static_cast<std::size_t>(env.comparison.on_obj[x])];
    for (std::size_t m = 0; m < C.arrow_count(); ++m)
      on_arrow[m] = G.on_arrow[static_cast<std::size_t>(env.comparison.on_arrow[m])];
    if (!images.emplace(on_obj, on_arrow).second) return false;  // not injective
    FinFunctor composite{&C, &D, std::move(on_obj), std::move(on_arrow)};
    if (!validate_finfunctor(composite).ok()) return false;
    if (!std::binary_search(from_c.begin(), from_c.end(), composite)) return false;
  }
  return images.size() == from_c.size();  // surjective
}

}  // namespace qsheaf
