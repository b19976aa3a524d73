#include "mvpoly/cone.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace mvpoly {

namespace {

IntVec combine(Int a, const IntVec& x, Int b, const IntVec& y) {
  IntVec z(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) z[k] = checked_add(checked_mul(a, x[k]), checked_mul(b, y[k]));
  make_primitive(z);
  return z;
}

IntVec negate(IntVec v) {
  for (Int& x : v) x = -x;
  return v;
}

void dedupe(std::vector<IntVec>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

bool Cone::contains(const IntVec& x) const {
  for (auto& e : equalities)
    if (dot(e, x) != 0) return false;
  for (auto& a : inequalities)
    if (dot(a, x) < 0) return false;
  return true;
}

int matrix_rank(std::vector<IntVec> rows) {
  if (rows.empty()) return 0;
  const std::size_t n = rows[0].size();
  int rank = 0;
  for (std::size_t col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[rank]);
    for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col] == 0) continue;
      rows[r] = combine(rows[rank][col], rows[r], -rows[r][col], rows[rank]);
    }
    ++rank;
  }
  return rank;
}

void double_description(Cone& c) {
  const int d = c.dim;
  std::vector<IntVec> lines, rays;
  for (int k = 0; k < d; ++k) {
    IntVec e(d, 0);
    e[k] = 1;
    lines.push_back(e);
  }
  std::vector<const IntVec*> processed;  // inequalities seen so far

  auto step = [&](const IntVec& h, bool eq) {
    int piv = -1;
    Int v0 = 0;
    for (int q = 0; q < static_cast<int>(lines.size()); ++q) {
      Int v = dot(h, lines[q]);
      if (v != 0 && (piv < 0 || std::llabs(v) < std::llabs(v0))) {
        piv = q;
        v0 = v;
      }
    }
    if (piv >= 0) {
      IntVec l0 = lines[piv];
      Int s0 = v0 > 0 ? 1 : -1;
      std::vector<IntVec> nl;
      for (int q = 0; q < static_cast<int>(lines.size()); ++q) {
        if (q == piv) continue;
        Int v = dot(h, lines[q]);
        IntVec l = v == 0 ? lines[q] : combine(v0, lines[q], -v, l0);
        if (!is_zero(l)) nl.push_back(l);
      }
      for (IntVec& r : rays) {
        Int v = dot(h, r);
        if (v != 0) r = combine(s0 * v0, r, -s0 * v, l0);
      }
      if (!eq) {
        IntVec nr = s0 > 0 ? l0 : negate(l0);
        make_primitive(nr);
        rays.push_back(nr);
      }
      lines = std::move(nl);
      return;
    }
    std::vector<Int> val(rays.size());
    for (std::size_t t = 0; t < rays.size(); ++t) val[t] = dot(h, rays[t]);
    // zero sets with respect to the inequalities processed so far
    std::vector<std::vector<char>> Z(rays.size(), std::vector<char>(processed.size()));
    for (std::size_t t = 0; t < rays.size(); ++t)
      for (std::size_t p = 0; p < processed.size(); ++p) Z[t][p] = dot(*processed[p], rays[t]) == 0;
    std::vector<IntVec> next;
    for (std::size_t t = 0; t < rays.size(); ++t)
      if (val[t] == 0 || (!eq && val[t] > 0)) next.push_back(rays[t]);
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (val[p] <= 0) continue;
      for (std::size_t n = 0; n < rays.size(); ++n) {
        if (val[n] >= 0) continue;
        std::vector<char> common(processed.size());
        for (std::size_t k = 0; k < processed.size(); ++k) common[k] = Z[p][k] && Z[n][k];
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == p || o == n) continue;
          bool sup = true;
          for (std::size_t k = 0; k < processed.size(); ++k)
            if (common[k] && !Z[o][k]) {
              sup = false;
              break;
            }
          if (sup) adjacent = false;
        }
        if (adjacent) next.push_back(combine(val[p], rays[n], -val[n], rays[p]));
      }
    }
    rays = std::move(next);
    dedupe(rays);
  };

  for (auto& e : c.equalities) step(e, true);
  for (auto& a : c.inequalities) {
    step(a, false);
    processed.push_back(&a);
  }
  dedupe(rays);
  if (lines.empty()) {
    // keep only extreme rays: tight constraints must have rank d - 1
    std::vector<IntVec> extreme;
    for (auto& r : rays) {
      std::vector<IntVec> tight = c.equalities;
      for (auto& a : c.inequalities)
        if (dot(a, r) == 0) tight.push_back(a);
      if (matrix_rank(tight) == d - 1) extreme.push_back(r);
    }
    rays = std::move(extreme);
  }
  c.lines = std::move(lines);
  c.rays = std::move(rays);
}

Cone cone_from_rays(int dim, const std::vector<IntVec>& rays) {
  Cone dual;
  dual.dim = dim;
  dual.inequalities = rays;
  double_description(dual);
  Cone c;
  c.dim = dim;
  c.equalities = dual.lines;
  c.inequalities = dual.rays;
  std::vector<IntVec> rs;
  for (IntVec r : rays) {
    make_primitive(r);
    if (!is_zero(r)) rs.push_back(r);
  }
  dedupe(rs);
  for (auto& r : rs) {
    std::vector<IntVec> tight = c.equalities;
    for (auto& a : c.inequalities)
      if (dot(a, r) == 0) tight.push_back(a);
    if (matrix_rank(tight) == dim - 1) c.rays.push_back(r);
  }
  return c;
}

std::vector<IntVec> hilbert_basis(const Cone& cone) {
  if (!cone.pointed()) throw InvalidInput("Hilbert basis needs a pointed cone");
  const int d = cone.dim;
  if (cone.rays.empty()) return {};
  IntVec g(d, 0);
  for (auto& a : cone.inequalities)
    for (int k = 0; k < d; ++k) g[k] += a[k];
  IntVec lo(d, 0), hi(d, 0);
  double volume = 1;
  for (auto& r : cone.rays)
    for (int k = 0; k < d; ++k) (r[k] < 0 ? lo[k] : hi[k]) += r[k];
  for (int k = 0; k < d; ++k) volume *= static_cast<double>(hi[k] - lo[k] + 1);
  if (volume > 2e8) throw LimitExceeded("Hilbert basis candidate box too large");

  std::vector<IntVec> cand;
  IntVec x = lo;
  while (true) {
    if (!is_zero(x) && cone.contains(x)) cand.push_back(x);
    int k = 0;
    while (k < d && x[k] == hi[k]) x[k] = lo[k], ++k;
    if (k == d) break;
    ++x[k];
  }
  std::sort(cand.begin(), cand.end(), [&](const IntVec& a, const IntVec& b) {
    Int ga = dot(g, a), gb = dot(g, b);
    return ga != gb ? ga < gb : a < b;
  });
  std::vector<IntVec> basis;
  IntVec diff(d);
  for (auto& y : cand) {
    bool reducible = false;
    for (auto& h : basis) {
      for (int k = 0; k < d; ++k) diff[k] = y[k] - h[k];
      if (cone.contains(diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(y);
  }
  return basis;
}

bool integer_combination(const std::vector<IntVec>& gens, const IntVec& x, IntVec* coeffs) {
  for (auto& g : gens)
    for (Int v : g)
      if (v < 0) throw InvalidInput("integer_combination needs nonnegative generators");
  const std::size_t G = gens.size();
  IntVec c(G, 0), rem = x;
  std::function<bool(std::size_t)> rec = [&](std::size_t t) -> bool {
    if (t == G) return is_zero(rem);
    const IntVec& g = gens[t];
    Int cap = -1;
    for (std::size_t k = 0; k < g.size(); ++k)
      if (g[k] > 0) cap = cap < 0 ? rem[k] / g[k] : std::min(cap, rem[k] / g[k]);
    if (cap < 0) cap = 0;  // zero generator
    for (Int a = cap; a >= 0; --a) {
      for (std::size_t k = 0; k < g.size(); ++k) rem[k] -= a * g[k];
      c[t] = a;
      bool ok = std::all_of(rem.begin(), rem.end(), [](Int v) { return v >= 0; }) && rec(t + 1);
      for (std::size_t k = 0; k < g.size(); ++k) rem[k] += a * g[k];
      if (ok) {
        if (coeffs) *coeffs = c;
        return true;
      }
    }
    c[t] = 0;
    return false;
  };
  return rec(0);
}

}  // namespace mvpoly
