#include "mvpoly/polytope.hpp"

#include <algorithm>

namespace mvpoly {

namespace {

bool in_cone(const RootSystem& rs, ElemId w, const Weight& alpha) {
  for (int i = 1; i <= rs.rank(); ++i)
    if (pair(rs.act(w, rs.simple_coroot(i)), alpha) < 0) return false;
  return true;
}

Weight add(const Weight& a, const Weight& b) {
  Weight c = a;
  for (std::size_t k = 0; k < c.coords.size(); ++k) c.coords[k] = checked_add(c.coords[k], b.coords[k]);
  return c;
}

}  // namespace

ElemId locate_cone(const RootSystem& rs, const Weight& alpha) {
  for (ElemId w = 0; w < static_cast<ElemId>(rs.order()); ++w)
    if (in_cone(rs, w, alpha)) return w;
  throw ConsistencyError("weight lies in no Weyl chamber");
}

Int support_eval_in(const BZDatum& M, ElemId w, const Weight& alpha) {
  // {w Lambda_i} and {w alpha_i^vee} are dual bases, so the coefficients are integers
  const RootSystem& rs = *M.rs;
  Int s = 0;
  for (int i = 1; i <= rs.rank(); ++i)
    s = checked_add(s, checked_mul(pair(rs.act(w, rs.simple_coroot(i)), alpha), M.at(w, i)));
  return s;
}

Int support_eval(const BZDatum& M, const Weight& alpha) {
  return support_eval_in(M, locate_cone(*M.rs, alpha), alpha);
}

std::vector<Int> support_eval_all(const BZDatum& M, const Weight& alpha) {
  std::vector<Int> out;
  for (ElemId w = 0; w < static_cast<ElemId>(M.rs->order()); ++w)
    if (in_cone(*M.rs, w, alpha)) out.push_back(support_eval_in(M, w, alpha));
  return out;
}

bool is_concave(const BZDatum& M) { return check_edge_inequalities(M).empty(); }

std::optional<ConcavityWitness> find_concavity_witness(const BZDatum& M, std::mt19937_64& rng, int samples) {
  const RootSystem& rs = *M.rs;
  const int r = rs.rank();
  auto test = [&](const Weight& a, const Weight& b) -> std::optional<ConcavityWitness> {
    Int lhs = support_eval(M, add(a, b));
    Int rhs = checked_add(support_eval(M, a), support_eval(M, b));
    if (lhs < rhs) return ConcavityWitness{a, b, lhs, rhs};
    return std::nullopt;
  };
  std::vector<Weight> pool;
  for (auto& c : rs.chambers()) pool.push_back(c.weight);
  // box [-1,1]^r
  IntVec v(r, -1);
  while (true) {
    pool.push_back(Weight{v});
    int k = 0;
    while (k < r && v[k] == 1) v[k++] = -1;
    if (k == r) break;
    ++v[k];
  }
  for (auto& a : pool)
    for (auto& b : pool)
      if (auto w = test(a, b)) return w;
  std::uniform_int_distribution<Int> U(-4, 4);
  for (int s = 0; s < samples; ++s) {
    Weight a{IntVec(r)}, b{IntVec(r)};
    for (int k = 0; k < r; ++k) {
      a.coords[k] = U(rng);
      b.coords[k] = U(rng);
    }
    if (auto w = test(a, b)) return w;
  }
  return std::nullopt;
}

BZDatum minkowski_sum(const BZDatum& M, const BZDatum& N) {
  if (M.rs.get() != N.rs.get() && M.rs->cartan().a != N.rs->cartan().a)
    throw InvalidInput("Minkowski sum of data over different root systems");
  BZDatum out = M;
  for (std::size_t c = 0; c < out.values.size(); ++c) out.values[c] = checked_add(M.values[c], N.values[c]);
  return out;
}

BZDatum weyl_polytope(const RootSystemPtr& rs, const Coweight& lambda) {
  Coweight low = rs->act(rs->longest(), lambda);
  BZDatum M = zero_datum(rs);
  for (int c = 0; c < rs->num_chamber_weights(); ++c) M.values[c] = low.coords[rs->chamber(c).level - 1];
  return M;
}

bool contains_in_weyl(const BZDatum& M, const Coweight& lambda) {
  Coweight low = M.rs->act(M.rs->longest(), lambda);
  for (int c = 0; c < M.rs->num_chamber_weights(); ++c)
    if (M.values[c] < low.coords[M.rs->chamber(c).level - 1]) return false;
  return true;
}

BZDatum hyperplanes_from_vertices(const RootSystemPtr& rs, const std::vector<Coweight>& mu) {
  if (mu.size() != rs->order()) throw InvalidInput("need one vertex per Weyl group element");
  BZDatum M = zero_datum(rs);
  std::vector<char> set(M.values.size(), 0);
  for (ElemId w = 0; w < static_cast<ElemId>(rs->order()); ++w)
    for (int i = 1; i <= rs->rank(); ++i) {
      int c = rs->chamber_index(w, i);
      Int v = pair(mu[w], rs->chamber(c).weight);
      if (set[c] && M.values[c] != v) throw InvalidInput("vertices disagree on a chamber weight");
      set[c] = 1;
      M.values[c] = v;
    }
  return M;
}

FaceClass classify_2face(const BZDatum& M, ElemId w, int i, int j) {
  const RootSystem& rs = *M.rs;
  if (i == j || rs.is_right_descent(w, i) || rs.is_right_descent(w, j))
    throw InvalidInput("classify_2face needs ws_i > w, ws_j > w, i != j");
  FaceClass fc;
  if (rs.a(i, j) == 0) {
    fc.shape = "rectangle";
    fc.label = "rectangle";
    return fc;
  }
  auto argmins = [&](const MinRelation& r) {
    std::vector<Int> vals;
    for (auto& f : r.args) vals.push_back(f.eval(M.values));
    Int lo = *std::min_element(vals.begin(), vals.end());
    std::vector<int> out;
    for (std::size_t t = 0; t < vals.size(); ++t)
      if (vals[t] == lo) out.push_back(static_cast<int>(t) + 1);
    return out;
  };
  int lo = std::min(i, j), hi = std::max(i, j);
  bool hex = rs.braid_order(i, j) == 3;
  fc.shape = hex ? "hexagon" : "octagon";
  for (const MinRelation& r : pluecker_relations(M.rs)) {
    if (r.w != w) continue;
    if (std::min(r.i, r.j) != lo || std::max(r.i, r.j) != hi) continue;
    if (r.kind == RelationKind::Octagon2) continue;
    auto a = argmins(r);
    if (hex && i != r.i) {
      // report positions relative to the (w,i,j) order of the caller
      for (int& x : a) x = 3 - x;
      std::sort(a.begin(), a.end());
    }
    fc.argmins.push_back(a);
  }
  bool tie = false;
  std::string lab;
  for (std::size_t t = 0; t < fc.argmins.size(); ++t) {
    if (t) lab += "/";
    if (fc.argmins[t].size() != 1) tie = true;
    for (std::size_t u = 0; u < fc.argmins[t].size(); ++u) {
      if (u) lab += "+";
      lab += std::to_string(fc.argmins[t][u]);
    }
  }
  fc.label = tie ? "tie:" + lab : lab;
  return fc;
}

}  // namespace mvpoly
