#include "mvpoly/bz.hpp"

#include <algorithm>
#include <deque>
#include <mutex>

namespace mvpoly {

Coweight BZDatum::mu1() const { return vertex(*this, rs->identity()); }
Coweight BZDatum::mu2() const { return vertex(*this, rs->longest()); }

BZDatum zero_datum(RootSystemPtr rs) {
  int n = rs->num_chamber_weights();
  return BZDatum{std::move(rs), IntVec(n, 0)};
}

Int LinearForm::eval(const IntVec& M) const {
  Int s = 0;
  for (auto& [c, k] : terms) s = checked_add(s, checked_mul(k, M[c]));
  return s;
}

IntVec LinearForm::dense(int size) const {
  IntVec v(size, 0);
  for (auto& [c, k] : terms) v[c] += k;
  return v;
}

namespace {

LinearForm form(std::initializer_list<std::pair<int, Int>> t) {
  LinearForm f;
  for (auto& p : t) f.terms.push_back(p);
  return f;
}

// Octagon relations at (w, i, j); b1 selects the a_ij = -1 formulas.
void octagon(const RootSystem& rs, ElemId w, int i, int j, bool b1, std::vector<MinRelation>& out) {
  auto R = [&](ElemId x, int k) { return rs.right_mult(x, k); };
  auto C = [&](ElemId x, int k) { return rs.chamber_index(x, k); };
  ElemId wi = R(w, i), wj = R(w, j), wij = R(wi, j), wji = R(wj, i), wiji = R(wij, i), wjij = R(wji, j);
  int Li = C(w, i), Lj = C(w, j), Si = C(wi, i), Sj = C(wj, j), Sij = C(wij, j), Sji = C(wji, i),
      Siji = C(wiji, i), Sjij = C(wjij, j);
  MinRelation r1{w, i, j, b1 ? RelationKind::Octagon1 : RelationKind::Octagon2, 0, {}, {}};
  MinRelation r2 = r1;
  r2.eq = 1;
  if (b1) {
    r1.lhs = form({{Sj, 1}, {Sij, 1}, {Si, 1}});
    r1.args = {form({{Sij, 2}, {Li, 1}}), form({{Lj, 2}, {Siji, 1}}), form({{Lj, 1}, {Sjij, 1}, {Si, 1}})};
    r2.lhs = form({{Sji, 1}, {Sij, 2}, {Si, 1}});
    r2.args = {form({{Lj, 2}, {Siji, 2}}), form({{Sjij, 2}, {Si, 2}}), form({{Siji, 1}, {Sij, 2}, {Li, 1}})};
  } else {
    r1.lhs = form({{Sji, 1}, {Si, 1}, {Sij, 1}});
    r1.args = {form({{Si, 2}, {Sjij, 1}}), form({{Siji, 2}, {Lj, 1}}), form({{Siji, 1}, {Li, 1}, {Sij, 1}})};
    r2.lhs = form({{Sj, 1}, {Si, 2}, {Sij, 1}});
    r2.args = {form({{Siji, 2}, {Lj, 2}}), form({{Li, 2}, {Sij, 2}}), form({{Lj, 1}, {Si, 2}, {Sjij, 1}})};
  }
  out.push_back(std::move(r1));
  out.push_back(std::move(r2));
}

std::vector<MinRelation> build_relations(const RootSystem& rs, bool canonical) {
  std::vector<MinRelation> out;
  const int r = rs.rank();
  for (ElemId w = 0; w < static_cast<ElemId>(rs.order()); ++w)
    for (int i = 1; i <= r; ++i)
      for (int j = i + 1; j <= r; ++j) {
        if (rs.a(i, j) == 0) continue;
        if (rs.is_right_descent(w, i) || rs.is_right_descent(w, j)) continue;
        if (rs.braid_order(i, j) == 3) {
          auto R = [&](ElemId x, int k) { return rs.right_mult(x, k); };
          auto C = [&](ElemId x, int k) { return rs.chamber_index(x, k); };
          MinRelation h{w, i, j, RelationKind::Hexagon, 0, {}, {}};
          h.lhs = form({{C(R(w, i), i), 1}, {C(R(w, j), j), 1}});
          h.args = {form({{C(w, i), 1}, {C(R(R(w, i), j), j), 1}}), form({{C(R(R(w, j), i), i), 1}, {C(w, j), 1}})};
          out.push_back(std::move(h));
        } else {
          // (s, l): a_sl = -1
          int s = rs.a(i, j) == -1 ? i : j, l = s == i ? j : i;
          octagon(rs, w, s, l, true, out);
          if (!canonical) octagon(rs, w, l, s, false, out);
        }
      }
  return out;
}

std::string kind_name(RelationKind k) {
  switch (k) {
    case RelationKind::Hexagon: return "hexagon";
    case RelationKind::Octagon1: return "octagon(a_ij=-1)";
    case RelationKind::Octagon2: return "octagon(a_ij=-2)";
  }
  return "?";
}

}  // namespace

const std::vector<MinRelation>& pluecker_relations(const RootSystemPtr& rs) {
  static std::mutex mu;
  static std::vector<std::pair<std::weak_ptr<const RootSystem>, std::shared_ptr<std::vector<MinRelation>>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  for (auto& [wp, rel] : cache)
    if (auto sp = wp.lock(); sp && sp.get() == rs.get()) return *rel;
  std::erase_if(cache, [](auto& e) { return e.first.expired(); });
  cache.emplace_back(rs, std::make_shared<std::vector<MinRelation>>(build_relations(*rs, false)));
  return *cache.back().second;
}

std::vector<MinRelation> canonical_relations(const RootSystemPtr& rs) { return build_relations(*rs, true); }

std::string PluckerViolation::describe(const RootSystem& rs) const {
  return kind_name(kind) + " relation " + std::to_string(eq + 1) + " at w=" + word_to_string(rs.element(w).word) +
         " i=" + std::to_string(i) + " j=" + std::to_string(j) + ": lhs " + std::to_string(lhs) + " != min " +
         std::to_string(rhs);
}

std::string EdgeViolation::describe(const RootSystem& rs) const {
  return "edge inequality at w=" + word_to_string(rs.element(w).word) + " i=" + std::to_string(i) + ": length " +
         std::to_string(length);
}

std::vector<PluckerViolation> check_tropical_pluecker(const BZDatum& M) {
  std::vector<PluckerViolation> out;
  for (const MinRelation& r : pluecker_relations(M.rs)) {
    Int lhs = r.lhs.eval(M.values);
    Int rhs = r.args[0].eval(M.values);
    for (std::size_t t = 1; t < r.args.size(); ++t) rhs = std::min(rhs, r.args[t].eval(M.values));
    if (lhs != rhs) out.push_back({r.w, r.i, r.j, r.kind, r.eq, lhs, rhs});
  }
  return out;
}

Int edge_length(const BZDatum& M, ElemId w, int i) {
  const RootSystem& rs = *M.rs;
  Int c = checked_sub(-M.at(w, i), M.at(rs.right_mult(w, i), i));
  for (int j = 1; j <= rs.rank(); ++j)
    if (j != i) c = checked_sub(c, checked_mul(rs.a(j, i), M.at(w, j)));
  return c;
}

std::vector<EdgeViolation> check_edge_inequalities(const BZDatum& M) {
  std::vector<EdgeViolation> out;
  const RootSystem& rs = *M.rs;
  for (ElemId w = 0; w < static_cast<ElemId>(rs.order()); ++w)
    for (int i = 1; i <= rs.rank(); ++i) {
      if (rs.is_right_descent(w, i)) continue;
      Int c = edge_length(M, w, i);
      if (c < 0) out.push_back({w, i, c});
    }
  return out;
}

Coweight vertex(const BZDatum& M, ElemId w) {
  const RootSystem& rs = *M.rs;
  Coweight mu = rs.zero_coweight();
  for (int i = 1; i <= rs.rank(); ++i) mu = mu + rs.act(w, rs.simple_coroot(i)) * M.at(w, i);
  return mu;
}

std::vector<Coweight> vertices(const BZDatum& M) {
  auto bad = check_edge_inequalities(M);
  if (!bad.empty()) throw EdgeInequalityViolation(bad.front().describe(*M.rs));
  std::vector<Coweight> out;
  out.reserve(M.rs->order());
  for (ElemId w = 0; w < static_cast<ElemId>(M.rs->order()); ++w) out.push_back(vertex(M, w));
  return out;
}

BZDatum from_lusztig(const RootSystemPtr& rs, const LusztigDatum& d) {
  check_lusztig(*rs, d);
  const BraidGraph& g = rs->braid_graph();
  const int N = rs->num_chamber_weights();
  IntVec values(N, 0);
  std::vector<char> known(N, 0);
  std::vector<IntVec> ns(g.words.size());
  std::vector<char> seen(g.words.size(), 0);
  int start = g.find(d.word);
  ns[start] = d.n;
  seen[start] = 1;
  std::deque<int> q{start};
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    PartialM part = n_to_partial_M(*rs, LusztigDatum{g.words[u], ns[u]});
    for (auto& [c, v] : part) {
      if (!known[c]) {
        known[c] = 1;
        values[c] = v;
      } else if (values[c] != v) {
        throw ConsistencyError("words disagree on chamber weight " + to_string(rs->chamber(c).weight.coords) +
                               " (" + std::to_string(values[c]) + " vs " + std::to_string(v) + " from " +
                               word_to_string(g.words[u]) + ")");
      }
    }
    for (const BraidEdge& e : g.adjacency[u])
      if (!seen[e.to]) {
        seen[e.to] = 1;
        ns[e.to] = braid_transition(*rs, e, ns[u]);
        q.push_back(e.to);
      }
  }
  for (int c = 0; c < N; ++c)
    if (!known[c]) throw ConsistencyError("chamber weight not covered by any reduced word");
  return BZDatum{rs, std::move(values)};
}

LusztigDatum lusztig_datum(const BZDatum& M, const Word& word) {
  const WordData& wd = M.rs->word_data(word);
  LusztigDatum d{word, IntVec(M.rs->m())};
  for (int k = 0; k < M.rs->m(); ++k) {
    Int c = edge_length(M, wd.prefixes[k], word[k]);
    if (c < 0)
      throw EdgeInequalityViolation("negative edge length at position " + std::to_string(k + 1) + " of " +
                                    word_to_string(word));
    d.n[k] = c;
  }
  return d;
}

BZDatum translate(const BZDatum& M, const Coweight& nu) {
  BZDatum out = M;
  for (int c = 0; c < M.rs->num_chamber_weights(); ++c)
    out.values[c] = checked_add(out.values[c], pair(nu, M.rs->chamber(c).weight));
  return out;
}

BZDatum normalize(const BZDatum& M) { return translate(M, M.rs->zero_coweight() - M.mu1()); }

bool is_bz_datum(const BZDatum& M) {
  return check_edge_inequalities(M).empty() && check_tropical_pluecker(M).empty();
}

std::optional<ValidatedBZ> ValidatedBZ::validate(BZDatum M) {
  if (!is_bz_datum(M)) return std::nullopt;
  return ValidatedBZ(std::move(M));
}

ValidatedBZ ValidatedBZ::require(BZDatum M) {
  auto e = check_edge_inequalities(M);
  if (!e.empty()) throw InvalidInput(e.front().describe(*M.rs));
  auto p = check_tropical_pluecker(M);
  if (!p.empty()) throw InvalidInput(p.front().describe(*M.rs));
  return ValidatedBZ(std::move(M));
}

}  // namespace mvpoly
