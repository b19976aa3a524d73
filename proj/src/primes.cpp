#include "mvpoly/primes.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <numeric>

#include <omp.h>

namespace mvpoly {

namespace {

IntVec strip(const RootSystem& rs, const IntVec& full) {
  return IntVec(full.begin() + rs.rank(), full.end());
}

IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec c(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) c[k] = a[k] - b[k];
  return c;
}

IntVec apply_rows(const std::vector<IntVec>& T, const IntVec& x) {
  IntVec y(T.size());
  for (std::size_t k = 0; k < T.size(); ++k) y[k] = dot(T[k], x);
  return y;
}

IntVec edge_form(const RootSystem& rs, ElemId w, int i) {
  IntVec f(rs.num_chamber_weights(), 0);
  f[rs.chamber_index(w, i)] -= 1;
  f[rs.chamber_index(rs.right_mult(w, i), i)] -= 1;
  for (int j = 1; j <= rs.rank(); ++j)
    if (j != i) f[rs.chamber_index(w, j)] -= rs.a(j, i);
  return f;
}

}  // namespace

BZDatum expand(const RootSystemPtr& rs, const IntVec& x) {
  BZDatum M = zero_datum(rs);
  std::copy(x.begin(), x.end(), M.values.begin() + rs->rank());
  return M;
}

std::vector<BZChoice> enumerate_choices(const RootSystemPtr& rs, std::size_t cap) {
  auto rel = canonical_relations(rs);
  std::size_t total = 1;
  for (auto& r : rel) {
    total *= r.args.size();
    if (total > cap) throw LimitExceeded("number of BZ choices exceeds the cap " + std::to_string(cap));
  }
  std::vector<BZChoice> out;
  BZChoice c(rel.size(), 0);
  while (true) {
    out.push_back(c);
    int k = static_cast<int>(c.size()) - 1;
    while (k >= 0 && c[k] + 1 == static_cast<int>(rel[k].args.size())) c[k--] = 0;
    if (k < 0) break;
    ++c[k];
  }
  return out;
}

std::vector<IntVec> chart_matrix(const RootSystem& rs, const Word& word) {
  const WordData& wd = rs.word_data(word);
  std::vector<IntVec> T;
  for (int k = 0; k < rs.m(); ++k) T.push_back(strip(rs, edge_form(rs, wd.prefixes[k], word[k])));
  return T;
}

ChoiceCone cone_of_choice(const RootSystemPtr& rs, const std::vector<MinRelation>& relations, const BZChoice& choice,
                          const Word& reference) {
  const int N = rs->num_chamber_weights();
  ChoiceCone cc;
  cc.choice = choice;
  cc.mspace.dim = N - rs->rank();
  for (std::size_t t = 0; t < relations.size(); ++t) {
    const MinRelation& r = relations[t];
    IntVec chosen = r.args[choice[t]].dense(N);
    cc.mspace.equalities.push_back(strip(*rs, sub(r.lhs.dense(N), chosen)));
    for (std::size_t a = 0; a < r.args.size(); ++a)
      if (static_cast<int>(a) != choice[t]) cc.mspace.inequalities.push_back(strip(*rs, sub(r.args[a].dense(N), chosen)));
  }
  for (ElemId w = 0; w < static_cast<ElemId>(rs->order()); ++w)
    for (int i = 1; i <= rs->rank(); ++i)
      if (!rs->is_right_descent(w, i)) cc.mspace.inequalities.push_back(strip(*rs, edge_form(*rs, w, i)));
  double_description(cc.mspace);
  if (!cc.mspace.pointed()) throw ConsistencyError("choice cone is not pointed");
  auto T = chart_matrix(*rs, reference);
  for (auto& ray : cc.mspace.rays) cc.chart_rays.push_back(apply_rows(T, ray));
  cc.dim = matrix_rank(cc.mspace.rays);
  if (matrix_rank(cc.chart_rays) != cc.dim) throw ConsistencyError("chart map is not injective on a choice cone");
  cc.maximal = cc.dim == rs->m();
  if (cc.maximal) {
    cc.chart = cone_from_rays(rs->m(), cc.chart_rays);
    cc.hilbert = hilbert_basis(cc.chart);
  }
  return cc;
}

PrimeCatalog prime_catalog(const RootSystemPtr& rs, const CatalogOptions& opts) {
  PrimeCatalog cat;
  cat.rs = rs;
  cat.reference = rs->reference_word();
  cat.relations = canonical_relations(rs);
  auto choices = enumerate_choices(rs, opts.max_choices);
  rs->braid_graph();  // build once before any worker touches it
  cat.cones.resize(choices.size());
  if (opts.exec.threads > 1) {
    std::exception_ptr err;
    const long C = static_cast<long>(choices.size());
#pragma omp parallel for num_threads(opts.exec.threads) schedule(dynamic)
    for (long t = 0; t < C; ++t) {
      try {
        cat.cones[t] = cone_of_choice(rs, cat.relations, choices[t], cat.reference);
      } catch (...) {
#pragma omp critical
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
  } else {
    for (std::size_t t = 0; t < choices.size(); ++t)
      cat.cones[t] = cone_of_choice(rs, cat.relations, choices[t], cat.reference);
  }

  std::map<IntVec, IntVec> found;  // M-vector -> chart vector
  for (int t = 0; t < static_cast<int>(cat.cones.size()); ++t) {
    const ChoiceCone& cc = cat.cones[t];
    if (!cc.maximal) continue;
    cat.maximal.push_back(t);
    for (auto& h : cc.hilbert) {
      BZDatum M = from_lusztig(rs, LusztigDatum{cat.reference, h});
      if (!cc.mspace.contains(strip(*rs, M.values)))
        throw ConsistencyError("Hilbert basis element leaves its cone after assembly");
      found.emplace(M.values, h);
    }
  }
  std::vector<std::pair<IntVec, IntVec>> order(found.begin(), found.end());
  std::sort(order.begin(), order.end(), [](auto& a, auto& b) {
    Int ha = std::accumulate(a.second.begin(), a.second.end(), Int{0});
    Int hb = std::accumulate(b.second.begin(), b.second.end(), Int{0});
    return ha != hb ? ha < hb : a.second < b.second;
  });
  std::map<IntVec, int> index;
  for (std::size_t p = 0; p < order.size(); ++p) {
    std::string label;
    for (std::size_t q = p + 1; q > 0; q = (q - 1) / 26) label.insert(label.begin(), char('A' + (q - 1) % 26));
    cat.primes.push_back(Prime{label, BZDatum{rs, order[p].first}, order[p].second});
    index[order[p].second] = static_cast<int>(p);
  }
  for (int t : cat.maximal) {
    std::vector<int> cl;
    for (auto& h : cat.cones[t].hilbert) cl.push_back(index.at(h));
    cat.clusters.push_back(cl);  // same order as the cone's Hilbert basis
  }
  // lower-dimensional cones should sit inside some maximal cone
  for (std::size_t t = 0; t < cat.cones.size(); ++t) {
    const ChoiceCone& cc = cat.cones[t];
    if (cc.maximal || cc.mspace.rays.empty()) continue;
    bool inside = false;
    for (int u : cat.maximal) {
      bool all = true;
      for (auto& ray : cc.mspace.rays)
        if (!cat.cones[u].mspace.contains(ray)) {
          all = false;
          break;
        }
      if (all) {
        inside = true;
        break;
      }
    }
    if (!inside) cat.warnings.push_back("cone " + std::to_string(t) + " (dim " + std::to_string(cc.dim) +
                                        ") is not contained in any maximal cone");
  }
  return cat;
}

Decomposition decompose(const PrimeCatalog& cat, const BZDatum& M) {
  Decomposition dec;
  IntVec n = lusztig_datum(M, cat.reference).n;
  if (is_zero(n)) {
    dec.cluster = 0;
    return dec;
  }
  for (std::size_t c = 0; c < cat.maximal.size(); ++c) {
    const ChoiceCone& cc = cat.cones[cat.maximal[c]];
    if (!cc.chart.contains(n)) continue;
    IntVec coeff;
    if (!integer_combination(cc.hilbert, n, &coeff)) continue;
    dec.cluster = static_cast<int>(c);
    for (std::size_t g = 0; g < coeff.size(); ++g)
      if (coeff[g] > 0) dec.parts.emplace_back(cat.clusters[c][g], coeff[g]);
    std::sort(dec.parts.begin(), dec.parts.end());
    BZDatum sum = zero_datum(cat.rs);
    for (auto& [p, k] : dec.parts)
      for (std::size_t q = 0; q < sum.values.size(); ++q) sum.values[q] += k * cat.primes[p].datum.values[q];
    if (sum.values != M.values) throw ConsistencyError("decomposition does not reproduce the datum");
    return dec;
  }
  throw ConsistencyError("no cluster decomposes the datum");
}

}  // namespace mvpoly
