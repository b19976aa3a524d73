#include "mvpoly/rep.hpp"

#include <algorithm>
#include <exception>
#include <functional>

#include <omp.h>

#include "mvpoly/polytope.hpp"

namespace mvpoly {

std::vector<LusztigDatum> enumerate_lusztig(const RootSystem& rs, const Word& word, const Coweight& mu) {
  std::vector<LusztigDatum> out;
  if (!mu.nonnegative()) return out;
  const WordData& wd = rs.word_data(word);
  const int m = rs.m(), r = rs.rank();
  // support[k][c]: some beta_l with l >= k has a positive c-coordinate
  std::vector<std::vector<char>> support(m + 1, std::vector<char>(r, 0));
  for (int k = m - 1; k >= 0; --k)
    for (int c = 0; c < r; ++c) support[k][c] = support[k + 1][c] || wd.coroots[k].coords[c] > 0;
  IntVec n(m, 0), rem = mu.coords;
  std::function<void(int)> rec = [&](int k) {
    for (int c = 0; c < r; ++c)
      if (rem[c] > 0 && !support[k][c]) return;
    if (k == m) {
      out.push_back(LusztigDatum{word, n});
      return;
    }
    const IntVec& b = wd.coroots[k].coords;
    Int cap = -1;
    for (int c = 0; c < r; ++c)
      if (b[c] > 0) cap = cap < 0 ? rem[c] / b[c] : std::min(cap, rem[c] / b[c]);
    for (Int t = 0; t <= cap; ++t) {
      n[k] = t;
      for (int c = 0; c < r; ++c) rem[c] -= t * b[c];
      rec(k + 1);
      for (int c = 0; c < r; ++c) rem[c] += t * b[c];
    }
    n[k] = 0;
  };
  rec(0);
  return out;
}

std::vector<BZDatum> enumerate_mv(const RootSystemPtr& rs, const Coweight& mu, const Exec& exec, const Word* word) {
  const Word& w = word ? *word : rs->reference_word();
  auto data = enumerate_lusztig(*rs, w, mu);
  std::vector<BZDatum> out(data.size());
  auto one = [&](std::size_t t) {
    BZDatum M = from_lusztig(rs, data[t]);
    if (!is_bz_datum(M)) throw ConsistencyError("assembled datum fails validation");
    out[t] = std::move(M);
  };
  if (exec.threads > 1) {
    std::exception_ptr err;
    const long N = static_cast<long>(data.size());
#pragma omp parallel for num_threads(exec.threads) schedule(dynamic, 4)
    for (long t = 0; t < N; ++t) {
      try {
        one(static_cast<std::size_t>(t));
      } catch (...) {
#pragma omp critical
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
  } else {
    for (std::size_t t = 0; t < data.size(); ++t) one(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void require_dominant(const RootSystem& rs, const Coweight& lambda, const char* what) {
  if (static_cast<int>(lambda.coords.size()) != rs.rank()) throw InvalidInput(std::string(what) + " has wrong length");
  if (!rs.is_dominant(lambda)) throw InvalidInput(std::string(what) + " is not dominant");
}

template <class Pred>
Int count_filtered(const std::vector<BZDatum>& data, const Coweight& shift, Pred pred) {
  Int n = 0;
  for (const BZDatum& M0 : data)
    if (pred(translate(M0, shift))) ++n;
  return n;
}

// w0 s_i Lambda_i for each i
std::vector<int> canonical_lower(const RootSystem& rs) {
  std::vector<int> c;
  for (int i = 1; i <= rs.rank(); ++i) c.push_back(rs.chamber_index(rs.multiply(rs.longest(), rs.simple_reflection(i)), i));
  return c;
}

}  // namespace

Int weight_mult_mv(const RootSystemPtr& rs, const Coweight& lambda, const Coweight& mu, const Exec& exec) {
  require_dominant(*rs, lambda, "lambda");
  Coweight d = lambda - mu;
  if (!d.nonnegative()) return 0;
  return count_filtered(enumerate_mv(rs, d, exec), mu, [&](const BZDatum& M) { return contains_in_weyl(M, lambda); });
}

Int weight_mult_canonical(const RootSystemPtr& rs, const Coweight& lambda, const Coweight& mu, const Exec& exec) {
  require_dominant(*rs, lambda, "lambda");
  Coweight d = lambda - mu;
  if (!d.nonnegative()) return 0;
  Coweight low = rs->act(rs->longest(), lambda);
  auto idx = canonical_lower(*rs);
  return count_filtered(enumerate_mv(rs, d, exec), mu, [&](const BZDatum& M) {
    for (int i = 0; i < rs->rank(); ++i)
      if (M[idx[i]] < low.coords[i]) return false;
    return true;
  });
}

Int tensor_mult(const RootSystemPtr& rs, const Coweight& lambda, const Coweight& mu, const Coweight& nu,
                const Exec& exec) {
  require_dominant(*rs, lambda, "lambda");
  require_dominant(*rs, mu, "mu");
  require_dominant(*rs, nu, "nu");
  Coweight d = lambda + mu - nu;
  if (!d.nonnegative()) return 0;
  Coweight low = rs->act(rs->longest(), lambda);
  return count_filtered(enumerate_mv(rs, d, exec), nu - mu, [&](const BZDatum& M) {
    for (int c = 0; c < rs->num_chamber_weights(); ++c) {
      const ChamberWeight& g = rs->chamber(c);
      if (M[c] < low.coords[g.level - 1]) return false;
      if (M[c] < pair(nu, g.weight) - mu.coords[g.level - 1]) return false;
    }
    return true;
  });
}

Int tensor_mult_canonical(const RootSystemPtr& rs, const Coweight& lambda, const Coweight& mu, const Coweight& nu,
                          const Exec& exec) {
  require_dominant(*rs, lambda, "lambda");
  require_dominant(*rs, mu, "mu");
  require_dominant(*rs, nu, "nu");
  Coweight d = lambda + mu - nu;
  if (!d.nonnegative()) return 0;
  Coweight low = rs->act(rs->longest(), lambda);
  auto lower = canonical_lower(*rs);
  return count_filtered(enumerate_mv(rs, d, exec), nu - mu, [&](const BZDatum& M) {
    for (int i = 1; i <= rs->rank(); ++i) {
      if (M[lower[i - 1]] < low.coords[i - 1]) return false;
      int c = rs->chamber_index(rs->simple_reflection(i), i);
      if (M[c] < pair(nu, rs->chamber(c).weight) - mu.coords[i - 1]) return false;
    }
    return true;
  });
}

namespace {

int sign(const RootSystem& rs, ElemId w) { return rs.element(w).length % 2 ? -1 : 1; }

Coweight halve(const Coweight& x) {
  Coweight h = x;
  for (Int& v : h.coords) {
    if (v % 2 != 0) throw ConsistencyError("odd coordinate in doubled coweight");
    v /= 2;
  }
  return h;
}

}  // namespace

Int kostant_mult_oracle(const RootSystem& rs, const Coweight& lambda, const Coweight& mu) {
  require_dominant(rs, lambda, "lambda");
  Coweight rho2 = rs.two_rho_vee();
  Coweight a = lambda * 2 + rho2, b = mu * 2 + rho2;
  Int total = 0;
  for (ElemId w = 0; w < static_cast<ElemId>(rs.order()); ++w)
    total += sign(rs, w) * rs.kpf(halve(rs.act(w, a) - b));
  return total;
}

Int steinberg_oracle(const RootSystem& rs, const Coweight& lambda, const Coweight& mu, const Coweight& nu) {
  require_dominant(rs, lambda, "lambda");
  require_dominant(rs, mu, "mu");
  require_dominant(rs, nu, "nu");
  Coweight rho2 = rs.two_rho_vee();
  Coweight a = lambda * 2 + rho2, b = mu * 2 + rho2, c = nu * 2 + rho2 * 2;
  Int total = 0;
  for (ElemId w = 0; w < static_cast<ElemId>(rs.order()); ++w) {
    Coweight wa = rs.act(w, a);
    for (ElemId v = 0; v < static_cast<ElemId>(rs.order()); ++v)
      total += sign(rs, w) * sign(rs, v) * rs.kpf(halve(wa + rs.act(v, b) - c));
  }
  return total;
}

Int weyl_dimension(const RootSystem& rs, const Coweight& lambda) {
  require_dominant(rs, lambda, "lambda");
  Coweight rho2 = rs.two_rho_vee();
  IntVec pl = rs.coweight_root_pairings(lambda * 2 + rho2), pr = rs.coweight_root_pairings(rho2);
  __int128 num = 1, den = 1;
  for (const IntVec& alpha : rs.positive_roots()) {
    num *= dot(alpha, pl);
    den *= dot(alpha, pr);
  }
  if (den == 0 || num % den != 0) throw ConsistencyError("Weyl dimension is not an integer");
  return static_cast<Int>(num / den);
}

std::vector<Coweight> weight_candidates(const RootSystem& rs, const Coweight& lambda) {
  Coweight low = rs.act(rs.longest(), lambda);
  std::vector<Coweight> out;
  IntVec v = low.coords;
  const int r = rs.rank();
  while (true) {
    out.push_back(Coweight{v});
    int k = r - 1;
    while (k >= 0 && v[k] == lambda.coords[k]) v[k] = low.coords[k], --k;
    if (k < 0) break;
    ++v[k];
  }
  return out;
}

std::vector<Coweight> dominant_in_box(const RootSystem& rs, Int bound) {
  std::vector<Coweight> out;
  const int r = rs.rank();
  IntVec v(r, 0);
  while (true) {
    if (rs.is_dominant(Coweight{v})) out.push_back(Coweight{v});
    int k = r - 1;
    while (k >= 0 && v[k] == bound) v[k] = 0, --k;
    if (k < 0) break;
    ++v[k];
  }
  return out;
}

std::vector<Coweight> nonnegative_up_to(const RootSystem& rs, Int total) {
  std::vector<Coweight> out;
  const int r = rs.rank();
  IntVec v(r, 0);
  std::function<void(int, Int)> rec = [&](int k, Int left) {
    if (k == r) {
      out.push_back(Coweight{v});
      return;
    }
    for (Int t = 0; t <= left; ++t) {
      v[k] = t;
      rec(k + 1, left - t);
    }
    v[k] = 0;
  };
  rec(0, total);
  return out;
}

}  // namespace mvpoly
