#include "mvpoly/sln.hpp"

#include <algorithm>
#include <sstream>

namespace mvpoly {

RootSystemPtr special_linear(int n, const Limits& limits) {
  if (n < 2) throw InvalidInput("SL_n needs n >= 2");
  return RootSystem::create(build_cartan(Family::A, n - 1), limits);
}

Word ak_word(int n) {
  if (n < 2) throw InvalidInput("ak_word needs n >= 2");
  Word w;
  for (int top = n - 1; top >= 1; --top)
    for (int i = 1; i <= top; ++i) w.push_back(i);
  return w;
}

std::vector<int> weight_to_subset(const Weight& v) {
  const int n = static_cast<int>(v.coords.size()) + 1;
  for (int last = 0; last <= 1; ++last) {
    std::vector<int> in(n + 1, 0);
    in[n] = last;
    bool ok = true;
    for (int j = n - 1; j >= 1 && ok; --j) {
      in[j] = static_cast<int>(v.coords[j - 1]) + in[j + 1];
      if (in[j] != 0 && in[j] != 1) ok = false;
    }
    if (!ok) continue;
    std::vector<int> s;
    for (int j = 1; j <= n; ++j)
      if (in[j]) s.push_back(j);
    if (!s.empty() && static_cast<int>(s.size()) < n) return s;
  }
  throw InvalidInput("weight " + to_string(v.coords) + " is not a chamber weight of type A");
}

Weight subset_to_weight(int n, const std::vector<int>& subset) {
  std::vector<int> in(n + 2, 0);
  for (int s : subset) {
    if (s < 1 || s > n) throw InvalidInput("subset member out of range");
    in[s] = 1;
  }
  Weight v{IntVec(n - 1)};
  for (int j = 1; j < n; ++j) v.coords[j - 1] = in[j] - in[j + 1];
  return v;
}

std::string subset_key(const std::vector<int>& subset) {
  bool wide = std::any_of(subset.begin(), subset.end(), [](int s) { return s > 9; });
  std::string k;
  for (std::size_t t = 0; t < subset.size(); ++t) {
    if (wide && t) k += ",";
    k += std::to_string(subset[t]);
  }
  return k;
}

std::vector<int> parse_subset_key(const std::string& key) {
  std::vector<int> s;
  if (key.find(',') != std::string::npos) {
    std::stringstream ss(key);
    std::string tok;
    while (std::getline(ss, tok, ',')) s.push_back(std::stoi(tok));
  } else {
    for (char c : key) {
      if (c < '1' || c > '9') throw InvalidInput("bad subset key '" + key + "'");
      s.push_back(c - '0');
    }
  }
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw InvalidInput("repeated subset member");
  return s;
}

Int M_subset(const BZDatum& M, const std::vector<int>& subset) {
  const int n = M.rs->rank() + 1;
  if (subset.empty() || static_cast<int>(subset.size()) == n) return 0;
  auto c = M.rs->find_chamber(subset_to_weight(n, subset));
  if (!c) throw ConsistencyError("subset has no chamber weight");
  return M[*c];
}

Coweight gl_to_coweight(const IntVec& v) {
  Int s = 0;
  Coweight c{IntVec(v.size() - 1)};
  for (std::size_t j = 0; j + 1 < v.size(); ++j) c.coords[j] = (s += v[j]);
  if (s + v.back() != 0) throw InvalidInput("GL_n coweight must have zero sum");
  return c;
}

IntVec coweight_to_gl(const Coweight& c) {
  IntVec v(c.coords.size() + 1);
  Int prev = 0;
  for (std::size_t j = 0; j < c.coords.size(); ++j) {
    v[j] = c.coords[j] - prev;
    prev = c.coords[j];
  }
  v.back() = -prev;
  return v;
}

Root coroot_to_root(const Coweight& c) {
  int a = -1, b = -1;
  for (int j = 0; j < static_cast<int>(c.coords.size()); ++j) {
    if (c.coords[j] == 1) {
      if (a < 0) a = j + 1;
      if (b >= 0) throw InvalidInput("not a positive root of type A");
    } else if (c.coords[j] == 0) {
      if (a >= 0 && b < 0) b = j + 1;
    } else {
      throw InvalidInput("not a positive root of type A");
    }
  }
  if (a < 0) throw InvalidInput("zero is not a root");
  if (b < 0) b = static_cast<int>(c.coords.size()) + 1;
  return {a, b};
}

Coweight root_to_coroot(int n, const Root& r) {
  Coweight c{IntVec(n - 1, 0)};
  for (int j = r.first; j < r.second; ++j) c.coords[j - 1] = 1;
  return c;
}

LusztigDatum picture_to_lusztig(const RootSystem& rs, const KostantPicture& p) {
  const int n = rs.rank() + 1;
  if (p.n != n) throw InvalidInput("picture size does not match the group");
  if (static_cast<int>(p.p.size()) != rs.m()) throw InvalidInput("picture must have one entry per positive root");
  Word w = ak_word(n);
  const WordData& wd = rs.word_data(w);
  LusztigDatum d{w, IntVec(rs.m())};
  for (int k = 0; k < rs.m(); ++k) {
    auto it = p.p.find(coroot_to_root(wd.coroots[k]));
    if (it == p.p.end()) throw InvalidInput("picture misses a positive root");
    if (it->second < 0) throw InvalidInput("picture entries must be nonnegative");
    d.n[k] = it->second;
  }
  return d;
}

KostantPicture lusztig_to_picture(const RootSystem& rs, const LusztigDatum& d) {
  const int n = rs.rank() + 1;
  LusztigDatum ak{ak_word(n), d.word == ak_word(n) ? d.n : transition_map(rs, d.word, ak_word(n), d.n)};
  const WordData& wd = rs.word_data(ak.word);
  KostantPicture p{n, {}};
  for (int k = 0; k < rs.m(); ++k) p.p[coroot_to_root(wd.coroots[k])] = ak.n[k];
  return p;
}

KostantPicture collapse(const KostantPicture& p, int k) {
  const int n = p.n;
  if (k < 1 || k > n) throw InvalidInput("collapse index out of range");
  auto P = [&](int a, int b) {
    auto it = p.p.find({a, b});
    if (it == p.p.end()) throw InvalidInput("picture misses a positive root");
    return it->second;
  };
  KostantPicture q{n, {}};
  auto Q = [&](int a, int b) -> Int {
    if (a == k || b == k) return 0;
    return q.p.at({a, b});
  };
  for (int width = 1; width < n; ++width)
    for (int a = 1; a + width <= n; ++a) {
      int b = a + width;
      if (a == k || b == k) continue;
      if (!(a < k && k < b)) {
        q.p[{a, b}] = P(a, b);
        continue;
      }
      Int left = 0, right = 0;
      for (int r = k; r <= b - 1; ++r) left += P(a, r) - Q(a, r);
      for (int s = a + 1; s <= k; ++s) right += P(s, b) - Q(s, b);
      Int v = std::min(left, right);
      if (v < 0) throw ConsistencyError("collapse produced a negative entry");
      q.p[{a, b}] = v;
    }
  return q;
}

KostantPicture facet_lusztig(const BZDatum& M, int k) {
  const RootSystem& rs = *M.rs;
  const int n = rs.rank() + 1;
  if (k < 1 || k > n) throw InvalidInput("facet index out of range");
  Word start;
  for (int i = k; i <= n - 1; ++i) start.push_back(i);
  ElemId cur = rs.from_word(start);
  KostantPicture q{n, {}};
  if (n == 2) return q;
  std::vector<Root> expect;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (a != k && b != k) expect.push_back({a, b});
  std::size_t t = 0;
  for (int i : ak_word(n - 1)) {
    Root lab = coroot_to_root(rs.act(cur, rs.simple_coroot(i)));
    if (t >= expect.size() || lab != expect[t])
      throw ConsistencyError("facet path labels are not the roots avoiding k in order");
    ++t;
    Int c = edge_length(M, cur, i);
    if (c < 0) throw EdgeInequalityViolation("negative edge length on the facet path");
    q.p[lab] = c;
    cur = rs.right_mult(cur, i);
  }
  return q;
}

CollapseCheck verify_collapse(const BZDatum& M, const KostantPicture& p, int k) {
  CollapseCheck out;
  const int n = p.n;
  KostantPicture c = collapse(p, k), f = facet_lusztig(M, k);
  if (c != f) {
    out.ok = false;
    out.reason = "collapse disagrees with the facet edge lengths for k=" + std::to_string(k);
    return out;
  }
  auto iv = [](int lo, int hi, int skip) {
    std::vector<int> s;
    for (int x = lo; x <= hi; ++x)
      if (x != skip) s.push_back(x);
    return s;
  };
  for (int a = 1; a < k; ++a)
    for (int b = k + 1; b <= n; ++b) {
      Int lhs = M_subset(M, iv(a, b, k)) + M_subset(M, iv(a + 1, b - 1, 0));
      Int r1 = M_subset(M, iv(a + 1, b, k)) + M_subset(M, iv(a, b - 1, 0));
      Int r2 = M_subset(M, iv(a, b - 1, k)) + M_subset(M, iv(a + 1, b, 0));
      if (lhs != std::min(r1, r2)) {
        out.ok = false;
        out.reason = "collapse relation fails at a=" + std::to_string(a) + " b=" + std::to_string(b) +
                     " k=" + std::to_string(k);
        return out;
      }
    }
  return out;
}

}  // namespace mvpoly
