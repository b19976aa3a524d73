#include "mvpoly/lusztig.hpp"

#include <algorithm>
#include <deque>

namespace mvpoly {

void check_lusztig(const RootSystem& rs, const LusztigDatum& d, Int cap) {
  rs.word_data(d.word);
  if (static_cast<int>(d.n.size()) != rs.m())
    throw InvalidInput("Lusztig datum has " + std::to_string(d.n.size()) + " entries, expected " +
                       std::to_string(rs.m()));
  for (Int x : d.n) {
    if (x < 0) throw InvalidInput("Lusztig datum entries must be nonnegative");
    if (x > cap) throw LimitExceeded("Lusztig entry " + std::to_string(x) + " exceeds cap");
  }
}

Coweight lusztig_coweight(const RootSystem& rs, const LusztigDatum& d) {
  const WordData& wd = rs.word_data(d.word);
  Coweight mu = rs.zero_coweight();
  for (int k = 0; k < rs.m(); ++k) mu = mu + wd.coroots[k] * d.n[k];
  return mu;
}

PartialM n_to_partial_M(const RootSystem& rs, const LusztigDatum& d) {
  const WordData& wd = rs.word_data(d.word);
  PartialM out;
  for (int i = 0; i < rs.rank(); ++i) out[i] = 0;
  Coweight mu = rs.zero_coweight();
  for (int k = 0; k < rs.m(); ++k) {
    mu = mu + wd.coroots[k] * d.n[k];
    out[wd.gammas[k]] = pair(mu, rs.chamber(wd.gammas[k]).weight);
  }
  return out;
}

LusztigDatum partial_M_to_n(const RootSystem& rs, const Word& word, const PartialM& partial) {
  const WordData& wd = rs.word_data(word);
  auto get = [&](int idx) {
    auto it = partial.find(idx);
    if (it == partial.end()) throw InvalidInput("partial data misses a chamber weight of the word");
    return it->second;
  };
  for (int i = 0; i < rs.rank(); ++i)
    if (get(i) != 0) throw InvalidInput("partial data is not normalized: M at a fundamental weight is nonzero");
  LusztigDatum d{word, IntVec(rs.m(), 0)};
  for (int k = 0; k < rs.m(); ++k) {
    int i = word[k];
    ElemId prev = wd.prefixes[k], cur = wd.prefixes[k + 1];
    Int c = -get(rs.chamber_index(prev, i)) - get(rs.chamber_index(cur, i));
    for (int j = 1; j <= rs.rank(); ++j)
      if (j != i) c = checked_sub(c, checked_mul(rs.a(j, i), get(rs.chamber_index(cur, j))));
    if (c < 0)
      throw EdgeInequalityViolation("negative edge length " + std::to_string(c) + " at position " +
                                    std::to_string(k + 1) + " of " + word_to_string(word));
    d.n[k] = c;
  }
  return d;
}

IntVec braid_transition(const RootSystem& rs, const BraidEdge& e, const IntVec& n) {
  IntVec out = n;
  const Int* x = n.data() + e.k;
  Int* y = out.data() + e.k;
  switch (e.d) {
    case 2:
      y[0] = x[1];
      y[1] = x[0];
      break;
    case 3: {
      Int p = std::min(x[0], x[2]);
      y[0] = x[1] + x[2] - p;
      y[1] = p;
      y[2] = x[0] + x[1] - p;
      break;
    }
    case 4: {
      Int p1 = std::min({x[0] + x[1], x[0] + x[3], x[2] + x[3]});
      if (rs.a(e.i, e.j) == -1) {
        Int p2 = std::min({x[0] + 2 * x[1], x[0] + 2 * x[3], x[2] + 2 * x[3]});
        y[0] = x[1] + x[2] + x[3] - p1;
        y[1] = 2 * p1 - p2;
        y[2] = p2 - p1;
        y[3] = x[0] + 2 * x[1] + x[2] - p2;
      } else {
        Int p2 = std::min({2 * x[0] + x[1], 2 * x[0] + x[3], 2 * x[2] + x[3]});
        y[0] = x[1] + 2 * x[2] + x[3] - p2;
        y[1] = p2 - p1;
        y[2] = 2 * p1 - p2;
        y[3] = x[0] + x[1] + x[2] - p1;
      }
      break;
    }
    default:
      throw ConsistencyError("bad braid order");
  }
  for (int t = 0; t < e.d; ++t)
    if (y[t] < 0) throw ConsistencyError("braid transition produced a negative entry");
  return out;
}

std::vector<BraidEdge> braid_path(const RootSystem& rs, const Word& from, const Word& to) {
  const BraidGraph& g = rs.braid_graph();
  int s = g.find(from), t = g.find(to);
  if (s < 0) rs.word_data(from);
  if (t < 0) rs.word_data(to);
  std::vector<int> parent(g.words.size(), -1);
  std::vector<BraidEdge> via(g.words.size());
  std::deque<int> q{s};
  parent[s] = s;
  while (!q.empty() && parent[t] < 0) {
    int u = q.front();
    q.pop_front();
    for (const BraidEdge& e : g.adjacency[u])
      if (parent[e.to] < 0) {
        parent[e.to] = u;
        via[e.to] = e;
        q.push_back(e.to);
      }
  }
  if (parent[t] < 0) throw ConsistencyError("braid graph is disconnected");
  std::vector<BraidEdge> path;
  for (int v = t; v != s; v = parent[v]) path.push_back(via[v]);
  std::reverse(path.begin(), path.end());
  return path;
}

IntVec apply_path(const RootSystem& rs, const std::vector<BraidEdge>& path, const IntVec& n) {
  IntVec cur = n;
  for (const BraidEdge& e : path) cur = braid_transition(rs, e, cur);
  return cur;
}

IntVec transition_map(const RootSystem& rs, const Word& from, const Word& to, const IntVec& n) {
  if (from == to) return n;
  return apply_path(rs, braid_path(rs, from, to), n);
}

}  // namespace mvpoly
