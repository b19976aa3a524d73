#include "mvpoly/root_system.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

namespace mvpoly {

std::string to_string(const IntVec& v, const char* sep) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += sep;
    s += std::to_string(v[k]);
  }
  return s;
}

std::string word_to_string(const Word& w) {
  std::string s = "(";
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(w[k]);
  }
  return s + ")";
}

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

Family parse_family(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  if (s == "D" || s == "d") return Family::D;
  if (s == "G" || s == "g" || s == "F" || s == "f" || s == "E" || s == "e")
    throw InvalidInput("family " + s + " is not supported (only A, B, C, D; no triple bonds)");
  throw InvalidInput("unknown family '" + s + "'");
}

std::string CartanDatum::label() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

CartanDatum build_cartan(Family family, int rank) {
  if (rank < 1) throw InvalidInput("rank must be positive");
  if ((family == Family::B || family == Family::C) && rank < 2)
    throw InvalidInput(std::string(1, family_letter(family)) + " needs rank >= 2");
  if (family == Family::D && rank < 3) throw InvalidInput("D needs rank >= 3 (D2 is A1 x A1)");
  CartanDatum c;
  c.family = family;
  c.rank = rank;
  c.a.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) c.a[i][i] = 2;
  auto link = [&](int i, int j, int aij, int aji) {  // 1-based
    c.a[i - 1][j - 1] = aij;
    c.a[j - 1][i - 1] = aji;
  };
  switch (family) {
    case Family::A:
      for (int i = 1; i < rank; ++i) link(i, i + 1, -1, -1);
      break;
    case Family::B:
      for (int i = 1; i < rank - 1; ++i) link(i, i + 1, -1, -1);
      link(rank - 1, rank, -2, -1);
      break;
    case Family::C:
      for (int i = 1; i < rank - 1; ++i) link(i, i + 1, -1, -1);
      link(rank - 1, rank, -1, -2);
      break;
    case Family::D:
      for (int i = 1; i < rank - 1; ++i) link(i, i + 1, -1, -1);
      // fork: r-1 and r both hang off r-2
      c.a[rank - 2][rank - 3] = c.a[rank - 3][rank - 2] = -1;
      c.a[rank - 2][rank - 1] = c.a[rank - 1][rank - 2] = 0;
      c.a[rank - 1][rank - 3] = c.a[rank - 3][rank - 1] = -1;
      break;
  }
  return c;
}

CartanDatum build_cartan(const std::string& family, int rank) { return build_cartan(parse_family(family), rank); }

Coweight Coweight::operator+(const Coweight& o) const {
  Coweight r{coords};
  for (std::size_t k = 0; k < coords.size(); ++k) r.coords[k] = checked_add(r.coords[k], o.coords[k]);
  return r;
}
Coweight Coweight::operator-(const Coweight& o) const {
  Coweight r{coords};
  for (std::size_t k = 0; k < coords.size(); ++k) r.coords[k] = checked_sub(r.coords[k], o.coords[k]);
  return r;
}
Coweight Coweight::operator*(Int k) const {
  Coweight r{coords};
  for (Int& x : r.coords) x = checked_mul(x, k);
  return r;
}
bool Coweight::geq(const Coweight& o) const { return (*this - o).nonnegative(); }
bool Coweight::nonnegative() const {
  return std::all_of(coords.begin(), coords.end(), [](Int x) { return x >= 0; });
}

IntMatrix IntMatrix::identity(int size) {
  IntMatrix m(size);
  for (int k = 0; k < size; ++k) m(k, k) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  IntMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      Int x = (*this)(i, k);
      if (!x) continue;
      for (int j = 0; j < n; ++j) r(i, j) = checked_add(r(i, j), checked_mul(x, o(k, j)));
    }
  return r;
}

IntVec IntMatrix::apply(const IntVec& v) const {
  IntVec r(n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) r[i] = checked_add(r[i], checked_mul((*this)(i, k), v[k]));
  return r;
}

int BraidGraph::num_edges() const {
  int e = 0;
  for (auto& a : adjacency) e += static_cast<int>(a.size());
  return e / 2;
}

int BraidGraph::find(const Word& w) const {
  auto it = index.find(w);
  return it == index.end() ? -1 : it->second;
}

Limits default_limits() {
  Limits l;
  if (const char* env = std::getenv("MVPOLY_RANK_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) l.max_rank = static_cast<int>(v);
  }
  return l;
}

RootSystemPtr make_root_system(const std::string& family, int rank, const Limits& limits) {
  return RootSystem::create(build_cartan(family, rank), limits);
}

// --------------------------------------------------------------------------

RootSystem::RootSystem(const CartanDatum& cartan) : cartan_(cartan) {}

std::shared_ptr<const RootSystem> RootSystem::create(const CartanDatum& cartan, const Limits& limits) {
  int r = cartan.rank;
  if (r < 1 || static_cast<int>(cartan.a.size()) != r) throw InvalidInput("malformed Cartan matrix");
  if (r > limits.max_rank)
    throw LimitExceeded("rank " + std::to_string(r) + " exceeds the cap " + std::to_string(limits.max_rank) +
                        " (raise it with MVPOLY_RANK_CAP or --rank-cap)");
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(cartan.a[i].size()) != r) throw InvalidInput("malformed Cartan matrix");
    if (cartan.a[i][i] != 2) throw InvalidInput("Cartan diagonal must be 2");
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      int x = cartan.a[i][j], y = cartan.a[j][i];
      if (x > 0 || x < -2) throw InvalidInput("off-diagonal Cartan entries must lie in {0,-1,-2}");
      if ((x == 0) != (y == 0) || x * y > 2) throw InvalidInput("unsupported Cartan pair");
    }
  }
  std::shared_ptr<RootSystem> rs(new RootSystem(cartan));
  rs->build_group();
  rs->build_roots();
  return rs;
}

int RootSystem::braid_order(int i, int j) const {
  if (i == j) return 1;
  int p = a(i, j) * a(j, i);
  return p == 0 ? 2 : p == 1 ? 3 : 4;
}

void RootSystem::build_group() {
  const int r = rank();
  std::vector<IntMatrix> S(r, IntMatrix::identity(r)), T(r, IntMatrix::identity(r));
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      S[i](k, i) -= cartan_.a[k][i];
      T[i](i, k) -= cartan_.a[k][i];
    }

  elements_.push_back(WeylElement{IntMatrix::identity(r), IntMatrix::identity(r), {}, 0});
  by_action_[elements_[0].action.data] = 0;
  // Breadth-first in queue order with ascending generators: the first time an
  // element is reached its word is the lexicographically least reduced word.
  for (std::size_t q = 0; q < elements_.size(); ++q) {
    for (int i = 0; i < r; ++i) {
      IntMatrix act = elements_[q].action * S[i];
      if (by_action_.count(act.data)) continue;
      WeylElement e;
      e.action = act;
      e.coaction = elements_[q].coaction * T[i];
      e.word = elements_[q].word;
      e.word.push_back(i + 1);
      e.length = elements_[q].length + 1;
      by_action_[act.data] = static_cast<ElemId>(elements_.size());
      elements_.push_back(std::move(e));
      if (elements_.size() > 100000) throw LimitExceeded("Weyl group too large");
    }
  }
  const int N = static_cast<int>(elements_.size());
  right_.assign(N, std::vector<ElemId>(r));
  left_.assign(N, std::vector<ElemId>(r));
  for (int w = 0; w < N; ++w)
    for (int i = 0; i < r; ++i) {
      right_[w][i] = by_action_.at((elements_[w].action * S[i]).data);
      left_[w][i] = by_action_.at((S[i] * elements_[w].action).data);
    }
  if (std::count_if(elements_.begin(), elements_.end(), [&](auto& e) { return e.length == elements_.back().length; }) != 1)
    throw ConsistencyError("longest element is not unique");

  chamber_idx_.assign(N, std::vector<int>(r));
  for (int w = 0; w < N; ++w)
    for (int i = 0; i < r; ++i) {
      IntVec v(r);
      for (int k = 0; k < r; ++k) v[k] = elements_[w].action(k, i);
      auto it = chamber_by_coords_.find(v);
      if (it == chamber_by_coords_.end()) {
        int idx = static_cast<int>(chambers_.size());
        chambers_.push_back(ChamberWeight{Weight{v}, i + 1});
        it = chamber_by_coords_.emplace(v, idx).first;
      } else if (chambers_[it->second].level != i + 1) {
        throw ConsistencyError("chamber weight with two levels");
      }
      chamber_idx_[w][i] = it->second;
    }
}

void RootSystem::build_roots() {
  const int r = rank();
  std::set<IntVec> coroots;
  for (std::size_t w = 0; w < elements_.size(); ++w)
    for (int i = 1; i <= r; ++i) {
      IntVec c = act(static_cast<ElemId>(w), simple_coroot(i)).coords;
      if (std::all_of(c.begin(), c.end(), [](Int x) { return x >= 0; })) coroots.insert(c);
    }
  for (auto& c : coroots) pos_coroots_.push_back(Coweight{c});
  auto height = [](const IntVec& v) { return std::accumulate(v.begin(), v.end(), Int{0}); };
  std::stable_sort(pos_coroots_.begin(), pos_coroots_.end(),
                   [&](const Coweight& x, const Coweight& y) { return height(x.coords) < height(y.coords); });

  // roots in simple-root coordinates: s_i x = x - (sum_j a_ij x_j) alpha_i
  std::set<IntVec> roots;
  std::deque<IntVec> todo;
  for (int i = 0; i < r; ++i) {
    IntVec e(r, 0);
    e[i] = 1;
    if (roots.insert(e).second) todo.push_back(e);
  }
  while (!todo.empty()) {
    IntVec x = todo.front();
    todo.pop_front();
    for (int i = 0; i < r; ++i) {
      IntVec y = x;
      Int p = 0;
      for (int j = 0; j < r; ++j) p += cartan_.a[i][j] * x[j];
      y[i] -= p;
      if (roots.insert(y).second) todo.push_back(y);
    }
  }
  for (auto& x : roots)
    if (std::all_of(x.begin(), x.end(), [](Int v) { return v >= 0; })) pos_roots_.push_back(x);
  std::stable_sort(pos_roots_.begin(), pos_roots_.end(),
                   [&](const IntVec& x, const IntVec& y) { return height(x) < height(y); });
  if (pos_roots_.size() != pos_coroots_.size() || static_cast<int>(pos_roots_.size()) != m())
    throw ConsistencyError("root count mismatch");
}

ElemId RootSystem::inverse(ElemId w) const {
  Word rev(elements_[w].word.rbegin(), elements_[w].word.rend());
  return from_word(rev);
}

ElemId RootSystem::multiply(ElemId u, ElemId v) const {
  ElemId x = u;
  for (int i : elements_[v].word) x = right_mult(x, i);
  return x;
}

ElemId RootSystem::simple_reflection(int i) const {
  if (i < 1 || i > rank()) throw InvalidInput("simple reflection index out of range");
  return right_[0][i - 1];
}

ElemId RootSystem::from_word(const Word& word) const {
  ElemId x = 0;
  for (int i : word) {
    if (i < 1 || i > rank()) throw InvalidInput("letter " + std::to_string(i) + " out of range");
    x = right_mult(x, i);
  }
  return x;
}

std::optional<ElemId> RootSystem::find(const IntMatrix& action) const {
  auto it = by_action_.find(action.data);
  if (it == by_action_.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::is_reduced(const Word& word) const {
  ElemId x = 0;
  for (int i : word) {
    if (i < 1 || i > rank()) return false;
    ElemId y = right_mult(x, i);
    if (elements_[y].length != elements_[x].length + 1) return false;
    x = y;
  }
  return true;
}

std::vector<Word> RootSystem::reduced_words(ElemId w) const {
  // peel left descents in increasing order; sublists come out lex-sorted
  std::map<ElemId, std::vector<Word>> memo;
  std::function<const std::vector<Word>&(ElemId)> rec = [&](ElemId x) -> const std::vector<Word>& {
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    std::vector<Word> out;
    if (elements_[x].length == 0) {
      out.push_back({});
    } else {
      for (int i = 1; i <= rank(); ++i) {
        ElemId y = left_mult(i, x);
        if (elements_[y].length >= elements_[x].length) continue;
        for (const Word& tail : rec(y)) {
          Word wd{i};
          wd.insert(wd.end(), tail.begin(), tail.end());
          out.push_back(std::move(wd));
          if (out.size() > 2000000) throw LimitExceeded("too many reduced words");
        }
      }
    }
    return memo.emplace(x, std::move(out)).first->second;
  };
  return rec(w);
}

Weight RootSystem::act(ElemId w, const Weight& v) const { return Weight{elements_[w].action.apply(v.coords)}; }
Coweight RootSystem::act(ElemId w, const Coweight& v) const { return Coweight{elements_[w].coaction.apply(v.coords)}; }

Weight RootSystem::fundamental_weight(int i) const {
  IntVec v(rank(), 0);
  v.at(i - 1) = 1;
  return Weight{v};
}

Weight RootSystem::simple_root(int i) const {
  IntVec v(rank());
  for (int k = 0; k < rank(); ++k) v[k] = cartan_.a[k][i - 1];
  return Weight{v};
}

Coweight RootSystem::simple_coroot(int i) const {
  IntVec v(rank(), 0);
  v.at(i - 1) = 1;
  return Coweight{v};
}

Coweight RootSystem::two_rho_vee() const {
  Coweight s = zero_coweight();
  for (auto& c : pos_coroots_) s = s + c;
  return s;
}

bool RootSystem::coweight_ge(ElemId w, const Coweight& mu, const Coweight& nu) const {
  Coweight d = mu - nu;
  for (int i = 1; i <= rank(); ++i)
    if (pair(d, chambers_[chamber_index(w, i)].weight) < 0) return false;
  return true;
}

IntVec RootSystem::coweight_root_pairings(const Coweight& lambda) const {
  IntVec p(rank(), 0);
  for (int j = 0; j < rank(); ++j)
    for (int k = 0; k < rank(); ++k) p[j] += lambda.coords[k] * cartan_.a[k][j];
  return p;
}

bool RootSystem::is_dominant(const Coweight& lambda) const {
  IntVec p = coweight_root_pairings(lambda);
  return std::all_of(p.begin(), p.end(), [](Int x) { return x >= 0; });
}

Int RootSystem::kpf(const Coweight& mu) const {
  if (!mu.nonnegative()) return 0;
  std::lock_guard<std::mutex> lock(kpf_mutex_);
  const int P = static_cast<int>(pos_coroots_.size());
  std::function<Int(int, const IntVec&)> rec = [&](int idx, const IntVec& v) -> Int {
    if (is_zero(v)) return 1;
    if (idx == P) return 0;
    auto key = std::make_pair(idx, v);
    auto it = kpf_memo_.find(key);
    if (it != kpf_memo_.end()) return it->second;
    Int total = 0;
    IntVec cur = v;
    const IntVec& b = pos_coroots_[idx].coords;
    while (true) {
      total = checked_add(total, rec(idx + 1, cur));
      bool ok = true;
      for (std::size_t k = 0; k < cur.size(); ++k) {
        cur[k] -= b[k];
        if (cur[k] < 0) ok = false;
      }
      if (!ok) break;
    }
    kpf_memo_.emplace(key, total);
    return total;
  };
  return rec(0, mu.coords);
}

std::optional<int> RootSystem::find_chamber(const Weight& v) const {
  auto it = chamber_by_coords_.find(v.coords);
  if (it == chamber_by_coords_.end()) return std::nullopt;
  return it->second;
}

const BraidGraph& RootSystem::braid_graph() const {
  std::call_once(graph_once_, [this] {
    auto g = std::make_unique<BraidGraph>();
    g->words = reduced_words(longest());
    for (int n = 0; n < static_cast<int>(g->words.size()); ++n) g->index.emplace(g->words[n], n);
    g->adjacency.resize(g->words.size());
    g->data.reserve(g->words.size());
    for (int n = 0; n < static_cast<int>(g->words.size()); ++n) {
      const Word& w = g->words[n];
      g->data.push_back(compute_word_data(w));
      for (int k = 0; k + 1 < static_cast<int>(w.size()); ++k) {
        int i = w[k], j = w[k + 1];
        if (i == j) continue;
        int d = braid_order(i, j);
        if (k + d > static_cast<int>(w.size())) continue;
        bool alt = true;
        for (int t = 0; t < d; ++t)
          if (w[k + t] != (t % 2 == 0 ? i : j)) alt = false;
        if (!alt) continue;
        Word v = w;
        for (int t = 0; t < d; ++t) v[k + t] = (t % 2 == 0 ? j : i);
        g->adjacency[n].push_back(BraidEdge{n, g->index.at(v), k, i, j, d});
      }
    }
    graph_ = std::move(g);
  });
  return *graph_;
}

WordData RootSystem::compute_word_data(const Word& word) const {
  if (static_cast<int>(word.size()) != m() || !is_reduced(word) || from_word(word) != longest())
    throw InvalidInput("word " + word_to_string(word) + " is not a reduced word for the longest element");
  WordData d;
  d.word = word;
  d.prefixes.push_back(identity());
  std::set<int> gset;
  for (int i = 0; i < rank(); ++i) gset.insert(i);
  for (int i : word) {
    ElemId prev = d.prefixes.back();
    d.coroots.push_back(act(prev, simple_coroot(i)));
    ElemId cur = right_mult(prev, i);
    d.prefixes.push_back(cur);
    d.gammas.push_back(chamber_index(cur, i));
    gset.insert(chamber_index(cur, i));
  }
  d.chamber_set.assign(gset.begin(), gset.end());
  return d;
}

const WordData& RootSystem::word_data(const Word& word) const {
  const BraidGraph& g = braid_graph();
  int n = g.find(word);
  if (n < 0) {
    compute_word_data(word);  // throws with a precise message
    throw ConsistencyError("reduced word missing from braid graph");
  }
  return g.data[n];
}

}  // namespace mvpoly
