#pragma once

// Root data, Weyl group, chamber weights and reduced words for finite types
// A-D. Weights are stored in the fundamental-weight basis and coweights in the
// simple-coroot basis, so the pairing is the plain dot product.
//
// Simple-reflection indices, reduced-word letters and fundamental-weight
// levels are 1-based throughout the public interface.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mvpoly/numeric.hpp"

namespace mvpoly {

enum class Family { A, B, C, D };

char family_letter(Family f);
Family parse_family(const std::string& s);

struct CartanDatum {
  Family family = Family::A;
  int rank = 0;
  // a[i][j] = <alpha_i^vee, alpha_j>, 0-based storage.
  std::vector<std::vector<int>> a;

  int entry(int i, int j) const { return a[i - 1][j - 1]; }
  std::string label() const;
};

// Standard Cartan matrices. B_r and C_r differ only in the orientation of the
// double bond; C2 is [[2,-1],[-2,2]].
CartanDatum build_cartan(Family family, int rank);
CartanDatum build_cartan(const std::string& family, int rank);

struct Weight {
  IntVec coords;
  bool operator==(const Weight&) const = default;
  auto operator<=>(const Weight&) const = default;
};

struct Coweight {
  IntVec coords;
  bool operator==(const Coweight&) const = default;
  auto operator<=>(const Coweight&) const = default;

  Coweight operator+(const Coweight& o) const;
  Coweight operator-(const Coweight& o) const;
  Coweight operator*(Int k) const;
  // Dominance order on coweights: difference has nonnegative coroot coordinates.
  bool geq(const Coweight& o) const;
  bool nonnegative() const;
};

inline Int pair(const Coweight& mu, const Weight& lambda) { return dot(mu.coords, lambda.coords); }

using Word = std::vector<int>;
using ElemId = int;

// Square integer matrix stored row-major.
struct IntMatrix {
  int n = 0;
  IntVec data;

  IntMatrix() = default;
  explicit IntMatrix(int size) : n(size), data(static_cast<std::size_t>(size) * size, 0) {}
  static IntMatrix identity(int size);

  Int& operator()(int r, int c) { return data[static_cast<std::size_t>(r) * n + c]; }
  Int operator()(int r, int c) const { return data[static_cast<std::size_t>(r) * n + c]; }
  IntMatrix operator*(const IntMatrix& o) const;
  IntVec apply(const IntVec& v) const;
  bool operator==(const IntMatrix&) const = default;
};

struct WeylElement {
  IntMatrix action;    // on weights (fundamental-weight basis)
  IntMatrix coaction;  // on coweights (simple-coroot basis)
  Word word;           // lexicographically least reduced word
  int length = 0;
};

struct ChamberWeight {
  Weight weight;
  int level = 0;
};

struct BraidEdge {
  int from = 0;  // node index of the source word
  int to = 0;
  int k = 0;     // number of letters before the moved block
  int i = 0;     // first letter of the block in the source word
  int j = 0;
  int d = 0;     // order of s_i s_j
};

struct WordData {
  Word word;
  std::vector<ElemId> prefixes;    // w_0 = e, w_1, ..., w_m
  std::vector<Coweight> coroots;   // beta_1..beta_m
  std::vector<int> gammas;         // chamber index of w_k . Lambda_{i_k}, k = 1..m
  std::vector<int> chamber_set;    // Gamma^i, sorted chamber indices
};

struct BraidGraph {
  std::vector<Word> words;  // lexicographic order
  std::vector<std::vector<BraidEdge>> adjacency;
  std::map<Word, int> index;
  std::vector<WordData> data;

  int num_edges() const;
  int find(const Word& w) const;  // -1 when absent
};

struct Limits {
  // Largest rank accepted without an explicit override.
  int max_rank = 4;
};

// Rank cap honoured by the CLI and by default constructions; reads MVPOLY_RANK_CAP.
Limits default_limits();

class RootSystem {
 public:
  static std::shared_ptr<const RootSystem> create(const CartanDatum& cartan,
                                                  const Limits& limits = default_limits());

  const CartanDatum& cartan() const { return cartan_; }
  int rank() const { return cartan_.rank; }
  int a(int i, int j) const { return cartan_.entry(i, j); }
  // Order of s_i s_j for i != j (2, 3 or 4).
  int braid_order(int i, int j) const;

  // Weyl group -----------------------------------------------------------
  std::size_t order() const { return elements_.size(); }
  const WeylElement& element(ElemId w) const { return elements_[w]; }
  const std::vector<WeylElement>& elements() const { return elements_; }
  ElemId identity() const { return 0; }
  ElemId longest() const { return static_cast<ElemId>(elements_.size()) - 1; }
  int m() const { return elements_.back().length; }
  ElemId right_mult(ElemId w, int i) const { return right_[w][i - 1]; }
  ElemId left_mult(int i, ElemId w) const { return left_[w][i - 1]; }
  ElemId inverse(ElemId w) const;
  ElemId multiply(ElemId u, ElemId v) const;
  ElemId simple_reflection(int i) const;
  ElemId from_word(const Word& word) const;
  std::optional<ElemId> find(const IntMatrix& action) const;
  bool is_reduced(const Word& word) const;
  bool is_right_descent(ElemId w, int i) const { return elements_[right_mult(w, i)].length < elements_[w].length; }
  // All reduced words of w in lexicographic order.
  std::vector<Word> reduced_words(ElemId w) const;

  Weight act(ElemId w, const Weight& v) const;
  Coweight act(ElemId w, const Coweight& v) const;

  Weight fundamental_weight(int i) const;
  Weight simple_root(int i) const;
  Coweight simple_coroot(int i) const;
  Coweight zero_coweight() const { return Coweight{IntVec(rank(), 0)}; }
  // 2 rho^vee = sum of positive coroots.
  Coweight two_rho_vee() const;

  // mu >=_w nu  iff  <mu - nu, w.Lambda_i> >= 0 for all i.
  bool coweight_ge(ElemId w, const Coweight& mu, const Coweight& nu) const;
  bool is_dominant(const Coweight& lambda) const;
  // <lambda, alpha_j> for every j.
  IntVec coweight_root_pairings(const Coweight& lambda) const;

  // Roots ----------------------------------------------------------------
  const std::vector<Coweight>& positive_coroots() const { return pos_coroots_; }
  // Positive roots in simple-root coordinates.
  const std::vector<IntVec>& positive_roots() const { return pos_roots_; }
  // Kostant partition function over the positive coroots.
  Int kpf(const Coweight& mu) const;

  // Chamber weights -------------------------------------------------------
  int num_chamber_weights() const { return static_cast<int>(chambers_.size()); }
  const ChamberWeight& chamber(int idx) const { return chambers_[idx]; }
  const std::vector<ChamberWeight>& chambers() const { return chambers_; }
  int chamber_index(ElemId w, int i) const { return chamber_idx_[w][i - 1]; }
  std::optional<int> find_chamber(const Weight& v) const;

  // Reduced words of w0 ---------------------------------------------------
  const BraidGraph& braid_graph() const;
  const std::vector<Word>& longest_words() const { return braid_graph().words; }
  // Lexicographically least reduced word of w0.
  const Word& reference_word() const { return elements_.back().word; }
  // Validated word data; throws InvalidInput if the word is not a reduced word for w0.
  const WordData& word_data(const Word& word) const;
  WordData compute_word_data(const Word& word) const;

 private:
  explicit RootSystem(const CartanDatum& cartan);
  void build_group();
  void build_roots();

  CartanDatum cartan_;
  std::vector<WeylElement> elements_;
  std::vector<std::vector<ElemId>> right_, left_;
  std::map<IntVec, ElemId> by_action_;
  std::vector<ChamberWeight> chambers_;
  std::vector<std::vector<int>> chamber_idx_;
  std::map<IntVec, int> chamber_by_coords_;
  std::vector<Coweight> pos_coroots_;
  std::vector<IntVec> pos_roots_;

  mutable std::once_flag graph_once_;
  mutable std::unique_ptr<BraidGraph> graph_;
  mutable std::mutex kpf_mutex_;
  mutable std::map<std::pair<int, IntVec>, Int> kpf_memo_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

// Convenience: build_cartan + RootSystem::create.
RootSystemPtr make_root_system(const std::string& family, int rank, const Limits& limits = default_limits());

std::string word_to_string(const Word& w);

}  // namespace mvpoly
