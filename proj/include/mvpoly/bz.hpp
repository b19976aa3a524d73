#pragma once

// Hyperplane data on all chamber weights: assembly from Lusztig data,
// tropical Pluecker and edge-inequality checks, vertices and translation.

#include <optional>
#include <string>

#include "mvpoly/lusztig.hpp"

namespace mvpoly {

struct BZDatum {
  RootSystemPtr rs;
  IntVec values;  // indexed by chamber index

  Int operator[](int chamber) const { return values[chamber]; }
  Int at(ElemId w, int i) const { return values[rs->chamber_index(w, i)]; }
  // (mu_1, mu_2): the vertices at e and at w0.
  Coweight mu1() const;
  Coweight mu2() const;
  bool operator==(const BZDatum& o) const { return values == o.values; }
  bool operator<(const BZDatum& o) const { return values < o.values; }
};

BZDatum zero_datum(RootSystemPtr rs);

// sum_k c_k M_{gamma_k} over chamber indices.
struct LinearForm {
  std::vector<std::pair<int, Int>> terms;
  Int eval(const IntVec& M) const;
  IntVec dense(int size) const;
};

enum class RelationKind { Hexagon, Octagon1, Octagon2 };

// One equation  lhs = min(args)  at the 2-face (w, i, j).
struct MinRelation {
  ElemId w = 0;
  int i = 0, j = 0;
  RelationKind kind = RelationKind::Hexagon;
  int eq = 0;  // 0 or 1 within a pair of octagon equations
  LinearForm lhs;
  std::vector<LinearForm> args;
};

// Every relation to check: hexagons once per unordered face, octagons in both
// orientations.
const std::vector<MinRelation>& pluecker_relations(const RootSystemPtr& rs);
// The subset resolved by a choice: hexagons plus the octagon orientation
// with a_ij = -1.
std::vector<MinRelation> canonical_relations(const RootSystemPtr& rs);

struct PluckerViolation {
  ElemId w = 0;
  int i = 0, j = 0;
  RelationKind kind = RelationKind::Hexagon;
  int eq = 0;
  Int lhs = 0, rhs = 0;
  std::string describe(const RootSystem& rs) const;
};

struct EdgeViolation {
  ElemId w = 0;
  int i = 0;
  Int length = 0;
  std::string describe(const RootSystem& rs) const;
};

std::vector<PluckerViolation> check_tropical_pluecker(const BZDatum& M);
std::vector<EdgeViolation> check_edge_inequalities(const BZDatum& M);

Int edge_length(const BZDatum& M, ElemId w, int i);
// sum_i M_{w Lambda_i} w alpha_i^vee, with no checks.
Coweight vertex(const BZDatum& M, ElemId w);
// All vertices indexed by ElemId; throws EdgeInequalityViolation first if needed.
std::vector<Coweight> vertices(const BZDatum& M);

// Assemble the full datum by walking the whole braid graph. Throws
// ConsistencyError if two words disagree on a chamber weight.
BZDatum from_lusztig(const RootSystemPtr& rs, const LusztigDatum& d);
LusztigDatum lusztig_datum(const BZDatum& M, const Word& word);

BZDatum translate(const BZDatum& M, const Coweight& nu);
// Translate so that mu_1 = 0.
BZDatum normalize(const BZDatum& M);

// A datum that passed both checks.
class ValidatedBZ {
 public:
  static std::optional<ValidatedBZ> validate(BZDatum M);
  // Throws InvalidInput with the first violation.
  static ValidatedBZ require(BZDatum M);
  const BZDatum& datum() const { return d_; }
  const BZDatum* operator->() const { return &d_; }

 private:
  explicit ValidatedBZ(BZDatum d) : d_(std::move(d)) {}
  BZDatum d_;
};

bool is_bz_datum(const BZDatum& M);

}  // namespace mvpoly
