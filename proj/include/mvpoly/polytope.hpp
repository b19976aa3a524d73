#pragma once

// Support functions on the Weyl fan, concavity, Minkowski sums, containment
// in Weyl polytopes and the shape of rank-2 faces.

#include <optional>
#include <random>

#include "mvpoly/bz.hpp"

namespace mvpoly {

// Some w with <w alpha_i^vee, alpha> >= 0 for all i (the first in group order).
ElemId locate_cone(const RootSystem& rs, const Weight& alpha);
// psi_M(alpha) evaluated in the cone of w (alpha must lie in it).
Int support_eval_in(const BZDatum& M, ElemId w, const Weight& alpha);
Int support_eval(const BZDatum& M, const Weight& alpha);
// Values from every cone containing alpha; all equal for concave M.
std::vector<Int> support_eval_all(const BZDatum& M, const Weight& alpha);

bool is_concave(const BZDatum& M);

struct ConcavityWitness {
  Weight alpha, beta;
  Int lhs = 0;  // psi(alpha + beta)
  Int rhs = 0;  // psi(alpha) + psi(beta)
};

// Definitional test: search pairs for psi(a+b) < psi(a)+psi(b). Pairs are all
// chamber weights, a small box, and `samples` random pairs from [-4,4]^r.
std::optional<ConcavityWitness> find_concavity_witness(const BZDatum& M, std::mt19937_64& rng, int samples = 64);

BZDatum minkowski_sum(const BZDatum& M, const BZDatum& N);

// M_gamma = (w0 lambda)_i for gamma of level i.
BZDatum weyl_polytope(const RootSystemPtr& rs, const Coweight& lambda);
bool contains_in_weyl(const BZDatum& M, const Coweight& lambda);

// Inverse of vertices(): M_{w Lambda_i} = <mu_w, w Lambda_i>. Throws
// InvalidInput if two vertices disagree on a chamber weight.
BZDatum hyperplanes_from_vertices(const RootSystemPtr& rs, const std::vector<Coweight>& mu);

struct FaceClass {
  std::string shape;  // rectangle, hexagon or octagon
  // 1-based argmin positions per relation; for octagons, the a_ij = -1 pair.
  std::vector<std::vector<int>> argmins;
  // "1", "2", "1/3" ... when every min is strict, otherwise prefixed "tie:".
  std::string label;
  bool strict() const { return label.rfind("tie", 0) != 0 && shape != "rectangle"; }
};

// Requires ws_i > w, ws_j > w, i != j.
FaceClass classify_2face(const BZDatum& M, ElemId w, int i, int j);

}  // namespace mvpoly
