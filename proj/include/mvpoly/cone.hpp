#pragma once

// Exact polyhedral cone utilities: double description, rank, H-representation
// from generators, and Hilbert bases of pointed cones.

#include "mvpoly/numeric.hpp"

namespace mvpoly {

// {x : E x = 0, A x >= 0} = span(lines) + cone(rays).
struct Cone {
  int dim = 0;
  std::vector<IntVec> equalities;
  std::vector<IntVec> inequalities;
  std::vector<IntVec> lines;
  std::vector<IntVec> rays;

  bool contains(const IntVec& x) const;
  bool pointed() const { return lines.empty(); }
};

int matrix_rank(std::vector<IntVec> rows);

// Fills lines and rays of the cone from its constraints. Rays are primitive,
// extreme, and sorted.
void double_description(Cone& cone);

// Cone generated by `rays` (no lines) with its constraints computed by double
// description on the dual.
Cone cone_from_rays(int dim, const std::vector<IntVec>& rays);

// Minimal generating set of the lattice points of a pointed cone whose rays
// and constraints are known. Sorted by total degree, then lexicographically.
std::vector<IntVec> hilbert_basis(const Cone& cone);

// Is x a nonnegative integer combination of gens? Returns the coefficients.
bool integer_combination(const std::vector<IntVec>& gens, const IntVec& x, IntVec* coeffs = nullptr);

}  // namespace mvpoly
