#pragma once

// Lusztig data (edge lengths along the path of a reduced word), the triangular
// linear system relating them to hyperplane values on the word's chamber
// weights, and the piecewise-linear braid-move transition maps.

#include <map>

#include "mvpoly/root_system.hpp"

namespace mvpoly {

struct LusztigDatum {
  Word word;
  IntVec n;
  bool operator==(const LusztigDatum&) const = default;
};

// Values on the chamber weights of one word, keyed by chamber index.
using PartialM = std::map<int, Int>;

// Default cap on Lusztig entries accepted from outside.
constexpr Int kDefaultEntryCap = 1000000;

// Throws InvalidInput unless the word is reduced for w0, n has length m and
// every entry lies in [0, cap].
void check_lusztig(const RootSystem& rs, const LusztigDatum& d, Int cap = kDefaultEntryCap);

Coweight lusztig_coweight(const RootSystem& rs, const LusztigDatum& d);

PartialM n_to_partial_M(const RootSystem& rs, const LusztigDatum& d);

// Back-substitution. Throws InvalidInput if some M_{Lambda_i} != 0 and
// EdgeInequalityViolation if a resulting entry is negative.
LusztigDatum partial_M_to_n(const RootSystem& rs, const Word& word, const PartialM& partial);

// One braid move applied to n (indexed by the edge's source word).
IntVec braid_transition(const RootSystem& rs, const BraidEdge& edge, const IntVec& n);

// Shortest braid path from one word to another, as edges.
std::vector<BraidEdge> braid_path(const RootSystem& rs, const Word& from, const Word& to);

IntVec transition_map(const RootSystem& rs, const Word& from, const Word& to, const IntVec& n);

// Apply an explicit path of edges.
IntVec apply_path(const RootSystem& rs, const std::vector<BraidEdge>& path, const IntVec& n);

}  // namespace mvpoly
