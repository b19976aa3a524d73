#pragma once

// BZ choices, their cones, Hilbert bases, and the catalog of prime MV
// polytopes with cluster membership.

#include <string>

#include "mvpoly/cone.hpp"
#include "mvpoly/rep.hpp"

namespace mvpoly {

// One argument index (0-based) per canonical relation.
using BZChoice = std::vector<int>;

struct ChoiceCone {
  BZChoice choice;
  // Constraints and generators over M restricted to the non-fundamental chamber weights.
  Cone mspace;
  // The rays read in the Lusztig chart of the reference word.
  std::vector<IntVec> chart_rays;
  int dim = 0;
  bool maximal = false;
  // Only for maximal cones: the chart cone and its Hilbert basis.
  Cone chart;
  std::vector<IntVec> hilbert;
};

struct Prime {
  std::string label;
  BZDatum datum;
  IntVec lusztig;  // along the reference word
};

struct PrimeCatalog {
  RootSystemPtr rs;
  Word reference;
  std::vector<MinRelation> relations;
  std::vector<ChoiceCone> cones;
  std::vector<int> maximal;                // indices into cones
  std::vector<Prime> primes;
  std::vector<std::vector<int>> clusters;  // per maximal cone, indices into primes
  std::vector<std::string> warnings;
};

struct CatalogOptions {
  Exec exec;
  std::size_t max_choices = 1u << 16;
};

std::vector<BZChoice> enumerate_choices(const RootSystemPtr& rs, std::size_t cap = 1u << 16);

// Linear map from M (non-fundamental coordinates) to edge lengths along the word.
std::vector<IntVec> chart_matrix(const RootSystem& rs, const Word& word);

ChoiceCone cone_of_choice(const RootSystemPtr& rs, const std::vector<MinRelation>& relations, const BZChoice& choice,
                          const Word& reference);

// Full M-vector (all chamber weights) from a non-fundamental coordinate vector.
BZDatum expand(const RootSystemPtr& rs, const IntVec& x);

PrimeCatalog prime_catalog(const RootSystemPtr& rs, const CatalogOptions& opts = {});

struct Decomposition {
  int cluster = -1;                       // index into catalog.clusters
  std::vector<std::pair<int, Int>> parts;  // (prime index, multiplicity)
};

// Throws ConsistencyError if no cluster decomposes M (input must be a
// normalized BZ datum).
Decomposition decompose(const PrimeCatalog& cat, const BZDatum& M);

}  // namespace mvpoly
