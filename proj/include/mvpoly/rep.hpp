#pragma once

// Enumeration of MV polytopes of a given coweight and the multiplicity
// counts built on it, with the classical Kostant / Steinberg formulas as
// independent oracles.

#include "mvpoly/bz.hpp"

namespace mvpoly {

// threads <= 1 runs the serial reference path.
struct Exec {
  int threads = 1;
};

// All n >= 0 with sum n_k beta_k = mu, lexicographically ascending.
std::vector<LusztigDatum> enumerate_lusztig(const RootSystem& rs, const Word& word, const Coweight& mu);

// from_lusztig over enumerate_lusztig for one word (the reference word by
// default), sorted by M-vector. Every datum is checked; a failure is a
// ConsistencyError.
std::vector<BZDatum> enumerate_mv(const RootSystemPtr& rs, const Coweight& mu, const Exec& exec = {},
                                  const Word* word = nullptr);

Int weight_mult_mv(const RootSystemPtr& rs, const Coweight& lambda, const Coweight& mu, const Exec& exec = {});
Int weight_mult_canonical(const RootSystemPtr& rs, const Coweight& lambda, const Coweight& mu, const Exec& exec = {});
Int tensor_mult(const RootSystemPtr& rs, const Coweight& lambda, const Coweight& mu, const Coweight& nu,
                const Exec& exec = {});
// Same count using only the chamber weights w0 s_i Lambda_i in (i) and s_i Lambda_i in (ii).
Int tensor_mult_canonical(const RootSystemPtr& rs, const Coweight& lambda, const Coweight& mu, const Coweight& nu,
                          const Exec& exec = {});

Int kostant_mult_oracle(const RootSystem& rs, const Coweight& lambda, const Coweight& mu);
Int steinberg_oracle(const RootSystem& rs, const Coweight& lambda, const Coweight& mu, const Coweight& nu);
Int weyl_dimension(const RootSystem& rs, const Coweight& lambda);

// Every mu with w0 lambda <= mu <= lambda coordinatewise; a superset of the weights.
std::vector<Coweight> weight_candidates(const RootSystem& rs, const Coweight& lambda);
// Dominant coweights with every coroot coordinate in [0, bound].
std::vector<Coweight> dominant_in_box(const RootSystem& rs, Int bound);
// Coweights with nonnegative coordinates summing to at most `total`.
std::vector<Coweight> nonnegative_up_to(const RootSystem& rs, Int total);

}  // namespace mvpoly
