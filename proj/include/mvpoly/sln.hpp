#pragma once

// Type A_{n-1} specifics: subset labels for chamber weights, GL_n coordinate
// translation, Kostant pictures and collapse along k.

#include <map>
#include <utility>

#include "mvpoly/bz.hpp"

namespace mvpoly {

using Root = std::pair<int, int>;  // (a, b) with a < b

struct KostantPicture {
  int n = 0;
  std::map<Root, Int> p;
  bool operator==(const KostantPicture&) const = default;
};

RootSystemPtr special_linear(int n, const Limits& limits = default_limits());

// (1..n-1, 1..n-2, ..., 1)
Word ak_word(int n);

// Subset {w(1),...,w(i)} for the chamber weight w Lambda_i of A_{n-1}.
std::vector<int> weight_to_subset(const Weight& v);
Weight subset_to_weight(int n, const std::vector<int>& subset);
// "13" for {1,3}; multi-digit members are comma separated.
std::string subset_key(const std::vector<int>& subset);
std::vector<int> parse_subset_key(const std::string& key);
// M on a subset, with M(empty) = M(full) = 0.
Int M_subset(const BZDatum& M, const std::vector<int>& subset);

// GL_n vector with zero sum <-> coroot coordinates.
Coweight gl_to_coweight(const IntVec& v);
IntVec coweight_to_gl(const Coweight& c);
Root coroot_to_root(const Coweight& c);
Coweight root_to_coroot(int n, const Root& r);

LusztigDatum picture_to_lusztig(const RootSystem& rs, const KostantPicture& p);
KostantPicture lusztig_to_picture(const RootSystem& rs, const LusztigDatum& d);

// Picture on the roots avoiding k.
KostantPicture collapse(const KostantPicture& p, int k);
// Edge lengths along the AK path of the w(n) = k facet, keyed by their labels.
KostantPicture facet_lusztig(const BZDatum& M, int k);

struct CollapseCheck {
  bool ok = true;
  std::string reason;
};
CollapseCheck verify_collapse(const BZDatum& M, const KostantPicture& p, int k);

}  // namespace mvpoly
