#pragma once

// SVG outlines of rank-2 polytopes, or of one 2-face of a higher-rank one.

#include <string>

#include "mvpoly/bz.hpp"

namespace mvpoly {

struct SvgOptions {
  double unit = 40.0;  // pixels per lattice step
  bool labels = true;
};

// Whole polytope; rank must be 2.
std::string draw_polytope(const BZDatum& M, const SvgOptions& opts = {});
// The 2-face w<s_i, s_j> of a polytope of any rank.
std::string draw_face(const BZDatum& M, ElemId w, int i, int j, const SvgOptions& opts = {});

}  // namespace mvpoly
