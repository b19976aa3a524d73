#include <doctest.h>

#include <algorithm>
#include <set>

#include "mvpoly/cone.hpp"

using namespace mvpoly;

namespace {

std::set<IntVec> as_set(const std::vector<IntVec>& v) { return {v.begin(), v.end()}; }

// Irreducible lattice points of the cone inside a box, by brute force.
std::set<IntVec> brute_hilbert(const Cone& c, Int B) {
  std::vector<IntVec> pts;
  IntVec x(c.dim, -B);
  while (true) {
    if (!is_zero(x) && c.contains(x)) pts.push_back(x);
    int k = c.dim - 1;
    while (k >= 0 && x[k] == B) x[k--] = -B;
    if (k < 0) break;
    ++x[k];
  }
  std::set<IntVec> out;
  for (auto& p : pts) {
    bool red = false;
    for (auto& q : pts) {
      if (q == p) continue;
      IntVec d(c.dim);
      for (int k = 0; k < c.dim; ++k) d[k] = p[k] - q[k];
      if (!is_zero(d) && c.contains(d)) {
        red = true;
        break;
      }
    }
    if (!red) out.insert(p);
  }
  return out;
}

}  // namespace

TEST_CASE("orthant") {
  Cone c;
  c.dim = 3;
  c.inequalities = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  double_description(c);
  CHECK(c.pointed());
  CHECK(as_set(c.rays) == std::set<IntVec>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(hilbert_basis(c).size() == 3);
}

TEST_CASE("half plane has a line") {
  Cone c;
  c.dim = 2;
  c.inequalities = {{1, 0}};
  double_description(c);
  REQUIRE(c.lines.size() == 1);
  CHECK((c.lines[0] == IntVec{0, 1} || c.lines[0] == IntVec{0, -1}));
  CHECK(c.rays == std::vector<IntVec>{{1, 0}});
  CHECK_FALSE(c.pointed());
}

TEST_CASE("square pyramid") {
  Cone c;
  c.dim = 3;
  c.inequalities = {{-1, 0, 1}, {1, 0, 1}, {0, -1, 1}, {0, 1, 1}};
  double_description(c);
  CHECK(as_set(c.rays) == std::set<IntVec>{{1, 1, 1}, {1, -1, 1}, {-1, 1, 1}, {-1, -1, 1}});
  CHECK(matrix_rank(c.rays) == 3);
  Cone d = cone_from_rays(3, c.rays);
  CHECK(d.contains({0, 0, 1}));
  CHECK_FALSE(d.contains({0, 0, -1}));
  CHECK_FALSE(d.contains({2, 0, 1}));
  double_description(d);
  CHECK(as_set(d.rays) == as_set(c.rays));
  CHECK(as_set(hilbert_basis(d)) == brute_hilbert(d, 3));
}

TEST_CASE("equalities") {
  Cone c;
  c.dim = 3;
  c.equalities = {{1, -1, 0}};
  c.inequalities = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  double_description(c);
  CHECK(as_set(c.rays) == std::set<IntVec>{{1, 1, 0}, {0, 0, 1}});
  CHECK(c.contains({2, 2, 5}));
  CHECK_FALSE(c.contains({2, 1, 5}));
}

TEST_CASE("hilbert bases of planar cones") {
  Cone a = cone_from_rays(2, {{1, 0}, {1, 2}});
  double_description(a);
  CHECK(hilbert_basis(a) == std::vector<IntVec>{{1, 0}, {1, 1}, {1, 2}});
  CHECK(as_set(hilbert_basis(a)) == brute_hilbert(a, 3));
  Cone b = cone_from_rays(2, {{1, 0}, {1, 3}});
  double_description(b);
  CHECK(as_set(hilbert_basis(b)) == std::set<IntVec>{{1, 0}, {1, 1}, {1, 2}, {1, 3}});
  CHECK(as_set(hilbert_basis(b)) == brute_hilbert(b, 4));
  Cone c = cone_from_rays(2, {{2, -1}, {1, 3}});
  double_description(c);
  CHECK(as_set(hilbert_basis(c)) == brute_hilbert(c, 4));
}

TEST_CASE("hilbert basis in three dimensions") {
  for (auto rays : std::vector<std::vector<IntVec>>{{{1, 0, 0}, {0, 1, 0}, {1, 1, 2}},
                                                    {{1, 0, 0}, {0, 1, 0}, {1, 2, 3}},
                                                    {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 2}}}) {
    Cone c = cone_from_rays(3, rays);
    double_description(c);
    CHECK(as_set(hilbert_basis(c)) == brute_hilbert(c, 4));
  }
}

TEST_CASE("integer combinations") {
  std::vector<IntVec> g{{1, 0}, {1, 1}, {1, 2}};
  IntVec coef;
  REQUIRE(integer_combination(g, {3, 3}, &coef));
  IntVec s(2, 0);
  for (std::size_t k = 0; k < g.size(); ++k)
    for (int c = 0; c < 2; ++c) s[c] += coef[k] * g[k][c];
  CHECK(s == IntVec{3, 3});
  for (Int x : coef) CHECK(x >= 0);
  CHECK_FALSE(integer_combination(g, {1, 3}));
  CHECK(integer_combination(g, {0, 0}));
}

TEST_CASE("rank") {
  CHECK(matrix_rank({{1, 2}, {2, 4}}) == 1);
  CHECK(matrix_rank({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 2);
  CHECK(matrix_rank({}) == 0);
}
