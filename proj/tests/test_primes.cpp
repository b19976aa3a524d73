#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "mvpoly/primes.hpp"

using namespace mvpoly;

namespace {

const PrimeCatalog& catalog(const std::string& f, int r) {
  static std::map<std::string, PrimeCatalog> cache;
  std::string key = f + std::to_string(r);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, prime_catalog(make_root_system(f, r))).first;
  return it->second;
}

std::vector<int> generator_counts(const PrimeCatalog& cat) {
  std::vector<int> c;
  for (int t : cat.maximal) c.push_back(static_cast<int>(cat.cones[t].hilbert.size()));
  std::sort(c.begin(), c.end());
  return c;
}

BZDatum combination(const PrimeCatalog& cat, const std::vector<int>& cluster, const IntVec& k) {
  BZDatum s = zero_datum(cat.rs);
  for (std::size_t g = 0; g < cluster.size(); ++g)
    for (std::size_t q = 0; q < s.values.size(); ++q) s.values[q] += k[g] * cat.primes[cluster[g]].datum.values[q];
  return s;
}

}  // namespace

TEST_CASE("choice counts") {
  CHECK(enumerate_choices(make_root_system("A", 2)).size() == 2);
  CHECK(enumerate_choices(make_root_system("B", 2)).size() == 9);
  CHECK(enumerate_choices(make_root_system("C", 2)).size() == 9);
  CHECK(enumerate_choices(make_root_system("A", 3)).size() == 256);
  CHECK_THROWS_AS(enumerate_choices(make_root_system("A", 3), 100), LimitExceeded);
}

TEST_CASE("A2 catalog") {
  const PrimeCatalog& cat = catalog("A", 2);
  CHECK(cat.cones.size() == 2);
  CHECK(cat.maximal.size() == 2);
  for (int t : cat.maximal) {
    CHECK(cat.cones[t].dim == 3);
    CHECK(cat.cones[t].chart_rays.size() == 3);
    CHECK(cat.cones[t].hilbert.size() == 3);
  }
  CHECK(cat.primes.size() == 4);
  CHECK(cat.clusters.size() == 2);
  CHECK(cat.warnings.empty());
}

TEST_CASE("B2 catalog") {
  const PrimeCatalog& cat = catalog("B", 2);
  CHECK(cat.cones.size() == 9);
  CHECK(cat.maximal.size() == 4);
  CHECK(generator_counts(cat) == std::vector<int>{4, 4, 5, 5});
  CHECK(cat.primes.size() == 8);
  std::set<int> common;
  for (std::size_t p = 0; p < cat.primes.size(); ++p) common.insert(static_cast<int>(p));
  for (auto& cl : cat.clusters) {
    std::set<int> s(cl.begin(), cl.end());
    std::set<int> keep;
    std::set_intersection(common.begin(), common.end(), s.begin(), s.end(), std::inserter(keep, keep.begin()));
    common = keep;
  }
  CHECK(common.size() == 2);
  // the common ones are Weyl polytopes: the vertices form one W-orbit about
  // the centre (w0 = -1 here, so the centre is the midpoint of mu_e, mu_w0)
  auto rs = cat.rs;
  for (int p : common) {
    auto mu = vertices(cat.primes[p].datum);
    Coweight x = mu[rs->identity()] - mu[rs->longest()];
    Coweight twice_c = mu[rs->identity()] + mu[rs->longest()];
    for (ElemId w = 0; w < 8; ++w) CHECK(mu[w] * 2 - twice_c == rs->act(w, x));
  }
  // simplicial cones are exactly those with 4 generators
  for (int t : cat.maximal)
    CHECK((cat.cones[t].hilbert.size() == 4) == (cat.cones[t].chart_rays.size() == 4));
}

TEST_CASE("A3 catalog") {
  const PrimeCatalog& cat = catalog("A", 3);
  CHECK(cat.cones.size() == 256);
  CHECK(cat.maximal.size() == 13);
  auto c = generator_counts(cat);
  CHECK(std::count(c.begin(), c.end(), 6) == 12);
  CHECK(std::count(c.begin(), c.end(), 7) == 1);
  CHECK(cat.primes.size() == 12);
  CHECK(cat.warnings.empty());
  CatalogOptions par;
  par.exec.threads = 3;
  PrimeCatalog q = prime_catalog(cat.rs, par);
  REQUIRE(q.primes.size() == cat.primes.size());
  for (std::size_t p = 0; p < q.primes.size(); ++p) CHECK(q.primes[p].datum == cat.primes[p].datum);
  CHECK(q.clusters == cat.clusters);
}

TEST_CASE("primes are BZ data and generators are minimal") {
  for (auto [f, r] : {std::pair{"A", 2}, std::pair{"B", 2}, std::pair{"A", 3}}) {
    const PrimeCatalog& cat = catalog(f, r);
    for (auto& p : cat.primes) {
      CHECK(is_bz_datum(p.datum));
      CHECK(p.datum.mu1() == cat.rs->zero_coweight());
      CHECK(from_lusztig(cat.rs, {cat.reference, p.lusztig}) == p.datum);
      for (Int v : p.datum.values) CHECK(v <= 0);
    }
    for (int t : cat.maximal) {
      const auto& H = cat.cones[t].hilbert;
      for (std::size_t g = 0; g < H.size(); ++g) {
        std::vector<IntVec> others;
        for (std::size_t h = 0; h < H.size(); ++h)
          if (h != g) others.push_back(H[h]);
        CHECK_FALSE(integer_combination(others, H[g]));
        CHECK(cat.cones[t].chart.contains(H[g]));
      }
      for (auto& ray : cat.cones[t].mspace.rays) CHECK(is_bz_datum(expand(cat.rs, ray)));
    }
  }
}

TEST_CASE("sum closure") {
  for (auto [f, r] : {std::pair{"A", 2}, std::pair{"B", 2}, std::pair{"A", 3}}) {
    const PrimeCatalog& cat = catalog(f, r);
    std::mt19937_64 rng(99);
    for (int t = 0; t < 60; ++t) {
      const auto& cl = cat.clusters[rng() % cat.clusters.size()];
      IntVec k = oracle::random_n(rng, static_cast<int>(cl.size()), 3);
      BZDatum s = combination(cat, cl, k);
      CHECK(is_bz_datum(s));
    }
  }
}

TEST_CASE("decompose") {
  const PrimeCatalog& cat = catalog("A", 2);
  auto rs = cat.rs;
  for (std::size_t p = 0; p < cat.primes.size(); ++p) {
    Decomposition d = decompose(cat, cat.primes[p].datum);
    REQUIRE(d.parts.size() == 1);
    CHECK(d.parts[0] == std::pair<int, Int>{static_cast<int>(p), 1});
  }
  CHECK(decompose(cat, zero_datum(rs)).parts.empty());
  for (const Coweight& mu : nonnegative_up_to(*rs, 4))
    for (const BZDatum& M : enumerate_mv(rs, mu)) {
      Decomposition d = decompose(cat, M);
      REQUIRE(d.cluster >= 0);
      IntVec k(cat.clusters[d.cluster].size(), 0);
      for (auto& [p, mult] : d.parts) {
        auto pos = std::find(cat.clusters[d.cluster].begin(), cat.clusters[d.cluster].end(), p);
        REQUIRE(pos != cat.clusters[d.cluster].end());
        k[pos - cat.clusters[d.cluster].begin()] = mult;
      }
      CHECK(combination(cat, cat.clusters[d.cluster], k) == M);
    }
  const PrimeCatalog& b2 = catalog("B", 2);
  for (const Coweight& mu : nonnegative_up_to(*b2.rs, 4))
    for (const BZDatum& M : enumerate_mv(b2.rs, mu)) CHECK_NOTHROW(decompose(b2, M));
}

TEST_CASE("every lattice point of every cone is a BZ datum") {
  for (auto [f, r] : {std::pair{"A", 2}, std::pair{"B", 2}}) {
    const PrimeCatalog& cat = catalog(f, r);
    for (const ChoiceCone& cc : cat.cones) {
      const int d = cc.mspace.dim;
      IntVec x(d, -3);
      int inside = 0;
      while (true) {
        if (cc.mspace.contains(x)) {
          ++inside;
          CHECK(is_bz_datum(expand(cat.rs, x)));
        }
        int k = d - 1;
        while (k >= 0 && x[k] == 0) x[k--] = -3;
        if (k < 0) break;
        ++x[k];
      }
      CHECK(inside >= 1);
    }
  }
}
