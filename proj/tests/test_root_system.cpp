#include <doctest.h>

#include <cstdlib>
#include <set>

#include "oracles.hpp"

using namespace mvpoly;

TEST_CASE("cartan matrices") {
  auto a2 = build_cartan("A", 2);
  CHECK(a2.a == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
  auto c2 = build_cartan("C", 2);
  CHECK(c2.entry(1, 2) == -1);
  CHECK(c2.entry(2, 1) == -2);
  auto b2 = build_cartan("B", 2);
  CHECK(b2.entry(1, 2) == -2);
  CHECK(b2.entry(2, 1) == -1);
  auto d4 = build_cartan("D", 4);
  CHECK(d4.entry(2, 3) == -1);
  CHECK(d4.entry(2, 4) == -1);
  CHECK(d4.entry(3, 4) == 0);
  CHECK_THROWS_AS(build_cartan("G", 2), InvalidInput);
  CHECK_THROWS_AS(build_cartan("E", 6), InvalidInput);
  CHECK_THROWS_AS(build_cartan("A", 0), InvalidInput);
  CHECK_THROWS_AS(build_cartan("D", 2), InvalidInput);
  CHECK_THROWS_AS(build_cartan("Q", 2), InvalidInput);
}

TEST_CASE("simple reflections on weights") {
  auto rs = make_root_system("A", 2);
  ElemId s1 = rs->simple_reflection(1);
  CHECK(rs->act(s1, rs->fundamental_weight(1)) == Weight{{-1, 1}});
  CHECK(rs->act(s1, rs->fundamental_weight(2)) == Weight{{0, 1}});
  // Lambda_1 - alpha_1 with alpha_1 = 2 Lambda_1 - Lambda_2
  CHECK(rs->simple_root(1) == Weight{{2, -1}});

  for (const char* fam : {"A", "B", "C", "D"}) {
    int r = std::string(fam) == "D" ? 4 : 3;
    auto R = make_root_system(fam, r);
    for (int i = 1; i <= r; ++i) {
      const IntMatrix& S = R->element(R->simple_reflection(i)).action;
      CHECK(S * S == IntMatrix::identity(r));
      for (int j = 1; j <= r; ++j)
        if (j != i) CHECK(R->act(R->simple_reflection(i), R->fundamental_weight(j)) == R->fundamental_weight(j));
      // braid relation (s_i s_j)^d = 1 with the right d
      for (int j = 1; j <= r; ++j) {
        if (j == i) continue;
        const IntMatrix& T = R->element(R->simple_reflection(j)).action;
        IntMatrix P = S * T, Q = IntMatrix::identity(r);
        int d = 0;
        do {
          Q = Q * P;
          ++d;
        } while (!(Q == IntMatrix::identity(r)));
        CHECK(d == R->braid_order(i, j));
        int prod = R->a(i, j) * R->a(j, i);
        CHECK(d == (prod == 0 ? 2 : prod == 1 ? 3 : 4));
      }
    }
  }
}

TEST_CASE("weyl group orders") {
  struct Case {
    const char* f;
    int r;
    std::size_t order;
    int m;
  };
  for (auto c : {Case{"A", 1, 2, 1}, Case{"A", 2, 6, 3}, Case{"B", 2, 8, 4}, Case{"C", 2, 8, 4}, Case{"A", 3, 24, 6},
                 Case{"B", 3, 48, 9}, Case{"C", 3, 48, 9}, Case{"D", 4, 192, 12}, Case{"A", 4, 120, 10},
                 Case{"B", 4, 384, 16}}) {
    auto rs = make_root_system(c.f, c.r);
    CAPTURE(c.f);
    CAPTURE(c.r);
    CHECK(rs->order() == c.order);
    CHECK(rs->m() == c.m);
    CHECK(static_cast<int>(rs->positive_coroots().size()) == c.m);
    // w0 is an involution and maps the dominant chamber to its negative
    ElemId w0 = rs->longest();
    CHECK(rs->multiply(w0, w0) == rs->identity());
    Coweight rho = rs->two_rho_vee();
    CHECK(rs->act(w0, rho) == rho * -1);
  }
}

TEST_CASE("group operations agree with matrices") {
  auto rs = make_root_system("B", 3);
  for (ElemId u = 0; u < static_cast<ElemId>(rs->order()); u += 5)
    for (ElemId v = 0; v < static_cast<ElemId>(rs->order()); v += 7) {
      ElemId uv = rs->multiply(u, v);
      CHECK(rs->element(uv).action == rs->element(u).action * rs->element(v).action);
    }
  for (ElemId w = 0; w < static_cast<ElemId>(rs->order()); ++w) {
    CHECK(rs->multiply(w, rs->inverse(w)) == rs->identity());
    CHECK(rs->from_word(rs->element(w).word) == w);
    CHECK(static_cast<int>(rs->element(w).word.size()) == rs->element(w).length);
    CHECK(oracle::word_matrix(*rs, rs->element(w).word) == rs->element(w).action);
  }
}

TEST_CASE("reduced words") {
  auto a2 = make_root_system("A", 2);
  CHECK(a2->reduced_words(a2->longest()) == std::vector<Word>{{1, 2, 1}, {2, 1, 2}});
  CHECK(a2->reduced_words(a2->identity()) == std::vector<Word>{Word{}});
  auto a3 = make_root_system("A", 3);
  CHECK(a3->reduced_words(a3->longest()).size() == 16);
  CHECK(a3->longest_words().size() == 16);

  // brute force over all words of the right length
  for (auto [f, r] : {std::pair{"A", 3}, std::pair{"B", 2}, std::pair{"C", 3}}) {
    auto rs = make_root_system(f, r);
    for (ElemId w = 0; w < static_cast<ElemId>(rs->order()); w += 3) {
      auto got = rs->reduced_words(w);
      auto want = oracle::reduced_words(*rs, w);
      CHECK(got == want);
    }
  }
  auto b3 = make_root_system("B", 3);
  CHECK(b3->longest_words().size() == 42);
  CHECK(a3->is_reduced(Word{1, 2, 1}));
  CHECK_FALSE(a3->is_reduced(Word{1, 1}));
  CHECK(a3->reference_word() == Word{1, 2, 1, 3, 2, 1});
}

TEST_CASE("word data for (1,2,1)") {
  auto rs = make_root_system("A", 2);
  const WordData& wd = rs->word_data({1, 2, 1});
  CHECK(wd.coroots[0] == Coweight{{1, 0}});
  CHECK(wd.coroots[1] == Coweight{{1, 1}});
  CHECK(wd.coroots[2] == Coweight{{0, 1}});
  // gamma_1 = s1 Lambda_1 = {2}, gamma_2 = s1 s2 Lambda_2 = {2,3}, gamma_3 = w0 Lambda_1 = {3}
  CHECK(rs->chamber(wd.gammas[0]).weight == Weight{{-1, 1}});
  CHECK(weight_to_subset(rs->chamber(wd.gammas[0]).weight) == std::vector<int>{2});
  CHECK(weight_to_subset(rs->chamber(wd.gammas[1]).weight) == std::vector<int>{2, 3});
  CHECK(weight_to_subset(rs->chamber(wd.gammas[2]).weight) == std::vector<int>{3});
  CHECK(rs->num_chamber_weights() == 6);
  CHECK(wd.chamber_set.size() == 5);
  std::set<int> all;
  for (int c = 0; c < 6; ++c) all.insert(c);
  for (int c : wd.chamber_set) all.erase(c);
  REQUIRE(all.size() == 1);
  CHECK(weight_to_subset(rs->chamber(*all.begin()).weight) == std::vector<int>{1, 3});
  CHECK_THROWS_AS(rs->word_data({1, 2}), InvalidInput);
  CHECK_THROWS_AS(rs->word_data({1, 1, 2}), InvalidInput);
}

TEST_CASE("chamber weights") {
  auto rs = make_root_system("A", 3);
  CHECK(rs->num_chamber_weights() == 14);
  for (int i = 1; i <= 3; ++i) CHECK(rs->chamber(i - 1).weight == rs->fundamental_weight(i));
  for (ElemId w = 0; w < static_cast<ElemId>(rs->order()); ++w)
    for (int i = 1; i <= 3; ++i) {
      const ChamberWeight& cw = rs->chamber(rs->chamber_index(w, i));
      CHECK(cw.level == i);
      CHECK(cw.weight == rs->act(w, rs->fundamental_weight(i)));
    }
  auto b2 = make_root_system("B", 2);
  CHECK(b2->num_chamber_weights() == 8);
  auto d4 = make_root_system("D", 4);
  CHECK(d4->num_chamber_weights() == 8 + 8 + 8 + 24);
}

TEST_CASE("braid graph") {
  auto a2 = make_root_system("A", 2);
  CHECK(a2->braid_graph().words.size() == 2);
  CHECK(a2->braid_graph().num_edges() == 1);
  CHECK(a2->braid_graph().adjacency[0][0].d == 3);
  auto b2 = make_root_system("B", 2);
  CHECK(b2->braid_graph().words.size() == 2);
  CHECK(b2->braid_graph().num_edges() == 1);
  CHECK(b2->braid_graph().adjacency[0][0].d == 4);
  auto a3 = make_root_system("A", 3);
  const BraidGraph& g = a3->braid_graph();
  CHECK(g.words.size() == 16);
  // connected
  std::vector<char> seen(16, 0);
  std::vector<int> q{0};
  seen[0] = 1;
  for (std::size_t h = 0; h < q.size(); ++h)
    for (auto& e : g.adjacency[q[h]])
      if (!seen[e.to]) seen[e.to] = 1, q.push_back(e.to);
  CHECK(q.size() == 16);
  // every edge is a genuine braid move and has a reverse
  for (int u = 0; u < 16; ++u)
    for (auto& e : g.adjacency[u]) {
      Word w = g.words[u];
      for (int t = 0; t < e.d; ++t) CHECK(w[e.k + t] == (t % 2 == 0 ? e.i : e.j));
      for (int t = 0; t < e.d; ++t) w[e.k + t] = t % 2 == 0 ? e.j : e.i;
      CHECK(g.words[e.to] == w);
      CHECK(oracle::find_edge(*a3, e.to, u) != nullptr);
    }
}

TEST_CASE("kostant partition function") {
  auto a2 = make_root_system("A", 2);
  CHECK(a2->kpf(Coweight{{1, 1}}) == 2);
  CHECK(a2->kpf(Coweight{{2, 1}}) == 2);
  CHECK(a2->kpf(Coweight{{0, 0}}) == 1);
  CHECK(a2->kpf(Coweight{{-1, 0}}) == 0);
  for (auto [f, r] : {std::pair{"A", 2}, std::pair{"B", 2}, std::pair{"C", 2}, std::pair{"A", 3}, std::pair{"B", 3}}) {
    auto rs = make_root_system(f, r);
    for (const Coweight& mu : nonnegative_up_to(*rs, 6)) CHECK(rs->kpf(mu) == oracle::kpf(*rs, mu));
  }
}

TEST_CASE("coweight orders") {
  auto rs = make_root_system("A", 2);
  Coweight a{{1, 1}}, z{{0, 0}};
  for (ElemId w = 0; w < 6; ++w) CHECK(rs->coweight_ge(w, a, a));
  CHECK_FALSE(rs->coweight_ge(rs->longest(), a, z));
  CHECK(rs->coweight_ge(rs->longest(), z, a));
  CHECK(rs->coweight_ge(rs->identity(), a, z));
  CHECK(a.geq(z));
  CHECK_FALSE(z.geq(a));
  CHECK(rs->is_dominant(Coweight{{1, 1}}));
  CHECK_FALSE(rs->is_dominant(Coweight{{1, 0}}));
  CHECK(rs->is_dominant(Coweight{{2, 1}}));
}

TEST_CASE("rank cap") {
  CHECK_THROWS_AS(make_root_system("A", 5), LimitExceeded);
  Limits big{6};
  CHECK(make_root_system("A", 5, big)->order() == 720);
  ::setenv("MVPOLY_RANK_CAP", "5", 1);
  CHECK(default_limits().max_rank == 5);
  ::unsetenv("MVPOLY_RANK_CAP");
  CHECK(default_limits().max_rank == 4);
}

TEST_CASE("word data invariants") {
  for (auto [f, r] : {std::pair{"A", 3}, std::pair{"B", 3}, std::pair{"D", 4}}) {
    auto rs = make_root_system(f, r);
    std::multiset<Coweight> pos(rs->positive_coroots().begin(), rs->positive_coroots().end());
    const auto& words = rs->longest_words();
    for (std::size_t q = 0; q < words.size(); q += 11) {
      const WordData& wd = rs->word_data(words[q]);
      CHECK(static_cast<int>(wd.chamber_set.size()) == rs->m() + r);
      std::multiset<Coweight> got(wd.coroots.begin(), wd.coroots.end());
      CHECK(got == pos);
    }
  }
}
