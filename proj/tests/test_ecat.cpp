#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nck/ecat.hpp"

using namespace nck;

namespace {

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

TEST_CASE("cube power codec") {
  auto cp = cube_power({1, 3}, 2);
  for (int n = 0; n <= 2; ++n)
    for (Idx s = 0; s < cp.p.prod->counts[n]; ++s) {
      auto z = cp.zeros(n, s);
      for (int zz : z) CHECK((0 <= zz && zz <= n + 1));
      CHECK(cp.from_zeros(n, z) == s);
    }
  CHECK(cp.p.prod->counts[0] == 4);
  CHECK(cp.p.prod->counts[1] == 9);
}

TEST_CASE("the directed cube-enriched interval category") {
  for (int m = 1; m <= 3; ++m) {
    auto ch = ch_standard(m, 3);  // validates internally
    for (int i = 0; i <= m; ++i)
      for (int j = i; j <= m; ++j)
        CHECK(ch.C.hom[i][j]->counts[0] == ipow(2, j - i > 0 ? j - i - 1 : 0));
    // composing the two generators of [2] hits the constant-1 vertex
    if (m == 2) {
      auto& c = ch.C.comp_at(0, 1, 2);
      Idx v = c.map.at[0][c.prod.encode(0, {0, 0})];
      CHECK(ch.homp[0][2].zeros(0, v) == std::vector<int>{0});
    }
  }
}

TEST_CASE("coface hom actions are simplicial and compose correctly") {
  auto c2 = ch_standard(2, 3);
  auto c3 = ch_standard(3, 3);
  for (int ell = 0; ell <= 3; ++ell)
    for (int i = 0; i <= 2; ++i)
      for (int j = i; j <= 2; ++j) {
        auto f = ch_coface_hom(c2, c3, ell, i, j);
        CHECK(f.valid());
      }
  // inserting the middle vertex of 0 < 2 yields the constant-0 coordinate
  auto f = ch_coface_hom(c2, c3, 1, 0, 2);
  // source hom(0,2) of [2] has one coordinate; target hom(0,3) of [3] has two
  auto z = c3.homp[0][3].zeros(0, f.at[0][c2.homp[0][2].from_zeros(0, {0})]);
  CHECK(z == std::vector<int>{1, 0});
}

TEST_CASE("hom of a standard simplex is a cube") {
  for (int m = 1; m <= 3; ++m) {
    auto H = ch_hom(standard_simplex(m, m), 0, static_cast<Idx>(m), 4);
    std::vector<int> cs;
    for (int w = 1; w < m; ++w) cs.push_back(w);
    auto cube = cube_power(cs, 4);
    CHECK(H.colim.object->counts == cube.p.prod->counts);
    CHECK(H.colim.object->nd_counts() == cube.p.prod->nd_counts());
  }
}

TEST_CASE("hom ignores vertices outside the interval") {
  // hom(0,1) in Delta[2] is a point: necklaces cannot pass through 2
  auto H = ch_hom(standard_simplex(2, 2), 0, 1, 2);
  CHECK(H.necs.objects.size() == 1);
  CHECK(H.colim.object->counts[0] == 1);
}

TEST_CASE("concatenation category and its strict nerve") {
  auto X = discrete_sset(2, 2);
  auto S = sigma_m(X, 1, 2);  // validates internally
  CHECK(S.C.hom[0][1]->counts[0] == 2);
  auto N = strict_nerve(S.C, 3, 2);
  // level k vertices: chains with multiplicities 1, |X|, |X|^2, ...
  CHECK(N.level[0]->counts[0] == 2);
  CHECK(N.level[1]->counts[0] == 1 + 2 + 1);
  CHECK(N.level[2]->counts[0] == 1 + 2 + 2 + 1);  // point u X u X u point
  CHECK(N.level[3]->counts[0] == 1 + 2 + 2 + 2 + 1);
  for (std::size_t n = 1; n < N.face.size(); ++n)
    for (auto& f : N.face[n]) CHECK(f.valid());
  for (std::size_t n = 0; n + 1 < N.level.size(); ++n)
    for (auto& f : N.degen[n]) CHECK(f.valid());
  CHECK(segal_check(N, 2));
  CHECK(segal_check(N, 3));
}

TEST_CASE("coherent and strict nerves agree at the bottom levels") {
  std::vector<EnrichedCategory> corpus;
  corpus.push_back(sigma_m(discrete_sset(2, 2), 1, 2).C);
  corpus.push_back(sigma_m(discrete_sset(1, 2), 2, 2).C);  // the poset [2]
  corpus.push_back(ch_standard(2, 2).C);
  for (auto& C : corpus) {
    auto N = strict_nerve(C, 1, 2);
    CHECK(hc_nerve_level(C, 0, 2).count == N.level[0]->counts[0]);
    CHECK(hc_nerve_level(C, 1, 2).count == N.level[1]->counts[0]);
  }
}

TEST_CASE("coherent simplices of the poset [2]") {
  auto C = sigma_m(discrete_sset(1, 2), 2, 2).C;
  CHECK(hc_nerve_level(C, 2, 2).count == 10);  // monotone maps [2] -> [2]
  auto S = sigma_m(discrete_sset(3, 2), 1, 2).C;
  CHECK(hc_nerve_level(S, 1, 2).count == 2 + 3);
}

TEST_CASE("long hom of a glued level: the worked shape") {
  FinSetPair p;
  p.y = {"a", "b"};
  p.in_x = {1, 1};
  auto hom = hom_CP_level(2, p, 0, 2, 2);
  // (X x X) glued to (X x Delta[1]) along a copy of X
  CHECK(hom->nd_counts() == std::vector<std::size_t>{6, 2, 0});
  auto inner = hom_CP_level(2, p, 0, 1, 2);
  CHECK(inner->counts[0] == 2);  // X itself
  CHECK(hom_CP_level(2, p, 1, 1, 2)->counts[0] == 1);
  CHECK(hom_CP_level(2, p, 1, 0, 2)->counts[0] == 0);
}

TEST_CASE("comparison to the concatenation category") {
  for (int m = 1; m <= 3; ++m)
    for (std::size_t x = 1; x <= 2; ++x) {
      auto r = comparison_to_sigma(m, x, 2);
      CHECK_MESSAGE(r.pass, r.detail);
      CHECK(r.colim_g == r.xm);
    }
}
