#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nck/cube.hpp"

using namespace nck;

TEST_CASE("object census is 3^(m-1)") {
  std::size_t expect = 1;
  for (int m = 1; m <= 5; ++m, expect *= 3) {
    auto C = cube(m);
    CHECK(C.objects.size() == expect);
    CHECK(C.cat.is_poset());
    C.cat.validate();
  }
}

TEST_CASE("morphism predicate") {
  auto C = cube(3);
  int a = C.object_index({0u, 0u});            // the long edge
  int b = C.object_index({0u, 6u});            // the spine
  int c = C.object_index({6u, 6u});            // the whole simplex
  CHECK(C.has_mor(a, c));
  CHECK(!C.has_mor(a, b));  // dropping S bits needs them absorbed into I
  CHECK(C.has_mor(b, c));
  CHECK(!C.has_mor(c, a));
}

TEST_CASE("intervals of an object") {
  // m=4, S={1,3}, I={3}: joints at 0, 1, 4; the intervals carry the S-content
  // of each gap, matching the interior vertices of the corresponding bead
  auto iv = intervals(4, {8u, 10u});
  REQUIRE(iv.size() == 2);
  CHECK(iv[0] == std::vector<int>{1});
  CHECK(iv[1] == std::vector<int>{1, 3});
  auto act = interval_action(4, {8u, 10u}, {10u, 10u});
  CHECK(act == std::vector<int>{0, 0});  // both land in the single interval
}

TEST_CASE("cube-necklace dictionary round trips") {
  for (int m = 1; m <= 4; ++m) {
    auto D = standard_simplex(m, m);
    auto C = cube(m);
    for (auto& o : C.objects) {
      auto T = necklace_of_cube(D, m, o);
      auto o2 = cube_of_necklace(m, T);
      CHECK(o2.I == o.I);
      CHECK(o2.S == o.S);
    }
    auto r = nec_cube_iso(D, m);
    CHECK_MESSAGE(r.pass, r.detail);
    auto b = cube_bead_compat(D, m);
    CHECK_MESSAGE(b.pass, b.detail);
  }
}

TEST_CASE("retraction of the cube onto the subset poset") {
  // r(I,S) = I together with the unused slots
  CHECK(pm_retract(3, {0u, 6u}) == 0u);
  CHECK(pm_retract(3, {0u, 0u}) == 6u);
  CHECK(pm_retract(3, {2u, 2u}) == 6u);
  for (int m = 1; m <= 4; ++m) {
    auto r = pm_retraction(m);
    CHECK_MESSAGE(r.pass, r.detail);
    auto p = p12_cofinality(m);
    CHECK_MESSAGE(p.pass, p.detail);
  }
}

TEST_CASE("generators generate: every morphism factors") {
  for (int m = 2; m <= 4; ++m) {
    auto C = cube(m);
    auto gens = C.generators();
    // closure of identities under composition with generators
    std::vector<char> reach(C.cat.mors.size(), 0);
    for (int i : C.cat.identity) reach[static_cast<std::size_t>(i)] = 1;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int g : gens)
        for (std::size_t f = 0; f < C.cat.mors.size(); ++f)
          if (reach[f] && C.cat.composable(g, static_cast<int>(f))) {
            int gf = C.cat.compose(g, static_cast<int>(f));
            if (!reach[static_cast<std::size_t>(gf)]) {
              reach[static_cast<std::size_t>(gf)] = 1;
              grew = true;
            }
          }
    }
    for (auto c : reach) CHECK(c);
  }
}
