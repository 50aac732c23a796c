#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nck/level.hpp"

using namespace nck;

namespace {

FinSetPair make_pair_sizes(std::size_t y, std::size_t x) {
  FinSetPair p;
  for (std::size_t i = 0; i < y; ++i) {
    p.y.push_back("e" + std::to_string(i));
    p.in_x.push_back(i < x ? 1 : 0);
  }
  return p;
}

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

TEST_CASE("glued level: non-degenerate inventory by hand") {
  // one full copy and one boundary copy sharing all vertices
  auto pl = p_level(2, make_pair_sizes(2, 1));
  CHECK(pl.P->counts[0] == 3);
  CHECK(pl.P->nd_counts() == std::vector<std::size_t>{3, 6, 1});
  CHECK(pl.Q.valid());
  for (int i = 0; i <= 2; ++i) CHECK(pl.Q.at[0][pl.vertex[i]] == static_cast<Idx>(i));
  // copies embed and own their non-degenerate simplices
  for (auto& f : pl.copy_in) CHECK(f.valid());
  CHECK(classify_order(pl.P).one_ordered);
}

TEST_CASE("glued level: counts scale with the pair") {
  for (int m = 2; m <= 3; ++m)
    for (std::size_t y = 1; y <= 3; ++y)
      for (std::size_t x = 1; x <= y; ++x) {
        auto pl = p_level(m, make_pair_sizes(y, x));
        auto nd = pl.P->nd_counts();
        auto bd = boundary(m, m)->nd_counts();
        auto dl = standard_simplex(m, m)->nd_counts();
        CHECK(nd[0] == static_cast<std::size_t>(m + 1));
        for (int n = 1; n <= m; ++n)
          CHECK(nd[n] == (y - x) * bd[n] + x * dl[n]);
      }
}

TEST_CASE("pushforward is a discrete fibration with the expected fibers") {
  for (int m = 2; m <= 3; ++m)
    for (std::size_t y = 1; y <= 3; ++y)
      for (std::size_t x = 1; x <= std::min<std::size_t>(y, 2); ++x) {
        auto pf = q_pushforward(m, make_pair_sizes(y, x));
        CHECK_MESSAGE(pf.functorial, pf.detail);
        CHECK_MESSAGE(pf.discrete_fibration, pf.detail);
        CHECK_MESSAGE(pf.fibers_match, pf.detail);
        // fiber cardinalities: |Y|^beads off the top, |X| at the top
        auto G = g_diagram(m, pf.pl.pair);
        std::size_t total = 0;
        for (std::size_t a = 0; a < G.dia.size.size(); ++a) total += G.dia.size[a];
        CHECK(pf.total.objects.size() == total);
      }
}

TEST_CASE("spine level is discrete with |X|^m objects") {
  for (int m = 1; m <= 3; ++m)
    for (std::size_t x = 1; x <= 3; ++x) {
      auto sl = spine_level(m, x);
      CHECK(sl.discrete);
      CHECK(sl.count_ok);
      CHECK(sl.necs.objects.size() == ipow(x, m));
      CHECK(sl.expected == ipow(x, m));
    }
}

TEST_CASE("inner homs agree with the all-of-Y level") {
  for (int m = 2; m <= 3; ++m)
    for (std::size_t y = 1; y <= 2; ++y)
      for (std::size_t x = 1; x <= y; ++x)
        for (int i = 0; i <= m; ++i)
          for (int j = i + 1; j <= m; ++j) {
            if (j - i >= m) continue;
            auto r = inner_hom_iso(m, make_pair_sizes(y, x), i, j);
            CHECK_MESSAGE(r.pass, r.detail);
          }
}
