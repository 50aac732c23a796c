#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "nck/necklace.hpp"

using namespace nck;

namespace {

SSet two_cycle() {
  // two 1-simplices glued head-to-tail in a loop
  SSetData d;
  d.trunc = 1;
  d.n_vertices = 2;
  d.faces.resize(2);
  d.degen.resize(2);
  d.faces[1] = {{1, 0}, {0, 1}, {0, 0}, {1, 1}};  // a, b, and the two degenerates
  d.degen[0] = {{2}, {3}};
  return finalize(std::move(d));
}

}  // namespace

TEST_CASE("preceq on a standard simplex is the linear order") {
  auto rel = preceq(standard_simplex(2, 2));
  for (Idx i = 0; i < 3; ++i)
    for (Idx j = 0; j < 3; ++j) CHECK(static_cast<bool>(rel[i][j]) == (i <= j));
}

TEST_CASE("order classification") {
  for (int m = 0; m <= 3; ++m) {
    auto c = classify_order(standard_simplex(m, std::max(m, 1)));
    CHECK(c.ordered);
    CHECK(c.one_ordered);
  }
  auto c = classify_order(two_cycle());
  CHECK(!c.ordered);
  CHECK(!c.one_ordered);
  auto s = classify_order(spine(3, 2));
  CHECK(s.ordered);
  CHECK(s.one_ordered);
}

TEST_CASE("necklace bookkeeping") {
  auto nk = make_necklace({2, 1, 3});
  CHECK(nk.beads() == 3);
  CHECK(nk.n_vertices() == 7);
  CHECK(nk.joints() == std::vector<int>{0, 2, 3, 6});
  CHECK(nk.interior() == std::vector<int>{1, 4, 5});
  auto N = necklace_sset(nk, 3);
  CHECK(N->counts[0] == 7);
  CHECK(N->nd_counts()[1] == 3 + 1 + 6);  // edges of the three beads
  CHECK(pi0(N) == 1);
}

TEST_CASE("point necklace") {
  auto nk = make_necklace({0});
  CHECK(nk.n_vertices() == 1);
  auto N = necklace_sset(nk, 2);
  CHECK(N->counts[0] == 1);
}

TEST_CASE("tnd census over a standard simplex") {
  std::size_t expect = 1;
  for (int m = 1; m <= 3; ++m, expect *= 3) {
    auto N = tnd_necklaces(standard_simplex(m, m), 0, static_cast<Idx>(m));
    CHECK(N.objects.size() == expect);
    CHECK(N.cat.is_poset());
    for (auto& T : N.objects) CHECK(is_mono(T.f));
    N.cat.validate();
  }
}

TEST_CASE("tnd necklaces of Delta[2] from 0 to 2, explicitly") {
  auto N = tnd_necklaces(standard_simplex(2, 2), 0, 2);
  REQUIRE(N.objects.size() == 3);
  std::vector<std::vector<int>> dims;
  for (auto& T : N.objects) dims.push_back(T.nk.dims);
  // the single edge 02, the spine, and the whole simplex
  CHECK(std::count(dims.begin(), dims.end(), std::vector<int>{1}) == 1);
  CHECK(std::count(dims.begin(), dims.end(), std::vector<int>{1, 1}) == 1);
  CHECK(std::count(dims.begin(), dims.end(), std::vector<int>{2}) == 1);
}

TEST_CASE("tnd requires a 1-ordered target") {
  CHECK_THROWS_AS(tnd_necklaces(two_cycle(), 0, 1), precondition_error);
}

TEST_CASE("bounded category contains the tnd one") {
  auto K = standard_simplex(2, 2);
  auto tnd = tnd_necklaces(K, 0, 2);
  auto full = bounded_necklaces(K, 0, 2, 2, 2);
  CHECK(full.objects.size() >= tnd.objects.size());
  for (auto& m : full.mors) {
    CHECK(m.g.valid());
    CHECK(compose(full.objects[m.dst].f, m.g).at == full.objects[m.src].f.at);
  }
  full.cat.validate();
}

TEST_CASE("bead map locates images") {
  auto K = standard_simplex(3, 3);
  auto N = tnd_necklaces(K, 0, 3);
  for (auto& mor : N.mors) {
    auto bm = bead_map(N.objects[mor.src], N.objects[mor.dst], mor.g);
    CHECK(bm.size() == static_cast<std::size_t>(N.objects[mor.src].nk.beads()));
    for (std::size_t i = 0; i + 1 < bm.size(); ++i) CHECK(bm[i] <= bm[i + 1]);
  }
}

TEST_CASE("finality certificates on standard simplices") {
  {
    auto K = standard_simplex(3, 3);
    // objects-only enumeration: the certificate never looks at bounded morphisms
    auto c = finality_certificate(bounded_necklaces(K, 0, 3, 3, 3, false), tnd_necklaces(K, 0, 3));
    CHECK(c.status == CertStatus::pass);
    for (auto& it : c.items) {
      CHECK(it.comma_objects > 0);
      CHECK(it.connected);
    }
  }
  {
    auto K = standard_simplex(1, 2);
    auto c = finality_certificate(bounded_necklaces(K, 0, 1, 2, 1), tnd_necklaces(K, 0, 1));
    CHECK(c.status == CertStatus::pass);
  }
}
