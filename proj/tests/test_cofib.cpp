#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nck/cofib.hpp"

using namespace nck;

TEST_CASE("coordinate classification") {
  CHECK(map_kind(3, 0) == MapKind::constant_one);
  CHECK(map_kind(3, 4) == MapKind::constant_zero);
  for (int z = 1; z <= 3; ++z) CHECK(map_kind(3, z) == MapKind::threshold);
}

TEST_CASE("the three one-coordinate decompositions") {
  CubeObject o{2u, 2u};  // I = S = {1} in the m=2 cube
  auto a = alpha_decompose(o, 1, {2});  // constant 0
  CHECK(a.core.I == 0u);
  CHECK(a.core.S == 0u);
  CHECK(a.tau.empty());
  a = alpha_decompose(o, 1, {1});  // the threshold map
  CHECK(a.core.I == 2u);
  CHECK(a.core.S == 2u);
  CHECK(a.tau == std::vector<int>{1});
  a = alpha_decompose(o, 1, {0});  // constant 1
  CHECK(a.core.I == 0u);
  CHECK(a.core.S == 2u);
  CHECK(a.tau.empty());
  for (int z = 0; z <= 2; ++z) {
    auto d = alpha_decompose(o, 1, {z});
    CHECK(beta_compose(d.core, o, 1, d.tau) == std::vector<int>{z});
  }
}

TEST_CASE("round trips object by object") {
  for (int m = 1; m <= 3; ++m) {
    auto C = cube(m);
    for (auto& o : C.objects)
      for (int k = 0; k <= 3; ++k) {
        auto r = alpha_beta(m, k, o);
        CHECK_MESSAGE(r.pass, r.detail);
      }
  }
}

TEST_CASE("decomposition and counting identity") {
  for (int k = 0; k <= 3; ++k) {
    auto r = decomposition_check(3, k);
    CHECK_MESSAGE(r.pass, r.detail);
  }
  // 16 = 4 + 8 + 4 for two coordinates at k = 2: checked inside, and here
  CHECK((2 + 2) * (2 + 2) == 4 + 2 * 2 * 2 + 2 * 2);
}

TEST_CASE("split agrees with the EZ oracle") {
  for (int m = 2; m <= 4; ++m)
    for (int k = 0; k <= 4; ++k) {
      auto r = split_check(m, k);
      CHECK_MESSAGE(r.pass, r.detail);
    }
  // coverage pigeonhole: more thresholds than coordinates leaves nothing
  auto H = h_diagram(3, 3);
  auto C = cube(3);
  int two = C.object_index({6u, 6u});  // two coordinates
  CHECK(H.dia.value[two]->nd_counts()[3] == 0);
  CHECK(H.dia.value[two]->nd_counts()[2] == 2);  // the two shuffles
}

TEST_CASE("weight certificates") {
  CHECK(hm_certificate(1, 5).status == CertStatus::pass);
  CHECK(hm_certificate(2, 4).status == CertStatus::pass);
  CHECK(hm_certificate(4, 3).status == CertStatus::pass);
  CHECK_THROWS_AS(hm_certificate(0, 3), precondition_error);
}

TEST_CASE("retraction certificates") {
  CHECK(gx_certificate(3, 2).status == CertStatus::pass);
  CHECK(gx_certificate(2, 3).status == CertStatus::pass);
  CHECK(gx_certificate(1, 1).status == CertStatus::pass);
  CHECK(gx_certificate(4, 1).status == CertStatus::pass);
  CHECK_THROWS_AS(gx_certificate(2, 0), precondition_error);
}
