#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "nck/sset.hpp"

using namespace nck;

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("standard simplex counts match the binomial oracle") {
  for (int m = 0; m <= 4; ++m) {
    auto D = standard_simplex(m, 4);
    auto nd = D->nd_counts();
    for (int n = 0; n <= 4; ++n) {
      // weakly increasing (n+1)-tuples over {0..m}
      CHECK(D->counts[n] == binom(static_cast<std::size_t>(m + n + 1), static_cast<std::size_t>(n + 1)));
      CHECK(nd[n] == binom(static_cast<std::size_t>(m + 1), static_cast<std::size_t>(n + 1)));
    }
  }
}

TEST_CASE("delta tuple codec round trips") {
  auto D = standard_simplex(3, 3);
  for (int n = 0; n <= 3; ++n)
    for (Idx s = 0; s < D->counts[n]; ++s) {
      auto t = delta_tuple_of_index(3, n, s);
      CHECK(delta_index_of_tuple(3, t) == s);
      CHECK(D->vertex_tuple(n, s) == t);
    }
}

TEST_CASE("EZ normal form: strictly decreasing word over a non-degenerate base") {
  auto P = product(standard_simplex(2, 4), standard_simplex(1, 4), 4).prod;
  for (int n = 1; n <= 4; ++n)
    for (Idx s = 0; s < P->counts[n]; ++s) {
      auto [word, base] = P->ez(n, s);
      CHECK(!P->is_degenerate(base.first, base.second));
      for (std::size_t i = 0; i + 1 < word.size(); ++i) CHECK(word[i] > word[i + 1]);
      // reapply the degeneracies
      int lvl = base.first;
      Idx cur = base.second;
      for (auto it = word.rbegin(); it != word.rend(); ++it) {
        cur = P->degeneracy(lvl, cur, *it);
        ++lvl;
      }
      CHECK(lvl == n);
      CHECK(cur == s);
    }
}

TEST_CASE("finalize rejects broken simplicial identities") {
  SSetData d;
  d.trunc = 1;
  d.n_vertices = 2;
  d.faces.resize(2);
  d.degen.resize(2);
  d.faces[1] = {{0, 0}, {1, 0}};
  d.degen[0] = {{0}, {0}};  // s_0(1) should have both faces equal to 1
  CHECK_THROWS(finalize(std::move(d)));
}

TEST_CASE("boundary and spine") {
  auto B = boundary(2, 3);
  CHECK(B->nd_counts() == std::vector<std::size_t>{3, 3, 0, 0});
  CHECK(pi0(B) == 1);
  auto S = spine(3, 2);
  CHECK(S->nd_counts() == std::vector<std::size_t>{4, 3, 0});
  CHECK(pi0(S) == 1);
  CHECK(pi0(discrete_sset(5, 1)) == 5);
}

TEST_CASE("binary product: shuffle counts") {
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q + p <= 4; ++q) {
      auto P = product(standard_simplex(p, p + q), standard_simplex(q, p + q), p + q).prod;
      auto nd = P->nd_counts();
      // top non-degenerate simplices of Delta[p] x Delta[q] are the (p,q) shuffles
      CHECK(nd[p + q] == binom(static_cast<std::size_t>(p + q), static_cast<std::size_t>(p)));
      std::size_t euler = 0;
      bool sign = true;
      for (int n = 0; n <= p + q; ++n, sign = !sign)
        euler += sign ? nd[n] : -nd[n];
      CHECK(euler == 1);  // contractible
    }
  auto P = product(standard_simplex(1, 2), standard_simplex(1, 2), 2).prod;
  CHECK(P->nd_counts() == std::vector<std::size_t>{4, 5, 2});
  CHECK(P->counts[1] == 9);
}

TEST_CASE("multi product projections are simplicial") {
  auto mp = multi_product({standard_simplex(1, 2), discrete_sset(2, 2), standard_simplex(2, 2)}, 2);
  for (std::size_t i = 0; i < 3; ++i) CHECK(mp.projection(i).valid());
  for (int n = 0; n <= 2; ++n)
    for (Idx s = 0; s < mp.prod->counts[n]; ++s) CHECK(mp.encode(n, mp.decode(n, s)) == s);
}

TEST_CASE("quotient vs naive closure oracle") {
  // glue the two endpoints of Delta[1]: a circle
  auto D = standard_simplex(1, 3);
  auto q = quotient(D, {{0, 0, 1}});
  CHECK(q.q->counts[0] == 1);
  CHECK(q.q->nd_counts() == std::vector<std::size_t>{1, 1, 0, 0});
  CHECK(q.proj.valid());

  // glue two vertices of Delta[2]
  auto D2 = standard_simplex(2, 2);
  auto q2 = quotient(D2, {{0, 0, 2}});
  CHECK(q2.proj.valid());
  // operator closure of the vertex identification: s0(0) ~ s0(2) at level 1
  // and s0s0(0) ~ s0s0(2) at level 2; no non-degenerate simplices merge
  CHECK(q2.q->counts[0] == 2);
  CHECK(q2.q->counts[1] == D2->counts[1] - 1);
  CHECK(q2.q->counts[2] == D2->counts[2] - 1);
  CHECK(q2.q->nd_counts() == std::vector<std::size_t>{2, 3, 1});
}

TEST_CASE("coproduct and subcomplex") {
  auto C = coproduct({standard_simplex(1, 2), standard_simplex(2, 2)}, 2);
  CHECK(C.sum->counts[0] == 5);
  CHECK(C.in[0].valid());
  CHECK(C.in[1].valid());
  CHECK(pi0(C.sum) == 2);

  auto D = standard_simplex(2, 2);
  std::vector<std::vector<char>> keep(3);
  for (int n = 0; n <= 2; ++n) {
    keep[n].assign(D->counts[n], 0);
    for (Idx s = 0; s < D->counts[n]; ++s) {
      auto& t = D->vertex_tuple(n, s);
      bool ok = true;
      for (auto v : t) ok = ok && v <= 1;
      keep[n][s] = ok;  // the edge 01
    }
  }
  auto sub = subcomplex(D, keep);
  CHECK(sub.sub->nd_counts() == std::vector<std::size_t>{2, 1, 0});
  CHECK(sub.incl.valid());
  CHECK(is_mono(sub.incl));
}

TEST_CASE("enumerate_maps counts against hand counts") {
  auto D0 = standard_simplex(0, 2);
  auto D1 = standard_simplex(1, 2);
  auto D2 = standard_simplex(2, 2);
  CHECK(enumerate_maps(D0, D2).size() == 3);
  CHECK(enumerate_maps(D1, D1).size() == 3);   // monotone vertex maps 00, 01, 11
  CHECK(enumerate_maps(D1, D2).size() == 6);
  CHECK(enumerate_maps(D1, D2, {{0, 0}}).size() == 3);  // pinned source vertex
  for (auto& f : enumerate_maps(D2, D1)) CHECK(f.valid());
  CHECK(enumerate_maps(D2, D1).size() == 4);  // monotone [2] -> [1]
}

TEST_CASE("apply_monotone agrees with vertex tuples on a standard simplex") {
  auto D = standard_simplex(3, 3);
  // the face [0,2,3] of the top simplex
  auto top = delta_index_of_tuple(3, {0, 1, 2, 3});
  auto s = apply_monotone(D, 3, top, {0, 2, 3});
  CHECK(D->vertex_tuple(2, s) == std::vector<Idx>{0, 2, 3});
}
