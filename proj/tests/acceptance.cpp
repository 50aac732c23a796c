// Acceptance runner: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "nck/cofib.hpp"
#include "nck/json_io.hpp"

using namespace nck;

namespace {

int failures = 0;

void criterion(int n, const std::string& what, const std::function<bool()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string err;
  try {
    ok = body();
  } catch (const std::exception& e) {
    err = e.what();
  }
  auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s  %2d  %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", n, what.c_str(), dt,
              err.empty() ? "" : " -- ", err.c_str());
  if (!ok) ++failures;
}

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

FinSetPair pair_sizes(std::size_t y, std::size_t x) {
  FinSetPair p;
  for (std::size_t i = 0; i < y; ++i) {
    p.y.push_back("e" + std::to_string(i));
    p.in_x.push_back(i < x ? 1 : 0);
  }
  return p;
}

SSet colimit_oracle(const SSetDiagram& D, int trunc) {
  auto cp = coproduct(D.value, trunc);
  std::vector<std::tuple<int, Idx, Idx>> pairs;
  for (std::size_t f = 0; f < D.arrow.size(); ++f) {
    auto a = static_cast<std::size_t>(D.shape.mors[f].src);
    auto b = static_cast<std::size_t>(D.shape.mors[f].dst);
    for (int n = 0; n <= trunc; ++n)
      for (Idx s = 0; s < D.value[a]->counts[n]; ++s)
        pairs.push_back({n, cp.in[a].at[n][s], cp.in[b].at[n][D.arrow[f].at[n][s]]});
  }
  return quotient(cp.sum, pairs).q;
}

}  // namespace

int main() {
  criterion(1, "necklace census 3^(m-1), two routes, m <= 5", [] {
    std::size_t expect = 1;
    for (int m = 1; m <= 5; ++m, expect *= 3) {
      if (tnd_necklaces(standard_simplex(m, m), 0, static_cast<Idx>(m)).objects.size() != expect)
        return false;
      if (cube(m).objects.size() != expect) return false;
    }
    return true;
  });

  criterion(2, "cube isomorphism and bead naturality, m <= 5", [] {
    for (int m = 1; m <= 5; ++m) {
      auto D = standard_simplex(m, m);
      if (!nec_cube_iso(D, m).pass) return false;
      if (!cube_bead_compat(D, m).pass) return false;
    }
    return true;
  });

  criterion(3, "hom of Delta[m] is the (m-1)-cube up to dimension 4, m <= 4", [] {
    for (int m = 1; m <= 4; ++m) {
      auto H = ch_hom(standard_simplex(m, m), 0, static_cast<Idx>(m), 4);
      std::vector<int> cs;
      for (int w = 1; w < m; ++w) cs.push_back(w);
      auto c = cube_power(cs, 4);
      if (H.colim.object->counts != c.p.prod->counts) return false;
      if (H.colim.object->nd_counts() != c.p.prod->nd_counts()) return false;
    }
    return true;
  });

  criterion(4, "discrete fibration with fibers |Y|^beads (|X| at top), m <= 4, |Y| <= 3, |X| <= 2", [] {
    for (int m = 1; m <= 4; ++m)
      for (std::size_t y = 1; y <= 3; ++y)
        for (std::size_t x = 1; x <= std::min<std::size_t>(y, 2); ++x) {
          auto pf = q_pushforward(m, pair_sizes(y, x));
          if (!pf.functorial || !pf.discrete_fibration || !pf.fibers_match) return false;
        }
    return true;
  });

  criterion(5, "spine level is the discrete category X^m, m <= 4, |X| <= 3", [] {
    for (int m = 1; m <= 4; ++m)
      for (std::size_t x = 1; x <= 3; ++x) {
        auto sl = spine_level(m, x);
        if (!sl.discrete || !sl.count_ok || sl.necs.objects.size() != ipow(x, m)) return false;
      }
    return true;
  });

  criterion(6, "colimits match the quotient oracle; colim G(X,X) = X^m, m <= 4, |X| <= 3", [] {
    // plain colimits against the coproduct-quotient oracle
    for (int m = 2; m <= 3; ++m) {
      auto H = ch_hom(standard_simplex(m, m), 0, static_cast<Idx>(m), 3);
      auto oracle = colimit_oracle(H.dia, 3);
      if (H.colim.object->counts != oracle->counts) return false;
      if (H.colim.object->nd_counts() != oracle->nd_counts()) return false;
    }
    {
      auto pl = p_level(2, pair_sizes(2, 1));
      auto H = ch_hom(pl.P, pl.vertex[0], pl.vertex[2], 3);
      auto oracle = colimit_oracle(H.dia, 3);
      if (H.colim.object->counts != oracle->counts) return false;
    }
    // weighted colimits against the two-row coequalizer oracle
    for (int m = 1; m <= 3; ++m) {
      auto W = h_diagram(m, 2);
      auto F = iota(g_diagram(m, pair_sizes(2, 2)).dia, 2);
      auto wc = weighted_colimit(W.dia, F, 2);
      // oracle: quotient of coprod F(a) x W(a) by both actions of every arrow
      std::vector<SSet> vals;
      std::vector<ProductSSet> prods;
      for (std::size_t a = 0; a < F.value.size(); ++a) {
        prods.push_back(product(F.value[a], W.dia.value[a], 2));
        vals.push_back(prods.back().prod);
      }
      auto cp = coproduct(vals, 2);
      std::vector<std::tuple<int, Idx, Idx>> pairs;
      for (std::size_t f = 0; f < F.arrow.size(); ++f) {
        auto a = static_cast<std::size_t>(F.shape.mors[f].src);
        auto b = static_cast<std::size_t>(F.shape.mors[f].dst);
        // span F(a) x W(b) -> both rows
        for (int n = 0; n <= 2; ++n)
          for (Idx s = 0; s < F.value[a]->counts[n]; ++s)
            for (Idx w = 0; w < W.dia.value[b]->counts[n]; ++w) {
              Idx left = cp.in[b].at[n][prods[b].encode(n, {F.arrow[f].at[n][s], w})];
              Idx right = cp.in[a].at[n][prods[a].encode(n, {s, W.dia.arrow[f].at[n][w]})];
              pairs.push_back({n, left, right});
            }
      }
      auto oracle = quotient(cp.sum, pairs).q;
      if (wc.object->counts != oracle->counts) return false;
      if (wc.object->nd_counts() != oracle->nd_counts()) return false;
    }
    // colim of the interval-power diagram is X^m
    for (int m = 1; m <= 4; ++m)
      for (std::size_t x = 1; x <= 3; ++x) {
        auto G = g_diagram(m, pair_sizes(x, x));
        if (set_colimit(G.dia).size != ipow(x, m)) return false;
      }
    return true;
  });

  criterion(7, "pushout-product hom at m = 2 and inner-hom equality, m <= 3", [] {
    // (X x X) u_X (X x Delta[1]) for X = Y, via an explicit pushout oracle
    for (std::size_t x = 1; x <= 3; ++x) {
      auto pr = pair_sizes(x, x);
      auto hom = hom_CP_level(2, pr, 0, 2, 2);
      auto X = discrete_sset(x, 2);
      auto A = product(X, X, 2);
      auto B = product(X, standard_simplex(1, 2), 2);
      auto cp = coproduct({A.prod, B.prod}, 2);
      std::vector<std::tuple<int, Idx, Idx>> glue;
      for (Idx v = 0; v < x; ++v)
        glue.push_back({0, cp.in[0].at[0][A.encode(0, {v, v})], cp.in[1].at[0][B.encode(0, {v, 0})]});
      auto oracle = quotient(cp.sum, glue).q;
      if (hom->counts != oracle->counts) return false;
      if (hom->nd_counts() != oracle->nd_counts()) return false;
    }
    for (int m = 2; m <= 3; ++m)
      for (std::size_t y = 1; y <= 2; ++y)
        for (std::size_t x = 1; x <= y; ++x)
          for (int i = 0; i <= m; ++i)
            for (int j = i + 1; j <= m && j - i < m; ++j)
              if (!inner_hom_iso(m, pair_sizes(y, x), i, j).pass) return false;
    return true;
  });

  criterion(8, "retraction identity of the comparison map, m <= 3, |X| <= 3", [] {
    for (int m = 1; m <= 3; ++m)
      for (std::size_t x = 1; x <= 3; ++x)
        if (!comparison_to_sigma(m, x, 2).pass) return false;
    return true;
  });

  criterion(9, "cofibrancy certificates: hm(m,4) for m <= 5, gx(m,X) for m <= 4, |X| <= 3", [] {
    for (int m = 1; m <= 5; ++m)
      if (hm_certificate(m, 4).status != CertStatus::pass) return false;
    for (int m = 1; m <= 4; ++m)
      for (std::size_t x = 1; x <= 3; ++x)
        if (gx_certificate(m, x).status != CertStatus::pass) return false;
    return true;
  });

  criterion(10, "strict Segal isomorphisms; coherent nerve agreement at levels 0 and 1", [] {
    std::vector<EnrichedCategory> corpus;
    corpus.push_back(sigma_m(discrete_sset(1, 2), 2, 2).C);  // the poset [2]
    corpus.push_back(sigma_m(discrete_sset(1, 2), 3, 2).C);  // the poset [3]
    corpus.push_back(sigma_m(discrete_sset(2, 2), 1, 2).C);  // one arrow, hom X
    corpus.push_back(sigma_m(discrete_sset(3, 2), 1, 2).C);
    corpus.push_back(sigma_m(product(standard_simplex(1, 2), standard_simplex(1, 2), 2).prod, 1, 2).C);
    corpus.push_back(ch_standard(2, 2).C);
    for (auto& C : corpus) {
      auto N = strict_nerve(C, 3, 2);
      for (int n = 2; n <= 3; ++n)
        if (!segal_check(N, n)) return false;
      if (hc_nerve_level(C, 0, 2).count != N.level[0]->counts[0]) return false;
      if (hc_nerve_level(C, 1, 2).count != N.level[1]->counts[0]) return false;
    }
    return true;
  });

  criterion(11, "finality certificates and bounded-vs-tnd colimit reduction", [] {
    struct Instance {
      SSet K;
      Idx a, b;
      int beads, dim;
      // the dominating bounds at m = 3 give a bounded category with ~10^7
      // morphisms; the colimit cross-check materializes it, finality does not
      bool reduce;
    };
    std::vector<Instance> corpus;
    for (int m = 1; m <= 3; ++m)
      corpus.push_back({standard_simplex(m, m), 0, static_cast<Idx>(m), m, m, m <= 2});
    for (int m = 2; m <= 3; ++m)
      for (std::size_t y = 1; y <= 2; ++y)
        for (std::size_t x = 1; x <= y; ++x) {
          auto pl = p_level(m, pair_sizes(y, x));
          corpus.push_back(
              {pl.P, pl.vertex[0], pl.vertex[static_cast<std::size_t>(m)], m, m, m <= 2});
        }
    corpus.push_back({boundary(3, 3), 0, 3, 3, 2, true});
    for (auto& inst : corpus) {
      auto tnd = tnd_necklaces(inst.K, inst.a, inst.b);
      auto objs = bounded_necklaces(inst.K, inst.a, inst.b, inst.beads, inst.dim, false);
      if (finality_certificate(objs, tnd).status != CertStatus::pass) return false;
      if (!inst.reduce) continue;
      auto full = bounded_necklaces(inst.K, inst.a, inst.b, inst.beads, inst.dim);
      auto H = ch_hom(inst.K, inst.a, inst.b, 3, false, inst.beads, inst.dim);
      auto J = necklace_inclusion(tnd, full);
      if (final_reduction_check(tnd.cat, J, H.dia, 3, true).status != CertStatus::pass)
        return false;
    }
    return true;
  });

  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
