#include "nck/cofib.hpp"

#include "nck/colim.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace nck {

MapKind map_kind(int k, int z) {
  if (z == 0) return MapKind::constant_one;
  if (z == k + 1) return MapKind::constant_zero;
  return MapKind::threshold;
}

namespace {

std::vector<int> bits_of(std::uint32_t mask) {
  std::vector<int> out;
  for (int b = 0; b < 32; ++b)
    if (mask & (1u << b)) out.push_back(b);
  return out;
}

bool cube_mor_exists(const CubeObject& from, const CubeObject& to) {
  return (from.I & ~to.I) == 0 && to.S == (from.S | to.I);
}

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[static_cast<std::size_t>(x)] != x) x = p[static_cast<std::size_t>(x)] = p[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])];
    return x;
  }
  void unite(int a, int b) { p[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

AlphaResult alpha_decompose(const CubeObject& o, int k, const std::vector<int>& z) {
  AlphaResult r;
  auto cs = bits_of(o.I);
  std::uint32_t c0 = 0;
  r.core.I = 0;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    switch (map_kind(k, z[i])) {
      case MapKind::threshold:
        r.core.I |= 1u << cs[i];
        r.tau.push_back(z[i]);
        break;
      case MapKind::constant_zero:
        c0 |= 1u << cs[i];
        break;
      case MapKind::constant_one:
        break;
    }
  }
  r.core.S = o.S & ~c0;
  return r;
}

std::vector<int> beta_compose(const CubeObject& core, const CubeObject& o, int k,
                              const std::vector<int>& tau) {
  auto cs = bits_of(o.I);
  std::vector<int> z(cs.size());
  std::size_t t = 0;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    std::uint32_t b = 1u << cs[i];
    if (core.I & b) z[i] = tau[t++];
    else if (core.S & b) z[i] = 0;
    else z[i] = k + 1;
  }
  return z;
}

CheckRecord alpha_beta(int m, int k, const CubeObject& o) {
  CheckRecord rec{"alpha_beta", true, ""};
  auto H = h_diagram(m, k);
  CubeCategory cb = cube(m);
  int obj = cb.object_index(o);
  std::size_t total = H.prods[static_cast<std::size_t>(obj)].prod->counts[static_cast<std::size_t>(k)];
  std::vector<char> hit(total, 0);
  // alpha then beta on every simplex
  for (Idx s = 0; s < total; ++s) {
    auto z = H.zeros(obj, k, s);
    auto a = alpha_decompose(o, k, z);
    if ((a.core.I & ~a.core.S) || !cube_mor_exists(a.core, o)) {
      rec.pass = false;
      rec.detail = "alpha lands outside the slice over the object";
      return rec;
    }
    for (int zz : a.tau)
      if (map_kind(k, zz) != MapKind::threshold) {
        rec.pass = false;
        rec.detail = "alpha core has a constant coordinate";
        return rec;
      }
    if (beta_compose(a.core, o, k, a.tau) != z) {
      rec.pass = false;
      rec.detail = "beta(alpha) is not the identity";
      return rec;
    }
  }
  // beta then alpha over the full enumerated domain, with bijectivity
  std::size_t pairs = 0;
  auto coords = bits_of(o.I);
  std::uint32_t im = o.I;
  for (std::uint32_t i2 = im;; i2 = (i2 - 1) & im) {
    // admissible S': drop any subset of I \ I' from S
    std::uint32_t drop_max = o.I & ~i2;
    for (std::uint32_t c0 = drop_max;; c0 = (c0 - 1) & drop_max) {
      CubeObject core{i2, o.S & ~c0};
      std::vector<int> tau(static_cast<std::size_t>(std::popcount(i2)), 1);
      std::function<bool(std::size_t)> walk = [&](std::size_t pos) -> bool {
        if (pos == tau.size()) {
          ++pairs;
          auto z = beta_compose(core, o, k, tau);
          auto a = alpha_decompose(o, k, z);
          if (a.core.I != core.I || a.core.S != core.S || a.tau != tau) return false;
          Idx s = H.from_zeros(obj, k, z);
          if (hit[s]) return false;
          hit[s] = 1;
          return true;
        }
        for (int zz = 1; zz <= k; ++zz) {
          tau[pos] = zz;
          if (!walk(pos + 1)) return false;
        }
        return true;
      };
      if (!walk(0)) {
        rec.pass = false;
        rec.detail = "alpha(beta) fails or the decomposition is not injective";
        return rec;
      }
      if (c0 == 0) break;
    }
    if (i2 == 0) break;
  }
  if (pairs != total) {
    rec.pass = false;
    rec.detail = "decomposition is not surjective";
  }
  return rec;
}

CheckRecord decomposition_check(int m, int k) {
  std::ostringstream name;
  name << "decomposition m=" << m << " k=" << k;
  CheckRecord rec{name.str(), true, ""};
  CubeCategory cb = cube(m);
  for (auto& o : cb.objects) {
    auto r = alpha_beta(m, k, o);
    if (!r.pass) return {rec.name, false, r.detail};
    // counting identity
    int ni = std::popcount(o.I);
    unsigned long long lhs = 1, rhs = 0;
    for (int i = 0; i < ni; ++i) lhs *= static_cast<unsigned long long>(k) + 2;
    for (std::uint32_t i2 = o.I;; i2 = (i2 - 1) & o.I) {
      unsigned long long term = 1;
      for (int i = 0; i < std::popcount(o.I & ~i2); ++i) term *= 2;
      for (int i = 0; i < std::popcount(i2); ++i) term *= static_cast<unsigned long long>(k);
      rhs += term;
      if (i2 == 0) break;
    }
    if (lhs != rhs) return {rec.name, false, "counting identity fails"};
  }
  // naturality on the generating morphisms
  auto H = h_diagram(m, k);
  for (int g : cb.generators()) {
    int src = cb.cat.mors[static_cast<std::size_t>(g)].src;
    int dst = cb.cat.mors[static_cast<std::size_t>(g)].dst;
    for (Idx s = 0; s < H.prods[static_cast<std::size_t>(src)].prod->counts[static_cast<std::size_t>(k)]; ++s) {
      auto a1 = alpha_decompose(cb.objects[static_cast<std::size_t>(src)], k, H.zeros(src, k, s));
      Idx s2 = H.dia.arrow[static_cast<std::size_t>(g)].at[static_cast<std::size_t>(k)][s];
      auto a2 = alpha_decompose(cb.objects[static_cast<std::size_t>(dst)], k, H.zeros(dst, k, s2));
      if (a1.core.I != a2.core.I || a1.core.S != a2.core.S || a1.tau != a2.tau)
        return {rec.name, false, "alpha is not natural on a generator"};
    }
  }
  return rec;
}

CheckRecord split_check(int m, int k) {
  std::ostringstream name;
  name << "split m=" << m << " k=" << k;
  CheckRecord rec{name.str(), true, ""};
  auto H = h_diagram(m, k);
  CubeCategory cb = cube(m);
  for (std::size_t obj = 0; obj < cb.objects.size(); ++obj) {
    auto& P = H.dia.value[obj];
    for (Idx s = 0; s < P->counts[static_cast<std::size_t>(k)]; ++s) {
      auto z = H.zeros(static_cast<int>(obj), k, s);
      // coverage: every threshold 0..k-1 must occur among the z-1 values
      std::vector<char> cov(static_cast<std::size_t>(std::max(k, 0)), 0);
      for (int zz : z)
        if (map_kind(k, zz) == MapKind::threshold) cov[static_cast<std::size_t>(zz) - 1] = 1;
      bool nondeg_cov = std::all_of(cov.begin(), cov.end(), [](char c) { return c != 0; });
      bool nondeg_ez = !P->is_degenerate(k, s);
      if (nondeg_cov != nondeg_ez) return {rec.name, false, "coverage criterion disagrees with EZ"};
    }
  }
  return rec;
}

CofibrancyCertificate hm_certificate(int m, int k_max) {
  if (m < 1) throw precondition_error("hm_certificate: m >= 1 required");
  CofibrancyCertificate cert;
  cert.m = m;
  cert.k_max = k_max;
  cert.bounds_note = "exhaustive for dimensions k <= k_max only; no claim beyond the stated bounds";
  bool ok = true;
  for (int k = 0; k <= k_max; ++k) {
    cert.checks.push_back(decomposition_check(m, k));
    ok = ok && cert.checks.back().pass;
    cert.checks.push_back(split_check(m, k));
    ok = ok && cert.checks.back().pass;
  }
  cert.status = ok ? CertStatus::pass : CertStatus::fail;
  return cert;
}

CofibrancyCertificate gx_certificate(int m, std::size_t x_size) {
  if (m < 1 || x_size < 1) throw precondition_error("gx_certificate: m >= 1 and |X| >= 1 required");
  CofibrancyCertificate cert;
  cert.m = m;
  cert.k_max = 0;
  cert.bounds_note = "exhaustive for the given m and X; no claim beyond the stated bounds";
  FinSetPair pair;
  for (std::size_t i = 0; i < x_size; ++i) pair.y.push_back("x" + std::to_string(i));
  pair.in_x.assign(x_size, 1);
  auto G = g_diagram(m, pair);
  auto& cb = G.base;
  std::uint32_t full = m >= 2 ? (((1u << (m - 1)) - 1u) << 1) : 0u;
  auto sigma = [&](std::uint32_t I) { return cb.object_index({I, full}); };
  // arrow of G along the cube morphism from -> to, as a map G(to) -> G(from)
  auto arrow = [&](int from, int to) -> const std::vector<Idx>& {
    return G.dia.arrow[static_cast<std::size_t>(cb.mor_index(from, to))];
  };

  // (a) retraction identities and alpha naturality
  {
    auto r = pm_retraction(m);
    cert.checks.push_back({"retraction", r.pass, r.detail});
  }

  // (b) G(alpha) componentwise bijective
  {
    CheckRecord rec{"alpha_components", true, ""};
    for (std::size_t i = 0; i < cb.objects.size() && rec.pass; ++i) {
      int to = sigma(pm_retract(m, cb.objects[i]));
      auto& a = arrow(static_cast<int>(i), to);
      if (a.size() != G.dia.size[i]) {
        rec = {rec.name, false, "G(alpha) component sizes differ"};
        break;
      }
      std::vector<char> hit(G.dia.size[i], 0);
      for (Idx e : a) {
        if (hit[e]) {
          rec = {rec.name, false, "G(alpha) component not injective"};
          break;
        }
        hit[e] = 1;
      }
    }
    cert.checks.push_back(rec);
  }

  // (c) pullback squares over sigma
  {
    CheckRecord rec{"pullback_squares", true, ""};
    for (std::uint32_t I = 0; I <= full && rec.pass; ++I) {
      if (I & ~full) continue;
      for (int j0 = 1; j0 < m && rec.pass; ++j0) {
        if (I & (1u << j0)) continue;
        for (int j1 = j0 + 1; j1 < m && rec.pass; ++j1) {
          if (I & (1u << j1)) continue;
          int oI = sigma(I), o0 = sigma(I | (1u << j0)), o1 = sigma(I | (1u << j1)),
              o01 = sigma(I | (1u << j0) | (1u << j1));
          auto& g0 = arrow(o0, o01);
          auto& g1 = arrow(o1, o01);
          auto& p0 = arrow(oI, o0);
          auto& p1 = arrow(oI, o1);
          std::size_t matched = 0;
          for (Idx u = 0; u < p0.size(); ++u)
            for (Idx v = 0; v < p1.size(); ++v)
              if (p0[u] == p1[v]) ++matched;
          std::set<std::pair<Idx, Idx>> img;
          for (Idx w = 0; w < g0.size(); ++w) {
            if (p0[g0[w]] != p1[g1[w]]) {
              rec = {rec.name, false, "pullback cone does not commute"};
              break;
            }
            img.insert({g0[w], g1[w]});
          }
          if (rec.pass && (img.size() != g0.size() || img.size() != matched))
            rec = {rec.name, false, "square is not a pullback"};
        }
      }
    }
    cert.checks.push_back(rec);
  }

  // (d) colim_{I strictly below J} G(sigma J) -> G(sigma I), two computations
  {
    CheckRecord rec{"colim_monomorphism", true, ""};
    for (std::uint32_t I = 0; I < full && rec.pass; ++I) {
      if (I & ~full) continue;
      std::vector<std::uint32_t> supers;
      for (std::uint32_t J = 0; J <= full; ++J)
        if (!(J & ~full) && (I & ~J) == 0 && J != I) supers.push_back(J);
      // full poset colimit
      SetDiagram D;
      D.shape.n_objects = static_cast<int>(supers.size());
      std::vector<std::vector<int>> midx(supers.size(), std::vector<int>(supers.size(), -1));
      for (std::size_t a = 0; a < supers.size(); ++a) {
        D.size.push_back(G.dia.size[static_cast<std::size_t>(sigma(supers[a]))]);
        for (std::size_t b = 0; b < supers.size(); ++b)
          if ((supers[b] & ~supers[a]) == 0) {  // J_b subset J_a: map G(sJ_a) -> G(sJ_b)
            midx[a][b] = static_cast<int>(D.shape.mors.size());
            D.shape.mors.push_back({static_cast<int>(a), static_cast<int>(b)});
            D.arrow.push_back(arrow(sigma(supers[b]), sigma(supers[a])));
          }
      }
      D.shape.identity.resize(supers.size());
      for (std::size_t a = 0; a < supers.size(); ++a) D.shape.identity[a] = midx[a][a];
      D.shape.comp.assign(D.shape.mors.size(), {});
      for (int g = 0; g < D.shape.n_mors(); ++g)
        for (int f = 0; f < D.shape.n_mors(); ++f)
          if (D.shape.composable(g, f))
            D.shape.set_comp(g, f,
                midx[static_cast<std::size_t>(D.shape.mors[static_cast<std::size_t>(f)].src)]
                    [static_cast<std::size_t>(D.shape.mors[static_cast<std::size_t>(g)].dst)]);
      D.shape.validate();
      D.validate();
      auto col = set_colimit(D);
      // induced map to G(sigma I): must be well-defined and injective
      std::vector<Idx> to_gi(col.size, static_cast<Idx>(-1));
      for (std::size_t a = 0; a < supers.size() && rec.pass; ++a) {
        auto& pa = arrow(sigma(I), sigma(supers[a]));
        for (Idx e = 0; e < D.size[a]; ++e) {
          Idx c = col.legs[a][e];
          if (to_gi[c] == static_cast<Idx>(-1)) to_gi[c] = pa[e];
          else if (to_gi[c] != pa[e]) {
            rec = {rec.name, false, "map to G(sigma I) not well-defined on the colimit"};
            break;
          }
        }
      }
      if (rec.pass) {
        std::set<Idx> img(to_gi.begin(), to_gi.end());
        if (img.size() != col.size) rec = {rec.name, false, "colimit map into G(sigma I) not injective"};
      }
      // two-step coequalizer over P^{1,2}
      if (rec.pass) {
        int ni = std::popcount(I);
        std::vector<std::uint32_t> lvl1, lvl2;
        for (auto J : supers) {
          if (std::popcount(J) == ni + 1) lvl1.push_back(J);
          if (std::popcount(J) == ni + 2) lvl2.push_back(J);
        }
        std::vector<std::size_t> base(lvl1.size() + 1, 0);
        for (std::size_t a = 0; a < lvl1.size(); ++a)
          base[a + 1] = base[a] + G.dia.size[static_cast<std::size_t>(sigma(lvl1[a]))];
        UnionFind uf(base.back());
        auto at1 = [&](std::uint32_t J) {
          return static_cast<std::size_t>(std::find(lvl1.begin(), lvl1.end(), J) - lvl1.begin());
        };
        for (auto J : lvl2) {
          auto extra = bits_of(J & ~I);
          for (std::size_t p = 0; p < extra.size(); ++p)
            for (std::size_t q = p + 1; q < extra.size(); ++q) {
              std::uint32_t J0 = J & ~(1u << extra[q]);  // drop one of the two new bits
              std::uint32_t J1 = J & ~(1u << extra[p]);
              auto& a0 = arrow(sigma(J0), sigma(J));
              auto& a1 = arrow(sigma(J1), sigma(J));
              for (Idx e = 0; e < G.dia.size[static_cast<std::size_t>(sigma(J))]; ++e)
                uf.unite(static_cast<int>(base[at1(J0)] + a0[e]), static_cast<int>(base[at1(J1)] + a1[e]));
            }
        }
        // classes of the coequalizer vs classes of the full colimit
        std::map<int, Idx> cls;
        std::vector<char> seen_col(col.size, 0);
        for (std::size_t a = 0; a < lvl1.size() && rec.pass; ++a) {
          std::size_t da = static_cast<std::size_t>(
              std::find(supers.begin(), supers.end(), lvl1[a]) - supers.begin());
          for (Idx e = 0; e < G.dia.size[static_cast<std::size_t>(sigma(lvl1[a]))]; ++e) {
            int root = uf.find(static_cast<int>(base[a] + e));
            Idx c = col.legs[da][e];
            auto it = cls.find(root);
            if (it == cls.end()) {
              if (seen_col[c]) {
                rec = {rec.name, false, "coequalizer is coarser than the poset colimit"};
                break;
              }
              cls[root] = c;
              seen_col[c] = 1;
            } else if (it->second != c) {
              rec = {rec.name, false, "coequalizer classes do not match the poset colimit"};
              break;
            }
          }
        }
        if (rec.pass && cls.size() != col.size)
          rec = {rec.name, false, "coequalizer misses colimit classes"};
      }
    }
    cert.checks.push_back(rec);
  }

  bool ok = true;
  for (auto& c : cert.checks) ok = ok && c.pass;
  cert.status = ok ? CertStatus::pass : CertStatus::fail;
  return cert;
}

}  // namespace nck
