#include "nck/ecat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace nck {

std::vector<int> CubePower::zeros(int level, Idx s) const {
  auto t = p.decode(level, s);
  std::vector<int> z(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) z[i] = level + 1 - static_cast<int>(t[i]);
  return z;
}

Idx CubePower::from_zeros(int level, const std::vector<int>& z) const {
  std::vector<Idx> t(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) t[i] = static_cast<Idx>(level + 1 - z[i]);
  return p.encode(level, t);
}

CubePower cube_power(std::vector<int> coords, int trunc) {
  CubePower cp;
  cp.coords = std::move(coords);
  static thread_local std::map<int, SSet> d1_cache;
  auto it = d1_cache.find(trunc);
  if (it == d1_cache.end()) it = d1_cache.emplace(trunc, standard_simplex(1, trunc)).first;
  cp.p = multi_product(std::vector<SSet>(cp.coords.size(), it->second), trunc);
  return cp;
}

Idx EnrichedCategory::identity_at_level(int i, int level) const {
  Idx v = id_vertex[static_cast<std::size_t>(i)];
  for (int l = 0; l < level; ++l) v = hom[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]->degeneracy(l, v, 0);
  return v;
}

void EnrichedCategory::validate() const {
  // units
  for (auto& [key, c] : comp) {
    auto [i, j, k] = key;
    if (i == j) {
      for (int n = 0; n <= trunc; ++n) {
        Idx idn = identity_at_level(i, n);
        for (Idx x = 0; x < hom[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]->counts[n]; ++x)
          if (c.map.at[n][c.prod.encode(n, {idn, x})] != x)
            throw std::invalid_argument("enriched category: left unit");
      }
    }
    if (j == k) {
      for (int n = 0; n <= trunc; ++n) {
        Idx idn = identity_at_level(j, n);
        for (Idx x = 0; x < hom[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]->counts[n]; ++x)
          if (c.map.at[n][c.prod.encode(n, {x, idn})] != x)
            throw std::invalid_argument("enriched category: right unit");
      }
    }
  }
  // associativity
  for (int i = 0; i < n_objects; ++i)
    for (int j = 0; j < n_objects; ++j)
      for (int k = 0; k < n_objects; ++k)
        for (int l = 0; l < n_objects; ++l) {
          auto a = comp.find({i, j, k});
          auto b = comp.find({i, k, l});
          auto c = comp.find({j, k, l});
          auto d = comp.find({i, j, l});
          if (a == comp.end() || b == comp.end() || c == comp.end() || d == comp.end()) continue;
          for (int n = 0; n <= trunc; ++n)
            for (Idx x = 0; x < hom[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]->counts[n]; ++x)
              for (Idx y = 0; y < hom[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]->counts[n]; ++y)
                for (Idx z = 0; z < hom[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)]->counts[n]; ++z) {
                  Idx xy = a->second.map.at[n][a->second.prod.encode(n, {x, y})];
                  Idx yz = c->second.map.at[n][c->second.prod.encode(n, {y, z})];
                  if (b->second.map.at[n][b->second.prod.encode(n, {xy, z})] !=
                      d->second.map.at[n][d->second.prod.encode(n, {x, yz})])
                    throw std::invalid_argument("enriched category: associativity");
                }
        }
}

ChCat ch_standard(int m, int trunc) {
  ChCat ch;
  auto& C = ch.C;
  C.n_objects = m + 1;
  C.trunc = trunc;
  C.hom.assign(static_cast<std::size_t>(m) + 1, {});
  ch.homp.assign(static_cast<std::size_t>(m) + 1, {});
  auto empty = discrete_sset(0, trunc);
  for (int i = 0; i <= m; ++i) {
    C.hom[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(m) + 1);
    ch.homp[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) {
      if (j < i) {
        C.hom[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = empty;
        continue;
      }
      std::vector<int> cs;
      for (int w = i + 1; w < j; ++w) cs.push_back(w);
      ch.homp[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = cube_power(cs, trunc);
      C.hom[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          ch.homp[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].p.prod;
    }
  }
  C.id_vertex.assign(static_cast<std::size_t>(m) + 1, 0);
  for (int i = 0; i <= m; ++i)
    for (int j = i; j <= m; ++j)
      for (int k = j; k <= m; ++k) {
        EnrichedCategory::Comp c;
        c.prod = product(C.hom[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                         C.hom[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)], trunc);
        c.map = SimplicialMap{c.prod.prod, C.hom[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)], {}};
        c.map.at.resize(static_cast<std::size_t>(trunc) + 1);
        auto& pij = ch.homp[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        auto& pjk = ch.homp[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        auto& pik = ch.homp[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        for (int n = 0; n <= trunc; ++n) {
          c.map.at[n].resize(c.prod.prod->counts[n]);
          for (Idx s = 0; s < c.map.at[n].size(); ++s) {
            auto pr = c.prod.decode(n, s);
            auto zu = pij.zeros(n, pr[0]);
            auto zv = pjk.zeros(n, pr[1]);
            std::vector<int> zt;
            zt.reserve(pik.coords.size());
            for (int w : pik.coords) {
              if (w < j) zt.push_back(zu[static_cast<std::size_t>(w - i - 1)]);
              else if (w == j) zt.push_back(0);  // constant 1 at the middle object
              else zt.push_back(zv[static_cast<std::size_t>(w - j - 1)]);
            }
            c.map.at[n][s] = pik.from_zeros(n, zt);
          }
        }
        C.comp[{i, j, k}] = std::move(c);
      }
  C.validate();
  return ch;
}

SimplicialMap ch_coface_hom(const ChCat& small, const ChCat& big, int ell, int i, int j) {
  auto d = [&](int x) { return x + (x >= ell ? 1 : 0); };
  auto& ps = small.homp[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  auto& pb = big.homp[static_cast<std::size_t>(d(i))][static_cast<std::size_t>(d(j))];
  int trunc = small.C.trunc;
  SimplicialMap f{ps.p.prod, pb.p.prod, {}};
  f.at.resize(static_cast<std::size_t>(trunc) + 1);
  for (int n = 0; n <= trunc; ++n) {
    f.at[n].resize(ps.p.prod->counts[n]);
    for (Idx s = 0; s < f.at[n].size(); ++s) {
      auto zs = ps.zeros(n, s);
      std::vector<int> zt;
      zt.reserve(pb.coords.size());
      for (int w : pb.coords) {
        if (w == ell) {
          zt.push_back(n + 1);  // constant 0 at the inserted vertex
          continue;
        }
        int w0 = w - (w > ell ? 1 : 0);
        zt.push_back(zs[static_cast<std::size_t>(w0 - i - 1)]);
      }
      f.at[n][s] = pb.from_zeros(n, zt);
    }
  }
  return f;
}

CubePower ch_hom_necklace(const Necklace& nk, int trunc) {
  return cube_power(nk.interior(), trunc);
}

ChHom ch_hom(const SSet& K, Idx a, Idx b, int trunc, bool tnd, int max_beads, int max_bead_dim) {
  ChHom out;
  out.necs = tnd ? tnd_necklaces(K, a, b) : bounded_necklaces(K, a, b, max_beads, max_bead_dim);
  out.dia.shape = out.necs.cat;
  std::vector<std::vector<int>> coord_pos;  // per object: vertex -> coordinate position or -1
  for (auto& T : out.necs.objects) {
    out.homs.push_back(ch_hom_necklace(T.nk, trunc));
    out.dia.value.push_back(out.homs.back().p.prod);
    std::vector<int> cp(static_cast<std::size_t>(T.nk.n_vertices()), -1);
    auto ints = T.nk.interior();
    for (std::size_t w = 0; w < ints.size(); ++w) cp[static_cast<std::size_t>(ints[w])] = static_cast<int>(w);
    coord_pos.push_back(std::move(cp));
  }
  for (auto& mor : out.necs.mors) {
    auto& U = out.necs.objects[static_cast<std::size_t>(mor.src)];
    auto& T = out.necs.objects[static_cast<std::size_t>(mor.dst)];
    auto& pu = out.homs[static_cast<std::size_t>(mor.src)];
    auto& pt = out.homs[static_cast<std::size_t>(mor.dst)];
    auto& cpu = coord_pos[static_cast<std::size_t>(mor.src)];
    (void)T;
    SimplicialMap f{pu.p.prod, pt.p.prod, {}};
    f.at.resize(static_cast<std::size_t>(trunc) + 1);
    // preimages of each target coordinate under the vertex map
    std::vector<std::vector<int>> pre(pt.coords.size());
    for (std::size_t w = 0; w < pt.coords.size(); ++w)
      for (Idx v = 0; v < U.nss->counts[0]; ++v)
        if (mor.g.at[0][v] == static_cast<Idx>(pt.coords[w])) pre[w].push_back(static_cast<int>(v));
    for (int n = 0; n <= trunc; ++n) {
      f.at[n].resize(pu.p.prod->counts[n]);
      for (Idx s = 0; s < f.at[n].size(); ++s) {
        auto zu = pu.zeros(n, s);
        std::vector<int> zt(pt.coords.size());
        for (std::size_t w = 0; w < pt.coords.size(); ++w) {
          int z = n + 2;
          for (int v : pre[w]) {
            int pos = cpu[static_cast<std::size_t>(v)];
            z = std::min(z, pos < 0 ? 0 : zu[static_cast<std::size_t>(pos)]);
          }
          zt[w] = (z == n + 2) ? n + 1 : z;
        }
        f.at[n][s] = pt.from_zeros(n, zt);
      }
    }
    out.dia.arrow.push_back(std::move(f));
  }
  out.dia.validate();
  out.colim = colimit(out.dia, trunc);
  return out;
}

SigmaCat sigma_m(const SSet& X, int m, int trunc) {
  SigmaCat sc;
  auto& C = sc.C;
  C.n_objects = m + 1;
  C.trunc = trunc;
  auto empty = discrete_sset(0, trunc);
  C.hom.assign(static_cast<std::size_t>(m) + 1, {});
  sc.homp.assign(static_cast<std::size_t>(m) + 1, {});
  for (int i = 0; i <= m; ++i) {
    C.hom[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(m) + 1, empty);
    sc.homp[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(m) + 1);
    for (int j = i; j <= m; ++j) {
      sc.homp[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          multi_product(std::vector<SSet>(static_cast<std::size_t>(j - i), X), trunc);
      C.hom[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          sc.homp[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].prod;
    }
  }
  C.id_vertex.assign(static_cast<std::size_t>(m) + 1, 0);
  for (int i = 0; i <= m; ++i)
    for (int j = i; j <= m; ++j)
      for (int k = j; k <= m; ++k) {
        EnrichedCategory::Comp c;
        c.prod = product(C.hom[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                         C.hom[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)], trunc);
        c.map = SimplicialMap{c.prod.prod, C.hom[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)], {}};
        c.map.at.resize(static_cast<std::size_t>(trunc) + 1);
        auto& pij = sc.homp[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        auto& pjk = sc.homp[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        auto& pik = sc.homp[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        for (int n = 0; n <= trunc; ++n) {
          c.map.at[n].resize(c.prod.prod->counts[n]);
          for (Idx s = 0; s < c.map.at[n].size(); ++s) {
            auto pr = c.prod.decode(n, s);
            auto tu = pij.decode(n, pr[0]);
            auto tv = pjk.decode(n, pr[1]);
            tu.insert(tu.end(), tv.begin(), tv.end());
            c.map.at[n][s] = pik.encode(n, tu);
          }
        }
        C.comp[{i, j, k}] = std::move(c);
      }
  C.validate();
  return sc;
}

SSet hom_CP_level(int m, const FinSetPair& pair, int i, int j, int trunc) {
  if (i < 0 || j > m) throw std::invalid_argument("hom_CP_level: objects out of range");
  if (j < i) return discrete_sset(0, trunc);
  if (j == i) return discrete_sset(1, trunc);
  if (i == 0 && j == m) {
    auto H = h_diagram(m, trunc);
    auto G = g_diagram(m, pair);
    return weighted_colimit(H.dia, iota(G.dia, trunc), trunc).object;
  }
  auto pl = p_level(m, pair);
  return ch_hom(pl.P, pl.vertex[static_cast<std::size_t>(i)], pl.vertex[static_cast<std::size_t>(j)], trunc)
      .colim.object;
}

namespace {

// interval position containing spine edge (p-1, p) of Delta[m]
int containing_interval(const std::vector<int>& joints, int p) {
  for (std::size_t i = 0; i + 1 < joints.size(); ++i)
    if (joints[i] < p && p <= joints[i + 1]) return static_cast<int>(i);
  throw std::logic_error("containing_interval");
}

}  // namespace

SigmaComparison comparison_to_sigma(int m, std::size_t x_size, int trunc) {
  SigmaComparison out;
  FinSetPair pair;
  for (std::size_t i = 0; i < x_size; ++i) pair.y.push_back("x" + std::to_string(i));
  pair.in_x.assign(x_size, 1);

  auto H = h_diagram(m, trunc);
  auto G = g_diagram(m, pair);
  auto F = iota(G.dia, trunc);
  auto W = weighted_colimit(H.dia, F, trunc);
  out.hom = W.object;
  out.xm = 1;
  for (int p = 0; p < m; ++p) out.xm *= x_size;

  auto xe = pair.x_elems();
  auto joints_of = [&](int obj) {
    auto& o = G.base.objects[static_cast<std::size_t>(obj)];
    std::vector<int> js{0};
    for (int s = 1; s < m; ++s)
      if ((o.S & ~o.I) & (1u << s)) js.push_back(s);
    js.push_back(m);
    return js;
  };
  auto gamma = [&](int obj, Idx e) -> std::size_t {
    auto js = joints_of(obj);
    std::vector<Idx> vals;
    if (obj == G.top) {
      vals.assign(static_cast<std::size_t>(m), static_cast<Idx>(xe[e]));
    } else {
      auto t = G.tuple(obj, e);
      for (int p = 1; p <= m; ++p) vals.push_back(t[static_cast<std::size_t>(containing_interval(js, p))]);
    }
    std::size_t r = 0;
    for (Idx v : vals) r = r * x_size + v;
    return r;
  };

  // cone property
  for (std::size_t f = 0; f < G.dia.arrow.size(); ++f) {
    int a = G.base.cat.mors[f].src, b = G.base.cat.mors[f].dst;
    for (Idx e = 0; e < G.dia.size[static_cast<std::size_t>(b)]; ++e)
      if (gamma(a, G.dia.arrow[f][e]) != gamma(b, e)) {
        out.detail = "cone property fails";
        return out;
      }
  }

  // colim G ~ X^m
  auto sc = set_colimit(G.dia);
  out.colim_g = sc.size;
  {
    std::vector<std::size_t> val(sc.size, static_cast<std::size_t>(-1));
    std::vector<char> hit(out.xm, 0);
    for (std::size_t a = 0; a < G.dia.size.size(); ++a)
      for (Idx e = 0; e < G.dia.size[a]; ++e) {
        std::size_t g = gamma(static_cast<int>(a), e);
        Idx c = sc.legs[a][e];
        if (val[c] == static_cast<std::size_t>(-1)) val[c] = g;
        else if (val[c] != g) {
          out.detail = "gamma does not descend to colim G";
          return out;
        }
      }
    if (sc.size != out.xm) {
      out.detail = "colim G has wrong size";
      return out;
    }
    for (auto v : val) {
      if (v == static_cast<std::size_t>(-1) || hit[v]) {
        out.detail = "colim G -> X^m not bijective";
        return out;
      }
      hit[v] = 1;
    }
  }

  // comparison map on the weighted colimit, induced by H -> Delta[0]
  std::vector<std::vector<std::size_t>> cmp(static_cast<std::size_t>(trunc) + 1);
  for (int n = 0; n <= trunc; ++n) cmp[n].assign(W.object->counts[n], static_cast<std::size_t>(-1));
  for (std::size_t a = 0; a < G.dia.size.size(); ++a)
    for (int n = 0; n <= trunc; ++n)
      for (Idx s = 0; s < W.prods[a].prod->counts[n]; ++s) {
        Idx e = W.prods[a].decode(n, s)[0];  // discrete factor
        std::size_t g = gamma(static_cast<int>(a), e);
        Idx c = W.legs[a].at[n][s];
        if (cmp[n][c] == static_cast<std::size_t>(-1)) cmp[n][c] = g;
        else if (cmp[n][c] != g) {
          out.detail = "comparison map not well-defined";
          return out;
        }
      }

  // retraction identity on the spine leg
  std::uint32_t full = m >= 2 ? (((1u << (m - 1)) - 1u) << 1) : 0u;
  int sp = G.base.object_index({0u, full});
  for (Idx e = 0; e < G.dia.size[static_cast<std::size_t>(sp)]; ++e) {
    if (gamma(sp, e) != static_cast<std::size_t>(e)) {
      out.detail = "spine leg is not the canonical isomorphism";
      return out;
    }
    Idx c = W.legs[static_cast<std::size_t>(sp)].at[0][W.prods[static_cast<std::size_t>(sp)].encode(0, {e, 0})];
    if (cmp[0][c] != static_cast<std::size_t>(e)) {
      out.detail = "retraction identity fails";
      return out;
    }
  }
  out.pass = true;
  out.detail = "comparison restricts to the canonical isomorphism on the spine leg";
  return out;
}

StrictNerve strict_nerve(const EnrichedCategory& C, int mmax, int trunc) {
  StrictNerve N;
  int nob = C.n_objects;
  // tuple bookkeeping per nerve level
  std::vector<std::vector<std::vector<int>>> tuples(static_cast<std::size_t>(mmax) + 1);
  std::vector<std::vector<ProductSSet>> prods(static_cast<std::size_t>(mmax) + 1);
  std::vector<Coproduct> cps(static_cast<std::size_t>(mmax) + 1);
  std::vector<std::map<std::vector<int>, int>> tindex(static_cast<std::size_t>(mmax) + 1);

  for (int n = 0; n <= mmax; ++n) {
    std::vector<int> t(static_cast<std::size_t>(n) + 1, 0);
    std::vector<SSet> parts;
    std::function<void(int)> gen = [&](int pos) {
      if (pos == n + 1) {
        std::vector<SSet> fs;
        for (int r = 0; r < n; ++r)
          fs.push_back(C.hom[static_cast<std::size_t>(t[static_cast<std::size_t>(r)])]
                            [static_cast<std::size_t>(t[static_cast<std::size_t>(r) + 1])]);
        tindex[n][t] = static_cast<int>(tuples[n].size());
        tuples[n].push_back(t);
        prods[n].push_back(multi_product(fs, trunc));
        parts.push_back(prods[n].back().prod);
        return;
      }
      for (int c = 0; c < nob; ++c) {
        t[static_cast<std::size_t>(pos)] = c;
        gen(pos + 1);
      }
    };
    gen(0);
    cps[n] = coproduct(parts, trunc);
    N.level.push_back(cps[n].sum);
  }

  N.face.resize(static_cast<std::size_t>(mmax) + 1);
  N.degen.resize(static_cast<std::size_t>(mmax) + 1);
  for (int n = 1; n <= mmax; ++n)
    for (int i = 0; i <= n; ++i) {
      SimplicialMap f{N.level[static_cast<std::size_t>(n)], N.level[static_cast<std::size_t>(n) - 1], {}};
      f.at.resize(static_cast<std::size_t>(trunc) + 1);
      for (int k = 0; k <= trunc; ++k) f.at[k].resize(N.level[static_cast<std::size_t>(n)]->counts[k]);
      for (std::size_t tt = 0; tt < tuples[n].size(); ++tt) {
        auto t = tuples[n][tt];
        auto td = t;
        td.erase(td.begin() + i);
        int tgt = tindex[n - 1].at(td);
        for (int k = 0; k <= trunc; ++k)
          for (Idx s = 0; s < prods[n][tt].prod->counts[k]; ++s) {
            auto xs = prods[n][tt].decode(k, s);
            std::vector<Idx> ys;
            if (i == 0) ys.assign(xs.begin() + 1, xs.end());
            else if (i == n) ys.assign(xs.begin(), xs.end() - 1);
            else {
              ys.assign(xs.begin(), xs.end());
              auto& cm = C.comp_at(t[static_cast<std::size_t>(i) - 1], t[static_cast<std::size_t>(i)],
                                   t[static_cast<std::size_t>(i) + 1]);
              Idx comb = cm.map.at[k][cm.prod.encode(k, {xs[static_cast<std::size_t>(i) - 1],
                                                         xs[static_cast<std::size_t>(i)]})];
              ys.erase(ys.begin() + i);
              ys[static_cast<std::size_t>(i) - 1] = comb;
            }
            f.at[k][cps[n].in[tt].at[k][s]] =
                cps[n - 1].in[static_cast<std::size_t>(tgt)].at[k][prods[n - 1][static_cast<std::size_t>(tgt)].encode(k, ys)];
          }
      }
      N.face[static_cast<std::size_t>(n)].push_back(std::move(f));
    }
  for (int n = 0; n < mmax; ++n)
    for (int i = 0; i <= n; ++i) {
      SimplicialMap f{N.level[static_cast<std::size_t>(n)], N.level[static_cast<std::size_t>(n) + 1], {}};
      f.at.resize(static_cast<std::size_t>(trunc) + 1);
      for (int k = 0; k <= trunc; ++k) f.at[k].resize(N.level[static_cast<std::size_t>(n)]->counts[k]);
      for (std::size_t tt = 0; tt < tuples[n].size(); ++tt) {
        auto t = tuples[n][tt];
        auto td = t;
        td.insert(td.begin() + i, t[static_cast<std::size_t>(i)]);
        int tgt = tindex[n + 1].at(td);
        for (int k = 0; k <= trunc; ++k)
          for (Idx s = 0; s < prods[n][tt].prod->counts[k]; ++s) {
            auto xs = prods[n][tt].decode(k, s);
            std::vector<Idx> ys(xs.begin(), xs.end());
            ys.insert(ys.begin() + i, C.identity_at_level(t[static_cast<std::size_t>(i)], k));
            f.at[k][cps[n].in[tt].at[k][s]] =
                cps[n + 1].in[static_cast<std::size_t>(tgt)].at[k][prods[n + 1][static_cast<std::size_t>(tgt)].encode(k, ys)];
          }
      }
      N.degen[static_cast<std::size_t>(n)].push_back(std::move(f));
    }
  return N;
}

bool segal_check(const StrictNerve& N, int n) {
  if (n < 2 || n >= static_cast<int>(N.level.size())) return false;
  int trunc = N.level[0]->trunc;
  // spine edge maps level n -> level 1
  std::vector<SimplicialMap> edge;
  for (int r = 1; r <= n; ++r) {
    SimplicialMap e = identity_map(N.level[static_cast<std::size_t>(n)]);
    int lvl = n;
    for (int v = n; v > r; --v) {
      e = compose(N.face[static_cast<std::size_t>(lvl)][static_cast<std::size_t>(v)], e);
      --lvl;
    }
    for (int v = 0; v < r - 1; ++v) {
      e = compose(N.face[static_cast<std::size_t>(lvl)][0], e);
      --lvl;
    }
    edge.push_back(std::move(e));
  }
  auto& src = N.face[1][1];
  auto& tgt = N.face[1][0];
  for (int k = 0; k <= trunc; ++k) {
    // count matching tuples in the iterated fiber product
    std::size_t tuples = 0;
    std::size_t e1 = N.level[1]->counts[k];
    std::vector<std::vector<Idx>> by_src(N.level[0]->counts[k]);
    for (Idx x = 0; x < e1; ++x) by_src[src.at[k][x]].push_back(x);
    // dynamic count: chains of length n
    std::map<std::vector<Idx>, char> seen;
    std::function<std::size_t(int, Idx)> cnt = [&](int left, Idx at) -> std::size_t {
      if (left == 0) return 1;
      std::size_t tot = 0;
      for (Idx x : by_src[at]) tot += cnt(left - 1, tgt.at[k][x]);
      return tot;
    };
    for (Idx v = 0; v < N.level[0]->counts[k]; ++v) tuples += cnt(n, v);
    if (tuples != N.level[static_cast<std::size_t>(n)]->counts[k]) return false;
    for (Idx s = 0; s < N.level[static_cast<std::size_t>(n)]->counts[k]; ++s) {
      std::vector<Idx> key;
      for (auto& e : edge) key.push_back(e.at[k][s]);
      if (seen.count(key)) return false;
      seen[key] = 1;
    }
  }
  return true;
}

HcLevel hc_nerve_level(const EnrichedCategory& C, int m, int trunc, std::size_t limit) {
  auto ch = ch_standard(m, trunc);
  HcLevel out;
  std::vector<int> t(static_cast<std::size_t>(m) + 1, 0);
  std::function<void(int)> gen = [&](int pos) {
    if (pos < static_cast<int>(t.size())) {
      for (int c = 0; c < C.n_objects; ++c) {
        t[static_cast<std::size_t>(pos)] = c;
        gen(pos + 1);
      }
      return;
    }
    // candidate hom maps per pair i < j
    std::vector<std::vector<std::vector<SimplicialMap>>> cand(static_cast<std::size_t>(m) + 1);
    std::size_t total = 1;
    for (int i = 0; i <= m; ++i) {
      cand[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(m) + 1);
      for (int j = i + 1; j <= m; ++j) {
        cand[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = enumerate_maps(
            ch.C.hom[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
            C.hom[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])]
                 [static_cast<std::size_t>(t[static_cast<std::size_t>(j)])]);
        total *= std::max<std::size_t>(1, cand[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].size());
        if (cand[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].empty()) total = 0;
        if (total > limit) throw resource_limit_error("hc_nerve_level: search too large");
      }
    }
    if (total == 0) return;
    // pick one candidate per pair and check the composition squares
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) slots.push_back({i, j});
    std::vector<std::size_t> pick(slots.size(), 0);
    std::function<void(std::size_t)> walk = [&](std::size_t k) {
      if (k == slots.size()) {
        for (int i = 0; i <= m; ++i)
          for (int j = i + 1; j <= m; ++j)
            for (int l = j + 1; l <= m; ++l) {
              auto& Fij = cand[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                              [pick[static_cast<std::size_t>(std::find(slots.begin(), slots.end(), std::make_pair(i, j)) - slots.begin())]];
              auto& Fjl = cand[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)]
                              [pick[static_cast<std::size_t>(std::find(slots.begin(), slots.end(), std::make_pair(j, l)) - slots.begin())]];
              auto& Fil = cand[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)]
                              [pick[static_cast<std::size_t>(std::find(slots.begin(), slots.end(), std::make_pair(i, l)) - slots.begin())]];
              auto& cch = ch.C.comp_at(i, j, l);
              auto& cC = C.comp_at(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)],
                                   t[static_cast<std::size_t>(l)]);
              for (int n = 0; n <= trunc; ++n)
                for (Idx s = 0; s < cch.prod.prod->counts[n]; ++s) {
                  auto pr = cch.prod.decode(n, s);
                  Idx lhs = Fil.at[n][cch.map.at[n][s]];
                  Idx rhs = cC.map.at[n][cC.prod.encode(n, {Fij.at[n][pr[0]], Fjl.at[n][pr[1]]})];
                  if (lhs != rhs) return;
                }
            }
        ++out.count;
        out.object_tuples.push_back(t);
        return;
      }
      auto [i, j] = slots[k];
      for (std::size_t c = 0; c < cand[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].size(); ++c) {
        pick[k] = c;
        walk(k + 1);
      }
    };
    walk(0);
  };
  gen(0);
  return out;
}

}  // namespace nck
