#include "nck/necklace.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace nck {

std::vector<std::vector<char>> preceq(const SSet& K) {
  std::size_t n = K->counts[0];
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  for (std::size_t v = 0; v < n; ++v) r[v][v] = 1;
  if (K->trunc >= 1)
    for (Idx e = 0; e < K->counts[1]; ++e) r[K->face(1, e, 1)][K->face(1, e, 0)] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = 1;
  return r;
}

OrderClass classify_order(const SSet& K) {
  OrderClass out;
  auto r = preceq(K);
  bool antisym = true;
  for (std::size_t i = 0; i < r.size() && antisym; ++i)
    for (std::size_t j = 0; j < r.size() && antisym; ++j)
      if (i != j && r[i][j] && r[j][i]) antisym = false;

  bool inj_all = true;
  for (int n = 1; n <= K->trunc && inj_all; ++n) {
    std::map<std::vector<Idx>, Idx> seen;
    for (Idx s = 0; s < K->counts[n]; ++s)
      if (!seen.emplace(K->vertex_tuple(n, s), s).second) {
        inj_all = false;
        break;
      }
  }
  out.ordered = antisym && inj_all;

  bool one = antisym;
  for (int n = 1; n <= K->trunc && one; ++n) {
    std::map<std::vector<Idx>, Idx> spines;
    for (Idx s = 0; s < K->counts[n]; ++s) {
      if (K->is_degenerate(n, s)) continue;
      auto& vt = K->vertex_tuple(n, s);
      for (int i = 0; i + 1 <= n; ++i)
        if (vt[static_cast<std::size_t>(i)] == vt[static_cast<std::size_t>(i) + 1]) one = false;
      std::vector<Idx> sp;
      for (int i = 0; i + 1 <= n; ++i) sp.push_back(apply_monotone(K, n, s, {i, i + 1}));
      if (n >= 1 && !spines.emplace(std::move(sp), s).second) one = false;
    }
  }
  out.one_ordered = one;
  return out;
}

std::vector<int> Necklace::joints() const {
  std::vector<int> j;
  j.push_back(0);
  for (int i = 0; i < beads(); ++i) j.push_back(offsets[static_cast<std::size_t>(i)] + dims[static_cast<std::size_t>(i)]);
  if (j.size() >= 2 && j[0] == j[1]) j.erase(j.begin());  // point necklace
  return j;
}

std::vector<int> Necklace::interior() const {
  auto js = joints();
  std::vector<int> out;
  std::size_t k = 0;
  for (int v = 0; v < n_vertices(); ++v) {
    while (k < js.size() && js[k] < v) ++k;
    if (k >= js.size() || js[k] != v) out.push_back(v);
  }
  return out;
}

Necklace make_necklace(std::vector<int> dims) {
  if (dims.empty()) throw std::invalid_argument("necklace: no beads");
  if (dims.size() > 1)
    for (int m : dims)
      if (m <= 0) throw std::invalid_argument("necklace: zero bead in a wedge");
  Necklace nk;
  nk.dims = std::move(dims);
  int o = 0;
  for (int m : nk.dims) {
    nk.offsets.push_back(o);
    o += m;
  }
  return nk;
}

SSet necklace_sset(const Necklace& nk, int trunc) {
  int V = nk.n_vertices();
  // level-n simplices: weakly increasing tuples lying in a single bead, lex order
  std::vector<std::vector<std::vector<Idx>>> tup(static_cast<std::size_t>(trunc) + 1);
  std::vector<std::map<std::vector<Idx>, Idx>> index(static_cast<std::size_t>(trunc) + 1);
  auto fits = [&](const std::vector<Idx>& t) {
    for (int i = 0; i < nk.beads(); ++i) {
      Idx lo = static_cast<Idx>(nk.offsets[static_cast<std::size_t>(i)]);
      Idx hi = lo + static_cast<Idx>(nk.dims[static_cast<std::size_t>(i)]);
      if (t.front() >= lo && t.back() <= hi) return true;
    }
    return false;
  };
  for (int n = 0; n <= trunc; ++n) {
    std::vector<Idx> t(static_cast<std::size_t>(n) + 1, 0);
    std::function<void(int, Idx)> gen = [&](int pos, Idx lo) {
      if (pos == n + 1) {
        if (fits(t)) {
          index[n][t] = static_cast<Idx>(tup[n].size());
          tup[n].push_back(t);
        }
        return;
      }
      for (Idx v = lo; v < static_cast<Idx>(V); ++v) {
        t[static_cast<std::size_t>(pos)] = v;
        gen(pos + 1, v);
      }
    };
    gen(0, 0);
  }
  SSetData d;
  d.trunc = trunc;
  d.n_vertices = tup[0].size();
  d.faces.resize(static_cast<std::size_t>(trunc) + 1);
  d.degen.resize(static_cast<std::size_t>(trunc) + 1);
  for (int n = 1; n <= trunc; ++n) {
    d.faces[n].resize(tup[n].size());
    for (Idx s = 0; s < tup[n].size(); ++s)
      for (int i = 0; i <= n; ++i) {
        auto u = tup[n][s];
        u.erase(u.begin() + i);
        d.faces[n][s].push_back(index[n - 1].at(u));
      }
  }
  for (int n = 0; n < trunc; ++n) {
    d.degen[n].resize(tup[n].size());
    for (Idx s = 0; s < tup[n].size(); ++s)
      for (int i = 0; i <= n; ++i) {
        auto u = tup[n][s];
        u.insert(u.begin() + i, u[static_cast<std::size_t>(i)]);
        d.degen[n][s].push_back(index[n + 1].at(u));
      }
  }
  return finalize(std::move(d));
}

Idx ordered_index(const SSet& K, const std::vector<Idx>& tuple) {
  int n = static_cast<int>(tuple.size()) - 1;
  for (Idx s = 0; s < K->counts[n]; ++s)
    if (K->vertex_tuple(n, s) == tuple) return s;
  throw std::invalid_argument("ordered_index: tuple not found");
}

// the chain of bead simplices determines the whole necklace map
NecklaceMap necklace_from_beads(const SSet& K, std::vector<int> dims,
                                const std::vector<std::pair<int, Idx>>& beads, Idx a, Idx b) {
  NecklaceMap nm;
  nm.nk = make_necklace(std::move(dims));
  // necklace ssets depend only on the bead dimensions; share them
  static thread_local std::map<std::pair<std::vector<int>, int>, SSet> nss_cache;
  auto key = std::make_pair(nm.nk.dims, K->trunc);
  auto it = nss_cache.find(key);
  if (it == nss_cache.end()) it = nss_cache.emplace(key, necklace_sset(nm.nk, K->trunc)).first;
  nm.nss = it->second;
  nm.a = a;
  nm.b = b;
  nm.f = SimplicialMap{nm.nss, K, {}};
  nm.f.at.resize(static_cast<std::size_t>(K->trunc) + 1);
  for (int n = 0; n <= K->trunc; ++n) {
    nm.f.at[n].resize(nm.nss->counts[n]);
    for (Idx s = 0; s < nm.nss->counts[n]; ++s) {
      auto& t = nm.nss->vertex_tuple(n, s);
      int bead = -1;
      for (int i = 0; i < nm.nk.beads(); ++i) {
        Idx lo = static_cast<Idx>(nm.nk.offsets[static_cast<std::size_t>(i)]);
        Idx hi = lo + static_cast<Idx>(nm.nk.dims[static_cast<std::size_t>(i)]);
        if (t.front() >= lo && t.back() <= hi) {
          bead = i;
          break;
        }
      }
      std::vector<int> phi(t.size());
      for (std::size_t j = 0; j < t.size(); ++j)
        phi[j] = static_cast<int>(t[j]) - nm.nk.offsets[static_cast<std::size_t>(bead)];
      auto [lvl, sx] = beads[static_cast<std::size_t>(bead)];
      nm.f.at[n][s] = apply_monotone(K, lvl, sx, phi);
    }
  }
  return nm;
}

namespace {

bool object_less(const NecklaceMap& x, const NecklaceMap& y) {
  if (x.nk.dims != y.nk.dims) return x.nk.dims < y.nk.dims;
  return x.f.at < y.f.at;
}

void sort_objects(std::vector<NecklaceMap>& objs) {
  std::sort(objs.begin(), objs.end(), object_less);
}

// simplex index by vertex tuple, per level; necklace ssets are ordered so
// this is a bijection onto the simplices
const std::vector<std::map<std::vector<Idx>, Idx>>& tuple_lookup(const SSet& X) {
  static thread_local std::map<SSet, std::vector<std::map<std::vector<Idx>, Idx>>> cache;
  auto it = cache.find(X);
  if (it != cache.end()) return it->second;
  std::vector<std::map<std::vector<Idx>, Idx>> lk(static_cast<std::size_t>(X->trunc) + 1);
  for (int n = 0; n <= X->trunc; ++n)
    for (Idx s = 0; s < X->counts[n]; ++s) lk[static_cast<std::size_t>(n)][X->vertex_tuple(n, s)] = s;
  return cache.emplace(X, std::move(lk)).first->second;
}

// Necklace maps U -> T over K are determined by weakly monotone vertex maps
// fixing both endpoints: each bead of U must land inside a single bead of T,
// and the bead tops must agree in K.  Enumerate the vertex maps directly.
std::vector<std::vector<Idx>> vertex_maps_over(const NecklaceMap& U, const NecklaceMap& T) {
  std::vector<std::vector<Idx>> out;
  Idx nu = U.nss->counts[0];
  Idx nt = T.nss->counts[0];
  if (U.f.at[0][0] != T.f.at[0][0] || U.f.at[0][nu - 1] != T.f.at[0][nt - 1]) return out;
  auto& tl = tuple_lookup(T.nss);
  auto& ul = tuple_lookup(U.nss);

  std::vector<Idx> utop(static_cast<std::size_t>(U.nk.beads()));
  for (int i = 0; i < U.nk.beads(); ++i) {
    int lo = U.nk.offsets[static_cast<std::size_t>(i)];
    int d = U.nk.dims[static_cast<std::size_t>(i)];
    std::vector<Idx> t(static_cast<std::size_t>(d) + 1);
    std::iota(t.begin(), t.end(), static_cast<Idx>(lo));
    utop[static_cast<std::size_t>(i)] = ul[static_cast<std::size_t>(d)].at(t);
  }

  std::vector<Idx> phi(nu);
  phi[0] = 0;
  std::function<void(int)> next_bead;
  std::function<void(int, Idx, Idx)> assign = [&](int bead, Idx v, Idx ub) {
    int lo = U.nk.offsets[static_cast<std::size_t>(bead)];
    int d = U.nk.dims[static_cast<std::size_t>(bead)];
    Idx hi = static_cast<Idx>(lo + d);
    if (v > hi) {
      next_bead(bead + 1);
      return;
    }
    for (Idx w = phi[v - 1]; w <= ub; ++w) {
      if (v == nu - 1 && w != nt - 1) continue;
      if (T.f.at[0][w] != U.f.at[0][v]) continue;
      phi[v] = w;
      if (v == hi) {
        std::vector<Idx> img(static_cast<std::size_t>(d) + 1);
        for (int x = 0; x <= d; ++x) img[static_cast<std::size_t>(x)] = phi[static_cast<Idx>(lo + x)];
        Idx ts = tl[static_cast<std::size_t>(d)].at(img);
        if (T.f.at[d][ts] != U.f.at[d][utop[static_cast<std::size_t>(bead)]]) continue;
      }
      assign(bead, v + 1, ub);
    }
  };
  next_bead = [&](int bead) {
    if (bead == U.nk.beads()) {
      if (phi[nu - 1] == nt - 1) out.push_back(phi);
      return;
    }
    Idx start = phi[static_cast<Idx>(U.nk.offsets[static_cast<std::size_t>(bead)])];
    // upper bound keeping the bead image inside a single bead of T
    Idx ub = 0;
    for (int j = 0; j < T.nk.beads(); ++j) {
      Idx jlo = static_cast<Idx>(T.nk.offsets[static_cast<std::size_t>(j)]);
      Idx jhi = jlo + static_cast<Idx>(T.nk.dims[static_cast<std::size_t>(j)]);
      if (jlo <= start && start <= jhi) ub = std::max(ub, jhi);
    }
    if (U.nk.dims[static_cast<std::size_t>(bead)] == 0) {
      next_bead(bead + 1);
      return;
    }
    assign(bead, static_cast<Idx>(U.nk.offsets[static_cast<std::size_t>(bead)] + 1), ub);
  };
  next_bead(0);
  return out;
}

SimplicialMap map_from_vertices(const NecklaceMap& U, const NecklaceMap& T,
                                const std::vector<Idx>& phi) {
  auto& tl = tuple_lookup(T.nss);
  SimplicialMap g{U.nss, T.nss, {}};
  g.at.resize(static_cast<std::size_t>(U.nss->trunc) + 1);
  for (int n = 0; n <= U.nss->trunc; ++n) {
    g.at[n].resize(U.nss->counts[n]);
    for (Idx s = 0; s < U.nss->counts[n]; ++s) {
      auto t = U.nss->vertex_tuple(n, s);
      for (auto& v : t) v = phi[v];
      g.at[n][s] = tl[static_cast<std::size_t>(n)].at(t);
    }
  }
  return g;
}

void build_finite_category(NecklaceCategory& C) {
  C.cat.n_objects = static_cast<int>(C.objects.size());
  C.cat.mors.clear();
  for (auto& m : C.mors) C.cat.mors.push_back({m.src, m.dst});
  C.cat.identity = C.identity;
  int M = static_cast<int>(C.mors.size());
  // morphisms between ordered ssets are determined by their vertex maps
  std::map<std::pair<int, int>, std::map<std::vector<Idx>, int>> index;
  std::vector<std::vector<int>> by_dst(C.objects.size());
  for (int f = 0; f < M; ++f) {
    auto& mf = C.mors[static_cast<std::size_t>(f)];
    index[{mf.src, mf.dst}][mf.g.at[0]] = f;
    by_dst[static_cast<std::size_t>(mf.dst)].push_back(f);
  }
  C.cat.comp.assign(static_cast<std::size_t>(M), {});
  std::vector<Idx> v0;
  for (int g = 0; g < M; ++g) {
    auto& mg = C.mors[static_cast<std::size_t>(g)];
    for (int f : by_dst[static_cast<std::size_t>(mg.src)]) {
      auto& f0 = C.mors[static_cast<std::size_t>(f)].g.at[0];
      v0.resize(f0.size());
      for (std::size_t v = 0; v < f0.size(); ++v) v0[v] = mg.g.at[0][f0[v]];
      auto& slot = index[{C.mors[static_cast<std::size_t>(f)].src, mg.dst}];
      auto it = slot.find(v0);
      if (it == slot.end()) throw std::logic_error("necklace category not closed under composition");
      C.cat.set_comp(g, f, it->second);
    }
  }
  C.cat.validate();
}

}  // namespace

bool NecklaceCategory::leq(int i, int j) const {
  for (auto& m : mors)
    if (m.src == i && m.dst == j) return true;
  return false;
}

NecklaceCategory tnd_necklaces(const SSet& K, Idx a, Idx b) {
  auto oc = classify_order(K);
  if (!oc.one_ordered) throw precondition_error("tnd_necklaces: space is not 1-ordered");

  NecklaceCategory C;
  C.K = K;
  C.a = a;
  C.b = b;
  C.tnd_only = true;

  // non-degenerate simplices grouped by first vertex
  std::vector<std::vector<std::pair<int, Idx>>> by_start(K->counts[0]);
  for (int n = 1; n <= K->trunc; ++n)
    for (Idx s = 0; s < K->counts[n]; ++s)
      if (!K->is_degenerate(n, s)) by_start[K->vertex_tuple(n, s).front()].push_back({n, s});

  if (a == b) C.objects.push_back(necklace_from_beads(K, {0}, {{0, a}}, a, b));
  std::vector<std::pair<int, Idx>> chain;
  std::function<void(Idx)> dfs = [&](Idx v) {
    if (v == b && !chain.empty()) {
      std::vector<int> dims;
      for (auto& [n, s] : chain) dims.push_back(n);
      C.objects.push_back(necklace_from_beads(K, dims, chain, a, b));
    }
    for (auto& [n, s] : by_start[v]) {
      chain.push_back({n, s});
      dfs(K->vertex_tuple(n, s).back());
      chain.pop_back();
    }
  };
  dfs(a);
  sort_objects(C.objects);

  // image subcomplexes (sets of hit simplices per level)
  std::size_t N = C.objects.size();
  std::vector<std::vector<std::vector<char>>> image(N);
  for (std::size_t i = 0; i < N; ++i) {
    image[i].resize(static_cast<std::size_t>(K->trunc) + 1);
    for (int n = 0; n <= K->trunc; ++n) {
      image[i][n].assign(K->counts[n], 0);
      for (Idx s : C.objects[i].f.at[n]) image[i][n][s] = 1;
    }
  }
  auto subset = [&](std::size_t i, std::size_t j) {
    for (int n = 0; n <= K->trunc; ++n)
      for (Idx s = 0; s < K->counts[n]; ++s)
        if (image[i][n][s] && !image[j][n][s]) return false;
    return true;
  };

  C.identity.assign(N, -1);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      if (i != j && !subset(i, j)) continue;
      // connecting map through the mono objects[j]
      std::vector<std::map<Idx, Idx>> rev(static_cast<std::size_t>(K->trunc) + 1);
      for (int n = 0; n <= K->trunc; ++n)
        for (Idx s = 0; s < C.objects[j].nss->counts[n]; ++s) rev[n][C.objects[j].f.at[n][s]] = s;
      SimplicialMap g{C.objects[i].nss, C.objects[j].nss, {}};
      g.at.resize(static_cast<std::size_t>(K->trunc) + 1);
      for (int n = 0; n <= K->trunc; ++n) {
        g.at[n].resize(C.objects[i].nss->counts[n]);
        for (Idx s = 0; s < C.objects[i].nss->counts[n]; ++s)
          g.at[n][s] = rev[n].at(C.objects[i].f.at[n][s]);
      }
      if (i == j) C.identity[i] = static_cast<int>(C.mors.size());
      C.mors.push_back({static_cast<int>(i), static_cast<int>(j), std::move(g)});
    }
  build_finite_category(C);
  if (!C.cat.is_poset()) throw std::logic_error("tnd category is not a poset");
  return C;
}

NecklaceCategory bounded_necklaces(const SSet& K, Idx a, Idx b, int max_beads, int max_bead_dim,
                                   bool with_mors) {
  if (max_bead_dim > K->trunc)
    throw truncation_error("bounded_necklaces: bead dimension exceeds truncation");
  NecklaceCategory C;
  C.K = K;
  C.a = a;
  C.b = b;

  if (a == b) C.objects.push_back(necklace_from_beads(K, {0}, {{0, a}}, a, b));
  std::vector<std::pair<int, Idx>> chain;
  std::function<void(Idx)> dfs = [&](Idx v) {
    if (v == b && !chain.empty()) {
      std::vector<int> dims;
      for (auto& [n, s] : chain) dims.push_back(n);
      C.objects.push_back(necklace_from_beads(K, dims, chain, a, b));
    }
    if (static_cast<int>(chain.size()) == max_beads) return;
    for (int n = 1; n <= max_bead_dim; ++n)
      for (Idx s = 0; s < K->counts[n]; ++s) {
        if (K->vertex_tuple(n, s).front() != v) continue;
        chain.push_back({n, s});
        dfs(K->vertex_tuple(n, s).back());
        chain.pop_back();
      }
  };
  dfs(a);
  sort_objects(C.objects);

  if (!with_mors) return C;

  std::size_t N = C.objects.size();
  C.identity.assign(N, -1);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      auto& U = C.objects[i];
      auto& T = C.objects[j];
      for (auto& phi : vertex_maps_over(U, T)) {
        bool ident = true;
        for (std::size_t v = 0; v < phi.size() && ident; ++v) ident = phi[v] == v;
        if (i == j && ident) C.identity[i] = static_cast<int>(C.mors.size());
        C.mors.push_back({static_cast<int>(i), static_cast<int>(j), map_from_vertices(U, T, phi)});
      }
    }
  build_finite_category(C);
  return C;
}

std::vector<int> bead_map(const NecklaceMap& U, const NecklaceMap& T, const SimplicialMap& g) {
  std::vector<int> out;
  for (int i = 0; i < U.nk.beads(); ++i) {
    Idx lo = g.at[0][static_cast<Idx>(U.nk.offsets[static_cast<std::size_t>(i)])];
    Idx hi = g.at[0][static_cast<Idx>(U.nk.offsets[static_cast<std::size_t>(i)] +
                                      U.nk.dims[static_cast<std::size_t>(i)])];
    int found = -1;
    for (int j = 0; j < T.nk.beads() && found < 0; ++j) {
      Idx jlo = static_cast<Idx>(T.nk.offsets[static_cast<std::size_t>(j)]);
      Idx jhi = jlo + static_cast<Idx>(T.nk.dims[static_cast<std::size_t>(j)]);
      if (lo >= jlo && hi <= jhi) found = j;
    }
    if (found < 0) throw std::logic_error("bead_map: bead image not contained in a bead");
    out.push_back(found);
  }
  return out;
}

FinalityCertificate finality_certificate(const NecklaceCategory& bounded,
                                         const NecklaceCategory& tnd) {
  FinalityCertificate cert;
  cert.status = CertStatus::pass;
  for (std::size_t u = 0; u < bounded.objects.size(); ++u) {
    auto& U = bounded.objects[u];
    FinalityCertificate::Item item;
    item.u = static_cast<int>(u);
    // comma objects: (tnd object T, necklace map U -> T over K), each map
    // recorded by its vertex component
    struct CO {
      int t;
      std::vector<Idx> phi;
    };
    std::vector<CO> objs;
    std::map<std::pair<int, std::vector<Idx>>, std::size_t> oidx;
    for (std::size_t t = 0; t < tnd.objects.size(); ++t) {
      auto& T = tnd.objects[t];
      for (auto& phi : vertex_maps_over(U, T)) {
        if (item.epi_image < 0 && is_epi(map_from_vertices(U, T, phi)))
          item.epi_image = static_cast<int>(t);
        oidx[{static_cast<int>(t), phi}] = objs.size();
        objs.push_back({static_cast<int>(t), phi});
      }
    }
    item.comma_objects = objs.size();
    // connectivity under tnd morphisms h: T -> T' with h g = g'
    std::vector<std::size_t> comp(objs.size());
    std::iota(comp.begin(), comp.end(), 0u);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      while (comp[x] != x) x = comp[x] = comp[comp[x]];
      return x;
    };
    std::vector<Idx> moved;
    for (std::size_t x = 0; x < objs.size(); ++x)
      for (auto& m : tnd.mors) {
        if (m.src != objs[x].t) continue;
        moved.resize(objs[x].phi.size());
        for (std::size_t v = 0; v < moved.size(); ++v) moved[v] = m.g.at[0][objs[x].phi[v]];
        auto it = oidx.find({m.dst, moved});
        if (it != oidx.end()) comp[find(x)] = find(it->second);
      }
    std::size_t ncomp = 0;
    for (std::size_t x = 0; x < objs.size(); ++x)
      if (find(x) == x) ++ncomp;
    item.connected = ncomp == 1;
    if (objs.empty() || !item.connected) {
      cert.status = CertStatus::fail;
      cert.detail = "comma category at bounded object " + std::to_string(u) +
                    (objs.empty() ? " is empty" : " is disconnected");
    }
    cert.items.push_back(std::move(item));
  }
  if (cert.status == CertStatus::pass) cert.detail = "all comma categories non-empty and connected";
  return cert;
}

}  // namespace nck
