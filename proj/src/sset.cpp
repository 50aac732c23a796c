#include "nck/sset.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <set>

namespace nck {

namespace {

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// weakly increasing k-tuples over {a..m}
std::uint64_t wi_count(int m, int a, int k) {
  if (k == 0) return 1;
  if (a > m) return 0;
  return binom(static_cast<std::uint64_t>(m - a + k), static_cast<std::uint64_t>(k));
}

struct UnionFind {
  std::vector<Idx> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  Idx find(Idx a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(Idx a, Idx b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace

SSet finalize(SSetData data) {
  auto K = std::make_shared<SimplicialSet>();
  K->trunc = data.trunc;
  K->vertex_labels = std::move(data.vertex_labels);
  K->counts.resize(static_cast<std::size_t>(data.trunc) + 1);
  K->counts[0] = data.n_vertices;
  K->faces.resize(static_cast<std::size_t>(data.trunc) + 1);
  K->degen.resize(static_cast<std::size_t>(data.trunc) + 1);
  for (int n = 1; n <= data.trunc; ++n) {
    K->faces[n] = std::move(data.faces.at(static_cast<std::size_t>(n)));
    K->counts[n] = K->faces[n].size();
  }
  for (int n = 0; n < data.trunc; ++n) {
    K->degen[n] = std::move(data.degen.at(static_cast<std::size_t>(n)));
    if (K->degen[n].size() != K->counts[n])
      throw std::invalid_argument("degeneracy table size mismatch");
  }

  // simplicial identities
  auto d = [&](int n, Idx s, int i) { return K->faces[n][s][static_cast<std::size_t>(i)]; };
  auto sg = [&](int n, Idx s, int i) { return K->degen[n][s][static_cast<std::size_t>(i)]; };
  for (int n = 1; n <= K->trunc; ++n)
    for (Idx s = 0; s < K->counts[n]; ++s) {
      if (K->faces[n][s].size() != static_cast<std::size_t>(n) + 1)
        throw std::invalid_argument("face arity mismatch");
      for (int i = 0; i + 1 <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          if (n >= 2 && d(n - 1, d(n, s, j), i) != d(n - 1, d(n, s, i), j - 1))
            throw std::invalid_argument("face identity violated");
    }
  for (int n = 0; n < K->trunc; ++n)
    for (Idx s = 0; s < K->counts[n]; ++s) {
      if (K->degen[n][s].size() != static_cast<std::size_t>(n) + 1)
        throw std::invalid_argument("degeneracy arity mismatch");
      for (int i = 0; i <= n; ++i) {
        Idx t = sg(n, s, i);
        for (int j = 0; j <= n + 1; ++j) {
          Idx f = d(n + 1, t, j);
          Idx expect;
          if (j == i || j == i + 1) expect = s;
          else if (j < i) expect = (n >= 1) ? sg(n - 1, d(n, s, j), i - 1) : 0;
          else expect = (n >= 1) ? sg(n - 1, d(n, s, j - 1), i) : 0;
          if (n == 0 && j != i && j != i + 1) expect = d(n + 1, t, j);  // no check possible
          else if (f != expect) throw std::invalid_argument("mixed identity violated");
        }
        if (n + 1 < K->trunc)
          for (int j = i; j <= n; ++j)
            if (sg(n + 1, sg(n, s, j), i) != sg(n + 1, sg(n, s, i), j + 1))
              throw std::invalid_argument("degeneracy identity violated");
      }
    }

  // degeneracy witnesses (maximal i)
  K->deg_wit.resize(static_cast<std::size_t>(K->trunc) + 1);
  for (int n = 1; n <= K->trunc; ++n)
    K->deg_wit[n].assign(K->counts[n], {-1, 0});
  for (int n = 0; n < K->trunc; ++n)
    for (Idx s = 0; s < K->counts[n]; ++s)
      for (int i = 0; i <= n; ++i) {
        auto& w = K->deg_wit[n + 1][sg(n, s, i)];
        if (i > w.first) w = {i, s};
      }

  // vertex tuples
  K->vtx.resize(static_cast<std::size_t>(K->trunc) + 1);
  K->vtx[0].resize(K->counts[0]);
  for (Idx s = 0; s < K->counts[0]; ++s) K->vtx[0][s] = {s};
  for (int n = 1; n <= K->trunc; ++n) {
    K->vtx[n].resize(K->counts[n]);
    for (Idx s = 0; s < K->counts[n]; ++s) {
      auto t = K->vtx[n - 1][d(n, s, n)];
      t.push_back(K->vtx[n - 1][d(n, s, 0)].back());
      K->vtx[n][s] = std::move(t);
    }
  }
  return K;
}

std::pair<std::vector<int>, std::pair<int, Idx>> SimplicialSet::ez(int n, Idx s) const {
  std::vector<int> word;
  while (n > 0 && deg_wit[n][s].first >= 0) {
    auto [i, t] = deg_wit[n][s];
    word.push_back(i);
    s = t;
    --n;
  }
  return {word, {n, s}};
}

std::vector<std::size_t> SimplicialSet::nd_counts() const {
  std::vector<std::size_t> out(static_cast<std::size_t>(trunc) + 1, 0);
  out[0] = counts[0];
  for (int n = 1; n <= trunc; ++n)
    for (Idx s = 0; s < counts[n]; ++s)
      if (!is_degenerate(n, s)) ++out[n];
  return out;
}

std::size_t SimplicialSet::total_size() const {
  std::size_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

bool SimplicialMap::valid() const {
  int H = levels();
  for (int n = 0; n < H; ++n)
    if (at[n].size() != src->counts[n]) return false;
  for (int n = 1; n < H; ++n)
    for (Idx s = 0; s < src->counts[n]; ++s)
      for (int i = 0; i <= n; ++i)
        if (at[n - 1][src->face(n, s, i)] != dst->face(n, at[n][s], i)) return false;
  for (int n = 0; n + 1 < H; ++n)
    for (Idx s = 0; s < src->counts[n]; ++s)
      for (int i = 0; i <= n; ++i)
        if (at[n + 1][src->degeneracy(n, s, i)] != dst->degeneracy(n, at[n][s], i)) return false;
  return true;
}

SimplicialMap identity_map(const SSet& K) {
  SimplicialMap f{K, K, {}};
  f.at.resize(static_cast<std::size_t>(K->trunc) + 1);
  for (int n = 0; n <= K->trunc; ++n) {
    f.at[n].resize(K->counts[n]);
    std::iota(f.at[n].begin(), f.at[n].end(), 0u);
  }
  return f;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  SimplicialMap h{f.src, g.dst, {}};
  int H = std::min(f.levels(), g.levels());
  h.at.resize(static_cast<std::size_t>(H));
  for (int n = 0; n < H; ++n) {
    h.at[n].resize(f.at[n].size());
    for (Idx s = 0; s < f.at[n].size(); ++s) h.at[n][s] = g.at[n][f.at[n][s]];
  }
  return h;
}

bool operator==(const SimplicialMap& a, const SimplicialMap& b) {
  return a.src == b.src && a.dst == b.dst && a.at == b.at;
}

bool is_mono(const SimplicialMap& f) {
  for (int n = 0; n < f.levels(); ++n) {
    std::vector<Idx> seen(f.at[n].begin(), f.at[n].end());
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  return true;
}

bool is_epi(const SimplicialMap& f) {
  for (int n = 0; n < f.levels(); ++n) {
    std::vector<char> hit(f.dst->counts[n], 0);
    for (Idx s = 0; s < f.at[n].size(); ++s) hit[f.at[n][s]] = 1;
    if (std::find(hit.begin(), hit.end(), 0) != hit.end()) return false;
  }
  return true;
}

// ---- Delta[m] ----

Idx delta_index_of_tuple(int m, const std::vector<Idx>& t) {
  std::uint64_t rank = 0;
  int k = static_cast<int>(t.size());
  for (int j = 0; j < k; ++j) {
    Idx lo = (j == 0) ? 0 : t[static_cast<std::size_t>(j) - 1];
    for (Idx v = lo; v < t[static_cast<std::size_t>(j)]; ++v)
      rank += wi_count(m, static_cast<int>(v), k - j - 1);
  }
  return static_cast<Idx>(rank);
}

std::vector<Idx> delta_tuple_of_index(int m, int n, Idx s) {
  std::vector<Idx> t(static_cast<std::size_t>(n) + 1);
  std::uint64_t rank = s;
  Idx lo = 0;
  for (int j = 0; j <= n; ++j) {
    Idx v = lo;
    for (;; ++v) {
      std::uint64_t c = wi_count(m, static_cast<int>(v), n - j);
      if (rank < c) break;
      rank -= c;
    }
    t[static_cast<std::size_t>(j)] = v;
    lo = v;
  }
  return t;
}

SSet standard_simplex(int m, int trunc) {
  SSetData d;
  d.trunc = trunc;
  d.n_vertices = static_cast<std::size_t>(m) + 1;
  d.faces.resize(static_cast<std::size_t>(trunc) + 1);
  d.degen.resize(static_cast<std::size_t>(trunc) + 1);
  for (Idx v = 0; v <= static_cast<Idx>(m); ++v) d.vertex_labels.push_back(std::to_string(v));
  for (int n = 0; n <= trunc; ++n) {
    std::size_t cnt = wi_count(m, 0, n + 1);
    if (n >= 1) {
      d.faces[n].resize(cnt);
      for (Idx s = 0; s < cnt; ++s) {
        auto t = delta_tuple_of_index(m, n, s);
        d.faces[n][s].resize(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) {
          auto u = t;
          u.erase(u.begin() + i);
          d.faces[n][s][static_cast<std::size_t>(i)] = delta_index_of_tuple(m, u);
        }
      }
    }
    if (n < trunc) {
      d.degen[n].resize(cnt);
      for (Idx s = 0; s < cnt; ++s) {
        auto t = delta_tuple_of_index(m, n, s);
        d.degen[n][s].resize(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) {
          auto u = t;
          u.insert(u.begin() + i, t[static_cast<std::size_t>(i)]);
          d.degen[n][s][static_cast<std::size_t>(i)] = delta_index_of_tuple(m, u);
        }
      }
    }
  }
  return finalize(std::move(d));
}

Subcomplex subcomplex(const SSet& K, const std::vector<std::vector<char>>& keep) {
  Subcomplex out;
  out.back.resize(static_cast<std::size_t>(K->trunc) + 1);
  std::vector<std::vector<Idx>> fwd(static_cast<std::size_t>(K->trunc) + 1);
  SSetData d;
  d.trunc = K->trunc;
  d.faces.resize(static_cast<std::size_t>(K->trunc) + 1);
  d.degen.resize(static_cast<std::size_t>(K->trunc) + 1);
  for (int n = 0; n <= K->trunc; ++n) {
    out.back[n].assign(K->counts[n], std::nullopt);
    for (Idx s = 0; s < K->counts[n]; ++s)
      if (keep[n][s]) {
        out.back[n][s] = static_cast<Idx>(fwd[n].size());
        fwd[n].push_back(s);
      }
  }
  d.n_vertices = fwd[0].size();
  if (!K->vertex_labels.empty())
    for (Idx s : fwd[0]) d.vertex_labels.push_back(K->vertex_labels[s]);
  for (int n = 1; n <= K->trunc; ++n) {
    d.faces[n].resize(fwd[n].size());
    for (Idx j = 0; j < fwd[n].size(); ++j)
      for (int i = 0; i <= n; ++i) {
        auto b = out.back[n - 1][K->face(n, fwd[n][j], i)];
        if (!b) throw std::invalid_argument("subcomplex selection not closed under faces");
        d.faces[n][j].push_back(*b);
      }
  }
  for (int n = 0; n < K->trunc; ++n) {
    d.degen[n].resize(fwd[n].size());
    for (Idx j = 0; j < fwd[n].size(); ++j)
      for (int i = 0; i <= n; ++i) {
        auto b = out.back[n + 1][K->degeneracy(n, fwd[n][j], i)];
        if (!b) throw std::invalid_argument("subcomplex selection not closed under degeneracies");
        d.degen[n][j].push_back(*b);
      }
  }
  out.sub = finalize(std::move(d));
  out.incl = SimplicialMap{out.sub, K, std::move(fwd)};
  return out;
}

SSet boundary(int m, int trunc) {
  auto D = standard_simplex(m, trunc);
  std::vector<std::vector<char>> keep(static_cast<std::size_t>(trunc) + 1);
  for (int n = 0; n <= trunc; ++n) {
    keep[n].resize(D->counts[n]);
    for (Idx s = 0; s < D->counts[n]; ++s) {
      auto t = delta_tuple_of_index(m, n, s);
      std::set<Idx> vals(t.begin(), t.end());
      keep[n][s] = vals.size() < static_cast<std::size_t>(m) + 1;
    }
  }
  return subcomplex(D, keep).sub;
}

SSet spine(int m, int trunc) {
  auto D = standard_simplex(m, trunc);
  std::vector<std::vector<char>> keep(static_cast<std::size_t>(trunc) + 1);
  for (int n = 0; n <= trunc; ++n) {
    keep[n].resize(D->counts[n]);
    for (Idx s = 0; s < D->counts[n]; ++s) {
      auto t = delta_tuple_of_index(m, n, s);
      keep[n][s] = t.back() - t.front() <= 1;
    }
  }
  return subcomplex(D, keep).sub;
}

SSet discrete_sset(std::size_t n, int trunc, std::vector<std::string> labels) {
  SSetData d;
  d.trunc = trunc;
  d.n_vertices = n;
  d.vertex_labels = std::move(labels);
  d.faces.resize(static_cast<std::size_t>(trunc) + 1);
  d.degen.resize(static_cast<std::size_t>(trunc) + 1);
  for (int lv = 1; lv <= trunc; ++lv) {
    d.faces[lv].resize(n);
    for (Idx s = 0; s < n; ++s) d.faces[lv][s].assign(static_cast<std::size_t>(lv) + 1, s);
  }
  for (int lv = 0; lv < trunc; ++lv) {
    d.degen[lv].resize(n);
    for (Idx s = 0; s < n; ++s) d.degen[lv][s].assign(static_cast<std::size_t>(lv) + 1, s);
  }
  return finalize(std::move(d));
}

Coproduct coproduct(const std::vector<SSet>& parts, int trunc) {
  for (auto& p : parts)
    if (p->trunc < trunc) throw truncation_error("coproduct: factor truncation too small");
  SSetData d;
  d.trunc = trunc;
  d.faces.resize(static_cast<std::size_t>(trunc) + 1);
  d.degen.resize(static_cast<std::size_t>(trunc) + 1);
  std::vector<std::vector<Idx>> offset(parts.size(),
                                       std::vector<Idx>(static_cast<std::size_t>(trunc) + 1, 0));
  std::vector<std::size_t> tot(static_cast<std::size_t>(trunc) + 1, 0);
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (int n = 0; n <= trunc; ++n) {
      offset[p][n] = static_cast<Idx>(tot[n]);
      tot[n] += parts[p]->counts[n];
    }
  d.n_vertices = tot[0];
  bool lab = std::all_of(parts.begin(), parts.end(),
                         [](const SSet& p) { return !p->vertex_labels.empty(); });
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (lab)
      for (auto& l : parts[p]->vertex_labels) d.vertex_labels.push_back(l);
    for (int n = 1; n <= trunc; ++n)
      for (Idx s = 0; s < parts[p]->counts[n]; ++s) {
        std::vector<Idx> f(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) f[static_cast<std::size_t>(i)] = offset[p][n - 1] + parts[p]->face(n, s, i);
        d.faces[n].push_back(std::move(f));
      }
    for (int n = 0; n < trunc; ++n)
      for (Idx s = 0; s < parts[p]->counts[n]; ++s) {
        std::vector<Idx> g(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) g[static_cast<std::size_t>(i)] = offset[p][n + 1] + parts[p]->degeneracy(n, s, i);
        d.degen[n].push_back(std::move(g));
      }
  }
  Coproduct out;
  out.sum = finalize(std::move(d));
  for (std::size_t p = 0; p < parts.size(); ++p) {
    SimplicialMap in{parts[p], out.sum, {}};
    in.at.resize(static_cast<std::size_t>(trunc) + 1);
    for (int n = 0; n <= trunc; ++n) {
      in.at[n].resize(parts[p]->counts[n]);
      for (Idx s = 0; s < parts[p]->counts[n]; ++s) in.at[n][s] = offset[p][n] + s;
    }
    out.in.push_back(std::move(in));
  }
  return out;
}

Idx ProductSSet::encode(int n, const std::vector<Idx>& tuple) const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) r += tuple[i] * stride[static_cast<std::size_t>(n)][i];
  return static_cast<Idx>(r);
}

std::vector<Idx> ProductSSet::decode(int n, Idx s) const {
  std::vector<Idx> t(factors.size());
  std::size_t r = s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    t[i] = static_cast<Idx>(r / stride[static_cast<std::size_t>(n)][i]);
    r %= stride[static_cast<std::size_t>(n)][i];
  }
  return t;
}

SimplicialMap ProductSSet::projection(std::size_t i) const {
  SimplicialMap f{prod, factors[i], {}};
  f.at.resize(static_cast<std::size_t>(prod->trunc) + 1);
  for (int n = 0; n <= prod->trunc; ++n) {
    f.at[n].resize(prod->counts[n]);
    for (Idx s = 0; s < prod->counts[n]; ++s) f.at[n][s] = decode(n, s)[i];
  }
  return f;
}

ProductSSet multi_product(const std::vector<SSet>& factors, int trunc) {
  for (auto& p : factors)
    if (p->trunc < trunc) throw truncation_error("product: factor truncation too small");
  ProductSSet out;
  out.factors = factors;
  out.stride.resize(static_cast<std::size_t>(trunc) + 1, std::vector<std::size_t>(factors.size(), 1));
  SSetData d;
  d.trunc = trunc;
  d.faces.resize(static_cast<std::size_t>(trunc) + 1);
  d.degen.resize(static_cast<std::size_t>(trunc) + 1);
  std::vector<std::size_t> tot(static_cast<std::size_t>(trunc) + 1, 1);
  for (int n = 0; n <= trunc; ++n) {
    for (std::size_t i = factors.size(); i-- > 0;) {
      out.stride[n][i] = tot[n];
      tot[n] *= factors[i]->counts[n];
    }
    if (tot[n] > 50'000'000) throw resource_limit_error("product level too large");
  }
  d.n_vertices = tot[0];
  auto decode = [&](int n, Idx s) {
    std::vector<Idx> t(factors.size());
    std::size_t r = s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      t[i] = static_cast<Idx>(r / out.stride[static_cast<std::size_t>(n)][i]);
      r %= out.stride[static_cast<std::size_t>(n)][i];
    }
    return t;
  };
  auto encode = [&](int n, const std::vector<Idx>& t) {
    std::size_t r = 0;
    for (std::size_t i = 0; i < t.size(); ++i) r += t[i] * out.stride[static_cast<std::size_t>(n)][i];
    return static_cast<Idx>(r);
  };
  for (int n = 1; n <= trunc; ++n) {
    d.faces[n].resize(tot[n]);
    for (Idx s = 0; s < tot[n]; ++s) {
      auto t = decode(n, s);
      d.faces[n][s].resize(static_cast<std::size_t>(n) + 1);
      for (int i = 0; i <= n; ++i) {
        std::vector<Idx> u(t.size());
        for (std::size_t j = 0; j < t.size(); ++j) u[j] = factors[j]->face(n, t[j], i);
        d.faces[n][s][static_cast<std::size_t>(i)] = encode(n - 1, u);
      }
    }
  }
  for (int n = 0; n < trunc; ++n) {
    d.degen[n].resize(tot[n]);
    for (Idx s = 0; s < tot[n]; ++s) {
      auto t = decode(n, s);
      d.degen[n][s].resize(static_cast<std::size_t>(n) + 1);
      for (int i = 0; i <= n; ++i) {
        std::vector<Idx> u(t.size());
        for (std::size_t j = 0; j < t.size(); ++j) u[j] = factors[j]->degeneracy(n, t[j], i);
        d.degen[n][s][static_cast<std::size_t>(i)] = encode(n + 1, u);
      }
    }
  }
  out.prod = finalize(std::move(d));
  return out;
}

ProductSSet product(const SSet& K, const SSet& L, int trunc) {
  return multi_product({K, L}, trunc);
}

QuotientResult quotient(const SSet& K, const std::vector<std::tuple<int, Idx, Idx>>& pairs) {
  std::vector<UnionFind> uf;
  uf.reserve(static_cast<std::size_t>(K->trunc) + 1);
  for (int n = 0; n <= K->trunc; ++n) uf.emplace_back(K->counts[n]);
  std::vector<std::pair<int, std::pair<Idx, Idx>>> work;
  for (auto& [n, a, b] : pairs) work.push_back({n, {a, b}});
  while (!work.empty()) {
    auto [n, ab] = work.back();
    work.pop_back();
    if (!uf[n].unite(ab.first, ab.second)) continue;
    Idx a = ab.first, b = ab.second;
    if (n >= 1)
      for (int i = 0; i <= n; ++i) work.push_back({n - 1, {K->face(n, a, i), K->face(n, b, i)}});
    if (n < K->trunc)
      for (int i = 0; i <= n; ++i)
        work.push_back({n + 1, {K->degeneracy(n, a, i), K->degeneracy(n, b, i)}});
  }
  QuotientResult out;
  out.cls.resize(static_cast<std::size_t>(K->trunc) + 1);
  std::vector<std::vector<Idx>> rep(static_cast<std::size_t>(K->trunc) + 1);
  for (int n = 0; n <= K->trunc; ++n) {
    out.cls[n].assign(K->counts[n], 0);
    std::vector<Idx> order(K->counts[n], static_cast<Idx>(-1));
    for (Idx s = 0; s < K->counts[n]; ++s) {
      Idx r = uf[n].find(s);
      if (order[r] == static_cast<Idx>(-1)) {
        order[r] = static_cast<Idx>(rep[n].size());
        rep[n].push_back(r);
      }
      out.cls[n][s] = order[r];
    }
  }
  SSetData d;
  d.trunc = K->trunc;
  d.n_vertices = rep[0].size();
  d.faces.resize(static_cast<std::size_t>(K->trunc) + 1);
  d.degen.resize(static_cast<std::size_t>(K->trunc) + 1);
  if (!K->vertex_labels.empty())
    for (Idx r : rep[0]) d.vertex_labels.push_back(K->vertex_labels[r]);
  for (int n = 1; n <= K->trunc; ++n) {
    d.faces[n].resize(rep[n].size());
    for (Idx j = 0; j < rep[n].size(); ++j)
      for (int i = 0; i <= n; ++i) d.faces[n][j].push_back(out.cls[n - 1][K->face(n, rep[n][j], i)]);
  }
  for (int n = 0; n < K->trunc; ++n) {
    d.degen[n].resize(rep[n].size());
    for (Idx j = 0; j < rep[n].size(); ++j)
      for (int i = 0; i <= n; ++i)
        d.degen[n][j].push_back(out.cls[n + 1][K->degeneracy(n, rep[n][j], i)]);
  }
  out.q = finalize(std::move(d));
  out.proj = SimplicialMap{K, out.q, out.cls};
  return out;
}

SimplicialMap induce_on_quotient(const QuotientResult& q, const SimplicialMap& f) {
  SimplicialMap g{q.q, f.dst, {}};
  int H = f.levels();
  g.at.resize(static_cast<std::size_t>(H));
  for (int n = 0; n < H; ++n) {
    g.at[n].assign(q.q->counts[n], static_cast<Idx>(-1));
    for (Idx s = 0; s < f.at[n].size(); ++s) {
      Idx c = q.cls[n][s];
      if (g.at[n][c] == static_cast<Idx>(-1)) g.at[n][c] = f.at[n][s];
      else if (g.at[n][c] != f.at[n][s])
        throw std::invalid_argument("map does not descend to the quotient");
    }
  }
  return g;
}

Idx apply_monotone(const SSet& K, int p, Idx s, const std::vector<int>& phi) {
  for (std::size_t i = 0; i + 1 < phi.size(); ++i)
    if (phi[i] > phi[i + 1]) throw std::invalid_argument("apply_monotone: not monotone");
  std::vector<char> in_im(static_cast<std::size_t>(p) + 1, 0);
  for (int v : phi) in_im[static_cast<std::size_t>(v)] = 1;
  Idx cur = s;
  int lvl = p;
  for (int v = p; v >= 0; --v)
    if (!in_im[static_cast<std::size_t>(v)]) {
      cur = K->face(lvl, cur, v);
      --lvl;
    }
  // phi as a surjection onto ranks of its image
  std::vector<int> rank(static_cast<std::size_t>(p) + 1, -1);
  int q = 0;
  for (int v = 0; v <= p; ++v)
    if (in_im[static_cast<std::size_t>(v)]) rank[static_cast<std::size_t>(v)] = q++;
  std::vector<int> srj(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) srj[i] = rank[static_cast<std::size_t>(phi[i])];
  std::function<Idx(const std::vector<int>&)> go = [&](const std::vector<int>& f) -> Idx {
    int n = static_cast<int>(f.size()) - 1;
    if (n == lvl) return cur;
    int i = 0;
    while (f[static_cast<std::size_t>(i)] != f[static_cast<std::size_t>(i) + 1]) ++i;
    auto g = f;
    g.erase(g.begin() + i);
    Idx r = go(g);
    return K->degeneracy(n - 1, r, i);
  };
  return go(srj);
}

std::vector<Idx> pi0_classes(const SSet& K) {
  UnionFind uf(K->counts[0]);
  if (K->trunc >= 1)
    for (Idx e = 0; e < K->counts[1]; ++e) uf.unite(K->face(1, e, 0), K->face(1, e, 1));
  std::vector<Idx> out(K->counts[0]);
  std::vector<Idx> order(K->counts[0], static_cast<Idx>(-1));
  Idx next = 0;
  for (Idx v = 0; v < K->counts[0]; ++v) {
    Idx r = uf.find(v);
    if (order[r] == static_cast<Idx>(-1)) order[r] = next++;
    out[v] = order[r];
  }
  return out;
}

std::size_t pi0(const SSet& K) {
  auto c = pi0_classes(K);
  return c.empty() ? 0 : static_cast<std::size_t>(*std::max_element(c.begin(), c.end())) + 1;
}

std::vector<SimplicialMap> enumerate_maps(const SSet& K, const SSet& L,
                                          const std::vector<std::pair<Idx, Idx>>& pins,
                                          std::size_t limit) {
  // generators: non-degenerate simplices of K by (level, index)
  std::vector<std::pair<int, Idx>> gen;
  for (int n = 0; n <= K->trunc; ++n)
    for (Idx s = 0; s < K->counts[n]; ++s)
      if (n == 0 || !K->is_degenerate(n, s)) {
        if (n > L->trunc) throw truncation_error("enumerate_maps: target truncation too small");
        gen.push_back({n, s});
      }
  int H = std::min(K->trunc, L->trunc) + 1;

  std::vector<std::vector<Idx>> pin_of(1);
  pin_of[0].assign(K->counts[0], static_cast<Idx>(-1));
  for (auto& [v, w] : pins) pin_of[0][v] = w;

  // partial images per level; -1 = unassigned
  std::vector<std::vector<Idx>> img(static_cast<std::size_t>(K->trunc) + 1);
  for (int n = 0; n <= K->trunc; ++n) img[n].assign(K->counts[n], static_cast<Idx>(-1));

  std::function<Idx(int, Idx)> get = [&](int n, Idx s) -> Idx {
    if (img[n][s] != static_cast<Idx>(-1)) return img[n][s];
    auto [i, t] = K->deg_wit[n][s];
    return L->degeneracy(n - 1, get(n - 1, t), i);
  };

  std::vector<SimplicialMap> out;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == gen.size()) {
      if (out.size() >= limit) throw resource_limit_error("enumerate_maps: too many maps");
      SimplicialMap f{K, L, {}};
      f.at.resize(static_cast<std::size_t>(H));
      for (int n = 0; n < H; ++n) {
        f.at[n].resize(K->counts[n]);
        for (Idx s = 0; s < K->counts[n]; ++s) f.at[n][s] = get(n, s);
      }
      out.push_back(std::move(f));
      return;
    }
    auto [n, s] = gen[k];
    if (n == 0) {
      Idx pinned = pin_of[0][s];
      for (Idx x = 0; x < L->counts[0]; ++x) {
        if (pinned != static_cast<Idx>(-1) && x != pinned) continue;
        img[0][s] = x;
        rec(k + 1);
      }
      img[0][s] = static_cast<Idx>(-1);
      return;
    }
    std::vector<Idx> want(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) want[static_cast<std::size_t>(i)] = get(n - 1, K->face(n, s, i));
    for (Idx x = 0; x < L->counts[n]; ++x) {
      bool ok = true;
      for (int i = 0; i <= n && ok; ++i) ok = L->face(n, x, i) == want[static_cast<std::size_t>(i)];
      if (!ok) continue;
      img[n][s] = x;
      rec(k + 1);
    }
    img[n][s] = static_cast<Idx>(-1);
  };
  rec(0);
  return out;
}

}  // namespace nck
