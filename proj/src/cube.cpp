#include "nck/cube.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

namespace nck {

namespace {
std::uint32_t full_mask(int m) { return m >= 2 ? (((1u << (m - 1)) - 1u) << 1) : 0u; }
bool subset(std::uint32_t a, std::uint32_t b) { return (a & ~b) == 0; }
std::vector<int> bits_of(std::uint32_t x) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (x & (1u << i)) out.push_back(i);
  return out;
}
}  // namespace

bool operator==(const CubeObject& a, const CubeObject& b) { return a.I == b.I && a.S == b.S; }

int CubeCategory::object_index(const CubeObject& o) const {
  for (std::size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == o) return static_cast<int>(i);
  return -1;
}

bool CubeCategory::has_mor(int from, int to) const {
  const auto& f = objects[static_cast<std::size_t>(from)];
  const auto& t = objects[static_cast<std::size_t>(to)];
  return subset(f.I, t.I) && t.S == (f.S | t.I);
}

int CubeCategory::mor_index(int from, int to) const {
  if (!has_mor(from, to)) return -1;
  for (std::size_t i = 0; i < cat.mors.size(); ++i)
    if (cat.mors[i].src == from && cat.mors[i].dst == to) return static_cast<int>(i);
  return -1;
}

std::vector<int> CubeCategory::generators() const {
  std::vector<int> out;
  for (std::size_t t = 0; t < objects.size(); ++t)
    for (int j : bits_of(objects[t].I)) {
      std::uint32_t bj = 1u << j;
      int a = object_index({objects[t].I & ~bj, objects[t].S});
      int b = object_index({objects[t].I & ~bj, objects[t].S & ~bj});
      out.push_back(mor_index(a, static_cast<int>(t)));
      out.push_back(mor_index(b, static_cast<int>(t)));
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CubeCategory cube(int m) {
  if (m < 1) throw std::invalid_argument("cube: m must be >= 1");
  CubeCategory C;
  C.m = m;
  std::uint32_t full = full_mask(m);
  for (std::uint32_t S = 0;; S = ((S | ~full) + 1) & full) {
    for (std::uint32_t I = 0;; I = ((I | ~S) + 1) & S) {
      C.objects.push_back({I, S});
      if (I == S) break;
    }
    if (S == full) break;
  }
  std::sort(C.objects.begin(), C.objects.end(),
            [](const CubeObject& a, const CubeObject& b) { return std::tie(a.S, a.I) < std::tie(b.S, b.I); });
  int N = static_cast<int>(C.objects.size());
  C.cat.n_objects = N;
  C.cat.identity.assign(static_cast<std::size_t>(N), -1);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (C.has_mor(i, j)) {
        if (i == j) C.cat.identity[static_cast<std::size_t>(i)] = static_cast<int>(C.cat.mors.size());
        C.cat.mors.push_back({i, j});
      }
  int M = C.cat.n_mors();
  C.cat.comp.assign(static_cast<std::size_t>(M), {});
  for (int g = 0; g < M; ++g)
    for (int f = 0; f < M; ++f)
      if (C.cat.mors[static_cast<std::size_t>(f)].dst == C.cat.mors[static_cast<std::size_t>(g)].src)
        C.cat.set_comp(g, f,
            C.mor_index(C.cat.mors[static_cast<std::size_t>(f)].src, C.cat.mors[static_cast<std::size_t>(g)].dst));
  C.cat.validate();
  return C;
}

static std::vector<int> joint_list(int m, const CubeObject& o) {
  std::vector<int> j{0};
  for (int b : bits_of(o.S & ~o.I)) j.push_back(b);
  j.push_back(m);
  return j;
}

std::vector<std::vector<int>> intervals(int m, const CubeObject& o) {
  auto js = joint_list(m, o);
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i + 1 < js.size(); ++i) {
    std::vector<int> iv;
    for (int s : bits_of(o.S))
      if (s >= js[i] && s <= js[i + 1]) iv.push_back(s);
    out.push_back(std::move(iv));
  }
  return out;
}

std::vector<int> interval_action(int m, const CubeObject& from, const CubeObject& to) {
  auto jf = joint_list(m, from);
  auto jt = joint_list(m, to);
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < jf.size(); ++i) {
    int tgt = -1;
    for (std::size_t j = 0; j + 1 < jt.size(); ++j)
      if (jt[j] <= jf[i] && jf[i + 1] <= jt[j + 1]) {
        tgt = static_cast<int>(j);
        break;
      }
    if (tgt < 0) throw std::logic_error("interval_action: no containing interval");
    out.push_back(tgt);
  }
  return out;
}

CubeObject cube_of_necklace(int m, const NecklaceMap& T) {
  std::uint32_t full = full_mask(m);
  std::uint32_t S = 0, J = 0;
  for (Idx v = 0; v < T.nss->counts[0]; ++v) S |= 1u << T.f.at[0][v];
  for (int j : T.nk.joints()) J |= 1u << T.f.at[0][static_cast<Idx>(j)];
  return {S & full & ~(J & full), S & full};
}

NecklaceMap necklace_of_cube(const SSet& delta_m, int m, const CubeObject& o) {
  std::vector<Idx> verts{0};
  for (int s : bits_of(o.S)) verts.push_back(static_cast<Idx>(s));
  verts.push_back(static_cast<Idx>(m));
  std::uint32_t jm = (o.S & ~o.I) | 1u | (1u << m);
  std::vector<int> dims;
  std::vector<std::pair<int, Idx>> beads;
  std::size_t start = 0;
  for (std::size_t i = 1; i < verts.size(); ++i) {
    if (!(jm & (1u << verts[i]))) continue;
    std::vector<Idx> tup(verts.begin() + static_cast<long>(start), verts.begin() + static_cast<long>(i) + 1);
    dims.push_back(static_cast<int>(tup.size()) - 1);
    beads.push_back({static_cast<int>(tup.size()) - 1, delta_index_of_tuple(m, tup)});
    start = i;
  }
  if (dims.empty()) {  // m == 0 cannot occur; guard for the point
    dims = {0};
    beads = {{0, 0}};
  }
  return necklace_from_beads(delta_m, dims, beads, 0, static_cast<Idx>(m));
}

IsoReport nec_cube_iso(const SSet& delta_m, int m) {
  IsoReport rep;
  auto N = tnd_necklaces(delta_m, 0, static_cast<Idx>(m));
  auto Q = cube(m);
  if (N.objects.size() != Q.objects.size()) {
    rep.detail = "object counts differ";
    return rep;
  }
  std::vector<int> phi(N.objects.size());
  std::vector<char> hit(Q.objects.size(), 0);
  for (std::size_t t = 0; t < N.objects.size(); ++t) {
    auto o = cube_of_necklace(m, N.objects[t]);
    int q = Q.object_index(o);
    if (q < 0 || hit[static_cast<std::size_t>(q)]) {
      rep.detail = "object map not a bijection";
      return rep;
    }
    hit[static_cast<std::size_t>(q)] = 1;
    phi[t] = q;
    auto back = necklace_of_cube(delta_m, m, o);
    if (back.nk.dims != N.objects[t].nk.dims || back.f.at != N.objects[t].f.at) {
      rep.detail = "round trip failed on an object";
      return rep;
    }
  }
  for (std::size_t i = 0; i < N.objects.size(); ++i)
    for (std::size_t j = 0; j < N.objects.size(); ++j)
      if (N.leq(static_cast<int>(i), static_cast<int>(j)) != Q.has_mor(phi[i], phi[j])) {
        rep.detail = "morphism sets differ";
        return rep;
      }
  rep.pass = true;
  rep.detail = "isomorphism of categories verified";
  return rep;
}

IsoReport cube_bead_compat(const SSet& delta_m, int m) {
  IsoReport rep;
  auto N = tnd_necklaces(delta_m, 0, static_cast<Idx>(m));
  std::uint32_t full = full_mask(m);
  for (auto& T : N.objects) {
    auto o = cube_of_necklace(m, T);
    auto ivs = intervals(m, o);
    if (static_cast<int>(ivs.size()) != T.nk.beads()) {
      rep.detail = "interval count differs from bead count";
      return rep;
    }
    for (int k = 0; k < T.nk.beads(); ++k) {
      std::set<int> bead_s;
      for (int v = T.nk.offsets[static_cast<std::size_t>(k)];
           v <= T.nk.offsets[static_cast<std::size_t>(k)] + T.nk.dims[static_cast<std::size_t>(k)]; ++v) {
        int w = static_cast<int>(T.f.at[0][static_cast<Idx>(v)]);
        if (full & (1u << w)) bead_s.insert(w);
      }
      if (std::vector<int>(bead_s.begin(), bead_s.end()) != ivs[static_cast<std::size_t>(k)]) {
        rep.detail = "interval content differs from bead image";
        return rep;
      }
    }
  }
  // naturality over every tnd morphism
  for (auto& mor : N.mors) {
    auto& U = N.objects[static_cast<std::size_t>(mor.src)];
    auto& T = N.objects[static_cast<std::size_t>(mor.dst)];
    auto bm = bead_map(U, T, mor.g);
    auto ia = interval_action(m, cube_of_necklace(m, U), cube_of_necklace(m, T));
    if (bm != ia) {
      rep.detail = "bead map and interval action disagree";
      return rep;
    }
  }
  rep.pass = true;
  rep.detail = "bead/interval identification natural";
  return rep;
}

std::uint32_t pm_retract(int m, const CubeObject& o) {
  return o.I | (full_mask(m) & ~o.S);
}

IsoReport pm_retraction(int m) {
  IsoReport rep;
  auto Q = cube(m);
  std::uint32_t full = full_mask(m);
  for (auto& o : Q.objects) {
    if (o.S == full && pm_retract(m, o) != o.I) {
      rep.detail = "r((sigma I)) != I";
      return rep;
    }
    // unit: (I,S) -> (r(I,S), full) must be a morphism
    CubeObject sr{pm_retract(m, o), full};
    if (!(subset(o.I, sr.I) && sr.S == (o.S | sr.I))) {
      rep.detail = "unit component missing";
      return rep;
    }
  }
  for (std::size_t i = 0; i < Q.objects.size(); ++i)
    for (std::size_t j = 0; j < Q.objects.size(); ++j)
      if (Q.has_mor(static_cast<int>(i), static_cast<int>(j)) &&
          !subset(pm_retract(m, Q.objects[i]), pm_retract(m, Q.objects[j]))) {
        rep.detail = "r not monotone";
        return rep;
      }
  rep.pass = true;
  rep.detail = "retraction verified";
  return rep;
}

IsoReport p12_cofinality(int m) {
  IsoReport rep;
  std::uint32_t full = full_mask(m);
  for (std::uint32_t A = 0; A <= full; ++A) {
    if ((A & ~full) || A == 0) continue;
    std::vector<std::uint32_t> small;
    for (std::uint32_t B = 0; B <= full; ++B) {
      int pc = __builtin_popcount(B);
      if ((pc == 1 || pc == 2) && subset(B, A)) small.push_back(B);
    }
    if (small.empty()) {
      rep.detail = "empty comma category";
      return rep;
    }
    std::vector<std::size_t> comp(small.size());
    for (std::size_t i = 0; i < small.size(); ++i) comp[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      while (comp[x] != x) x = comp[x] = comp[comp[x]];
      return x;
    };
    for (std::size_t i = 0; i < small.size(); ++i)
      for (std::size_t j = 0; j < small.size(); ++j)
        if (subset(small[i], small[j])) comp[find(i)] = find(j);
    std::size_t n = 0;
    for (std::size_t i = 0; i < small.size(); ++i)
      if (find(i) == i) ++n;
    if (n != 1) {
      rep.detail = "disconnected comma category";
      return rep;
    }
  }
  rep.pass = true;
  rep.detail = "inclusion of singletons and pairs is cofinal";
  return rep;
}

}  // namespace nck
