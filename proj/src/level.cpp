#include "nck/level.hpp"

#include <algorithm>

namespace nck {

PLevel p_level(int m, const FinSetPair& pair) {
  if (pair.y.empty()) throw precondition_error("p_level: Y must be non-empty");
  PLevel out;
  out.m = m;
  out.pair = pair;
  out.delta = standard_simplex(m, m);
  {
    auto D = out.delta;
    std::vector<std::vector<char>> keep(static_cast<std::size_t>(m) + 1);
    for (int n = 0; n <= m; ++n) {
      keep[n].resize(D->counts[n]);
      for (Idx s = 0; s < D->counts[n]; ++s) {
        auto& t = D->vertex_tuple(n, s);
        std::vector<Idx> u(t.begin(), t.end());
        std::sort(u.begin(), u.end());
        u.erase(std::unique(u.begin(), u.end()), u.end());
        keep[n][s] = u.size() < static_cast<std::size_t>(m) + 1;
      }
    }
    auto sc = subcomplex(D, keep);
    out.bd = sc.sub;
    out.bd_incl = sc.incl;
  }

  std::vector<SSet> parts;
  for (std::size_t y = 0; y < pair.y.size(); ++y)
    parts.push_back(pair.in_x[y] ? out.delta : out.bd);
  auto cp = coproduct(parts, m);
  // glue vertex i of every copy
  std::vector<std::tuple<int, Idx, Idx>> pairs;
  auto vtx_in_copy = [&](std::size_t c, int i) {
    // vertex i of Delta[m] or dDelta[m] (vertices of both are 0..m in order)
    return cp.in[c].at[0][static_cast<Idx>(i)];
  };
  for (int i = 0; i <= m; ++i)
    for (std::size_t c = 1; c < parts.size(); ++c)
      pairs.push_back({0, vtx_in_copy(0, i), vtx_in_copy(c, i)});
  auto q = quotient(cp.sum, pairs);
  out.P = q.q;
  for (std::size_t c = 0; c < parts.size(); ++c) {
    out.copy_space.push_back(parts[c]);
    out.copy_in.push_back(compose(q.proj, cp.in[c]));
  }
  out.vertex.resize(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) out.vertex[static_cast<std::size_t>(i)] = out.copy_in[0].at[0][static_cast<Idx>(i)];

  // Q: fold the copies over Delta[m]
  SimplicialMap fold{cp.sum, out.delta, {}};
  fold.at.resize(static_cast<std::size_t>(m) + 1);
  for (int n = 0; n <= m; ++n) fold.at[n].resize(cp.sum->counts[n]);
  for (std::size_t c = 0; c < parts.size(); ++c) {
    auto to_delta = pair.in_x[c] ? identity_map(out.delta) : out.bd_incl;
    for (int n = 0; n <= m; ++n)
      for (Idx s = 0; s < parts[c]->counts[n]; ++s)
        fold.at[n][cp.in[c].at[n][s]] = to_delta.at[n][s];
  }
  out.Q = induce_on_quotient(q, fold);

  out.copy_of.resize(static_cast<std::size_t>(m) + 1);
  for (int n = 0; n <= m; ++n) out.copy_of[n].assign(out.P->counts[n], -1);
  for (std::size_t c = 0; c < parts.size(); ++c)
    for (int n = 1; n <= m; ++n)
      for (Idx s = 0; s < parts[c]->counts[n]; ++s)
        if (!parts[c]->is_degenerate(n, s)) out.copy_of[n][out.copy_in[c].at[n][s]] = static_cast<int>(c);
  return out;
}

namespace {

int find_object(const NecklaceCategory& C, const std::vector<int>& dims,
                const std::vector<std::vector<Idx>>& at) {
  for (std::size_t i = 0; i < C.objects.size(); ++i)
    if (C.objects[i].nk.dims == dims && C.objects[i].f.at == at) return static_cast<int>(i);
  return -1;
}

}  // namespace

Pushforward q_pushforward(int m, const FinSetPair& pair) {
  Pushforward out;
  out.pl = p_level(m, pair);
  out.total = tnd_necklaces(out.pl.P, out.pl.vertex[0], out.pl.vertex[static_cast<std::size_t>(m)]);
  out.base = tnd_necklaces(out.pl.delta, 0, static_cast<Idx>(m));

  out.functorial = true;
  for (auto& T : out.total.objects) {
    auto pushed = compose(out.pl.Q, T.f);
    int b = find_object(out.base, T.nk.dims, pushed.at);
    if (b < 0) {
      out.functorial = false;
      out.detail = "pushforward of an object is not totally non-degenerate";
      return out;
    }
    out.on_obj.push_back(b);
  }
  for (auto& g : out.total.mors) {
    int found = -1;
    for (std::size_t j = 0; j < out.base.mors.size(); ++j)
      if (out.base.mors[j].src == out.on_obj[static_cast<std::size_t>(g.src)] &&
          out.base.mors[j].dst == out.on_obj[static_cast<std::size_t>(g.dst)] &&
          out.base.mors[j].g.at == g.g.at) {
        found = static_cast<int>(j);
        break;
      }
    if (found < 0) {
      out.functorial = false;
      out.detail = "pushforward of a morphism missing in the base";
      return out;
    }
    out.on_mor.push_back(found);
  }

  // discrete fibration: unique lift of every base morphism at every object
  // over its target
  out.discrete_fibration = true;
  for (std::size_t g = 0; g < out.base.mors.size() && out.discrete_fibration; ++g)
    for (std::size_t t = 0; t < out.total.objects.size(); ++t) {
      if (out.on_obj[t] != out.base.mors[g].dst) continue;
      int lifts = 0;
      for (std::size_t h = 0; h < out.total.mors.size(); ++h)
        if (out.total.mors[h].dst == static_cast<int>(t) &&
            out.on_mor[h] == static_cast<int>(g))
          ++lifts;
      if (lifts != 1) {
        out.discrete_fibration = false;
        out.detail = "lift count " + std::to_string(lifts) + " for a base morphism";
      }
    }

  // fibers vs G(X -> Y)
  auto G = g_diagram(m, pair);
  auto xe = pair.x_elems();
  auto elem_of = [&](std::size_t t) -> std::pair<int, Idx> {
    auto& T = out.total.objects[t];
    int b = out.on_obj[t];
    int cq = G.base.object_index(cube_of_necklace(m, out.base.objects[static_cast<std::size_t>(b)]));
    std::vector<Idx> copies;
    for (int k = 0; k < T.nk.beads(); ++k) {
      // image of the top bead simplex identifies the copy
      int dim = T.nk.dims[static_cast<std::size_t>(k)];
      std::vector<int> phi(static_cast<std::size_t>(dim) + 1);
      for (int i = 0; i <= dim; ++i) phi[static_cast<std::size_t>(i)] = T.nk.offsets[static_cast<std::size_t>(k)] + i;
      std::vector<Idx> tup(phi.begin(), phi.end());
      Idx bead_sx = ordered_index(T.nss, tup);
      int c = out.pl.copy_of[dim][T.f.at[dim][bead_sx]];
      copies.push_back(static_cast<Idx>(c));
    }
    if (out.base.objects[static_cast<std::size_t>(b)].nk.dims == std::vector<int>{m}) {
      // top object: element is the X-rank of the single copy
      auto it = std::find(xe.begin(), xe.end(), static_cast<std::size_t>(copies[0]));
      if (it == xe.end()) return {cq, static_cast<Idx>(-1)};
      return {cq, static_cast<Idx>(it - xe.begin())};
    }
    return {cq, G.from_tuple(cq, copies)};
  };

  out.fibers_match = true;
  std::vector<std::vector<Idx>> fiber_elem(out.total.objects.size());
  std::vector<std::pair<int, Idx>> tags(out.total.objects.size());
  {
    std::vector<std::vector<char>> seen(G.base.objects.size());
    for (std::size_t q2 = 0; q2 < G.base.objects.size(); ++q2) seen[q2].assign(G.dia.size[q2], 0);
    for (std::size_t t = 0; t < out.total.objects.size(); ++t) {
      tags[t] = elem_of(t);
      auto [cq, e] = tags[t];
      if (e == static_cast<Idx>(-1) || e >= G.dia.size[static_cast<std::size_t>(cq)] ||
          seen[static_cast<std::size_t>(cq)][e]) {
        out.fibers_match = false;
        out.detail = "fiber element collision or out of range";
        return out;
      }
      seen[static_cast<std::size_t>(cq)][e] = 1;
    }
    for (std::size_t q2 = 0; q2 < G.base.objects.size(); ++q2)
      if (std::find(seen[q2].begin(), seen[q2].end(), 0) != seen[q2].end()) {
        out.fibers_match = false;
        out.detail = "fiber smaller than the predicted set";
        return out;
      }
  }
  // naturality: the unique lift realizes the G-action
  for (std::size_t h = 0; h < out.total.mors.size(); ++h) {
    auto& tm = out.total.mors[h];
    auto [cu, eu] = tags[static_cast<std::size_t>(tm.src)];
    auto [ct, et] = tags[static_cast<std::size_t>(tm.dst)];
    int cmor = G.base.mor_index(cu, ct);
    if (cmor < 0) {
      out.fibers_match = false;
      out.detail = "missing cube morphism under a lift";
      return out;
    }
    if (G.dia.arrow[static_cast<std::size_t>(cmor)][et] != eu) {
      out.fibers_match = false;
      out.detail = "fiber bijection not natural";
      return out;
    }
  }
  out.detail = "discrete fibration with fibers G(X -> Y)";
  return out;
}

SpineLevel spine_level(int m, std::size_t x_size) {
  SpineLevel out;
  auto sp = spine(m, m);
  std::vector<SSet> parts(x_size, sp);
  auto cp = coproduct(parts, m);
  std::vector<std::tuple<int, Idx, Idx>> pairs;
  for (int i = 0; i <= m; ++i)
    for (std::size_t c = 1; c < parts.size(); ++c)
      pairs.push_back({0, cp.in[0].at[0][static_cast<Idx>(i)], cp.in[c].at[0][static_cast<Idx>(i)]});
  auto q = quotient(cp.sum, pairs);
  out.L = q.q;
  out.v0 = compose(q.proj, cp.in[0]).at[0][0];
  out.vm = compose(q.proj, cp.in[0]).at[0][static_cast<Idx>(m)];
  out.necs = tnd_necklaces(out.L, out.v0, out.vm);
  out.expected = 1;
  for (int i = 0; i < m; ++i) out.expected *= x_size;
  out.count_ok = out.necs.objects.size() == out.expected;
  out.discrete = out.necs.mors.size() == out.necs.objects.size();  // identities only
  return out;
}

InnerHomIso inner_hom_iso(int m, const FinSetPair& pair, int i, int j) {
  if (!(0 <= i && i < j && j <= m && j - i < m))
    throw std::invalid_argument("inner_hom_iso: need 0 < j - i < m");
  InnerHomIso out;
  auto P1 = p_level(m, pair);
  FinSetPair all = pair;
  std::fill(all.in_x.begin(), all.in_x.end(), 1);
  auto P2 = p_level(m, all);

  // inc: P1 -> P2, copywise
  SimplicialMap inc{P1.P, P2.P, {}};
  inc.at.resize(static_cast<std::size_t>(m) + 1);
  for (int n = 0; n <= m; ++n) inc.at[n].assign(P1.P->counts[n], static_cast<Idx>(-1));
  for (std::size_t c = 0; c < pair.y.size(); ++c) {
    SimplicialMap into = pair.in_x[c] ? P2.copy_in[c] : compose(P2.copy_in[c], P1.bd_incl);
    for (int n = 0; n <= m; ++n)
      for (Idx s = 0; s < P1.copy_space[c]->counts[n]; ++s) {
        Idx tgt = into.at[n][s];
        Idx src = P1.copy_in[c].at[n][s];
        if (inc.at[n][src] != static_cast<Idx>(-1) && inc.at[n][src] != tgt) {
          out.detail = "inclusion does not descend";
          return out;
        }
        inc.at[n][src] = tgt;
      }
  }
  if (!inc.valid()) {
    out.detail = "inclusion not simplicial";
    return out;
  }

  out.sub = tnd_necklaces(P1.P, P1.vertex[static_cast<std::size_t>(i)], P1.vertex[static_cast<std::size_t>(j)]);
  out.whole = tnd_necklaces(P2.P, P2.vertex[static_cast<std::size_t>(i)], P2.vertex[static_cast<std::size_t>(j)]);
  if (out.sub.objects.size() != out.whole.objects.size()) {
    out.detail = "object counts differ";
    return out;
  }
  std::vector<int> phi(out.sub.objects.size());
  std::vector<char> hit(out.whole.objects.size(), 0);
  for (std::size_t t = 0; t < out.sub.objects.size(); ++t) {
    auto pushed = compose(inc, out.sub.objects[t].f);
    int w = find_object(out.whole, out.sub.objects[t].nk.dims, pushed.at);
    if (w < 0 || hit[static_cast<std::size_t>(w)]) {
      out.detail = "not a bijection on objects";
      return out;
    }
    hit[static_cast<std::size_t>(w)] = 1;
    phi[t] = w;
  }
  for (std::size_t a = 0; a < out.sub.objects.size(); ++a)
    for (std::size_t b = 0; b < out.sub.objects.size(); ++b)
      if (out.sub.leq(static_cast<int>(a), static_cast<int>(b)) !=
          out.whole.leq(phi[a], phi[b])) {
        out.detail = "morphisms differ";
        return out;
      }
  out.pass = true;
  out.detail = "necklace categories agree away from the long hom";
  return out;
}

}  // namespace nck
