#include "nck/colim.hpp"

#include <algorithm>
#include <numeric>

namespace nck {

ColimitResult colimit(const SSetDiagram& D, int trunc) {
  auto cp = coproduct(D.value, trunc);
  std::vector<std::tuple<int, Idx, Idx>> pairs;
  for (std::size_t f = 0; f < D.arrow.size(); ++f) {
    int a = D.shape.mors[f].src, b = D.shape.mors[f].dst;
    if (static_cast<int>(f) == D.shape.identity[static_cast<std::size_t>(a)]) continue;
    for (int n = 0; n <= trunc; ++n)
      for (Idx s = 0; s < D.value[static_cast<std::size_t>(a)]->counts[n]; ++s)
        pairs.push_back({n, cp.in[static_cast<std::size_t>(a)].at[n][s],
                         cp.in[static_cast<std::size_t>(b)].at[n][D.arrow[f].at[n][s]]});
  }
  auto q = quotient(cp.sum, pairs);
  ColimitResult out;
  out.object = q.q;
  for (std::size_t a = 0; a < D.value.size(); ++a) out.legs.push_back(compose(q.proj, cp.in[a]));
  return out;
}

SetColimitResult set_colimit(const SetDiagram& D) {
  std::vector<std::size_t> off(D.size.size(), 0);
  std::size_t tot = 0;
  for (std::size_t a = 0; a < D.size.size(); ++a) {
    off[a] = tot;
    tot += D.size[a];
  }
  std::vector<std::size_t> uf(tot);
  std::iota(uf.begin(), uf.end(), 0u);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (std::size_t f = 0; f < D.arrow.size(); ++f) {
    std::size_t a = static_cast<std::size_t>(D.shape.mors[f].src);
    std::size_t b = static_cast<std::size_t>(D.shape.mors[f].dst);
    for (Idx e = 0; e < D.size[a]; ++e) {
      auto x = find(off[a] + e), y = find(off[b] + D.arrow[f][e]);
      if (x != y) uf[std::max(x, y)] = std::min(x, y);
    }
  }
  SetColimitResult out;
  std::vector<Idx> cls(tot, static_cast<Idx>(-1));
  for (std::size_t x = 0; x < tot; ++x) {
    auto r = find(x);
    if (cls[r] == static_cast<Idx>(-1)) cls[r] = static_cast<Idx>(out.size++);
    cls[x] = cls[r];
  }
  for (std::size_t a = 0; a < D.size.size(); ++a)
    out.legs.emplace_back(cls.begin() + static_cast<long>(off[a]),
                          cls.begin() + static_cast<long>(off[a] + D.size[a]));
  return out;
}

WeightedColimitResult weighted_colimit(const SSetDiagram& W, const SSetDiagram& F, int trunc) {
  if (W.shape.n_objects != F.shape.n_objects || W.shape.mors.size() != F.shape.mors.size())
    throw std::invalid_argument("weighted_colimit: shape mismatch");
  WeightedColimitResult out;
  std::vector<SSet> parts;
  for (std::size_t a = 0; a < F.value.size(); ++a) {
    out.prods.push_back(product(F.value[a], W.value[a], trunc));
    parts.push_back(out.prods.back().prod);
  }
  auto cp = coproduct(parts, trunc);
  std::vector<std::tuple<int, Idx, Idx>> pairs;
  for (std::size_t f = 0; f < F.arrow.size(); ++f) {
    std::size_t a = static_cast<std::size_t>(F.shape.mors[f].src);
    std::size_t b = static_cast<std::size_t>(F.shape.mors[f].dst);
    if (static_cast<int>(f) == F.shape.identity[a]) continue;
    for (int n = 0; n <= trunc; ++n)
      for (Idx s = 0; s < F.value[a]->counts[n]; ++s)
        for (Idx w = 0; w < W.value[b]->counts[n]; ++w) {
          Idx left = out.prods[a].encode(n, {s, W.arrow[f].at[n][w]});
          Idx right = out.prods[b].encode(n, {F.arrow[f].at[n][s], w});
          pairs.push_back({n, cp.in[a].at[n][left], cp.in[b].at[n][right]});
        }
  }
  auto q = quotient(cp.sum, pairs);
  out.object = q.q;
  for (std::size_t a = 0; a < parts.size(); ++a) out.legs.push_back(compose(q.proj, cp.in[a]));
  return out;
}

CatFunctor necklace_inclusion(const NecklaceCategory& sub, const NecklaceCategory& big) {
  CatFunctor J;
  for (auto& o : sub.objects) {
    int found = -1;
    for (std::size_t j = 0; j < big.objects.size(); ++j)
      if (big.objects[j].nk.dims == o.nk.dims && big.objects[j].f.at == o.f.at) {
        found = static_cast<int>(j);
        break;
      }
    if (found < 0) throw std::invalid_argument("necklace_inclusion: object not present");
    J.ob.push_back(found);
  }
  for (auto& m : sub.mors) {
    int found = -1;
    for (std::size_t j = 0; j < big.mors.size(); ++j)
      if (big.mors[j].src == J.ob[static_cast<std::size_t>(m.src)] &&
          big.mors[j].dst == J.ob[static_cast<std::size_t>(m.dst)] && big.mors[j].g.at == m.g.at) {
        found = static_cast<int>(j);
        break;
      }
    if (found < 0) throw std::invalid_argument("necklace_inclusion: morphism not present");
    J.mor.push_back(found);
  }
  return J;
}

SSetDiagram restrict_diagram(const SSetDiagram& F, const FiniteCategory& domain, const CatFunctor& J) {
  SSetDiagram out;
  out.shape = domain;
  for (int a : J.ob) out.value.push_back(F.value[static_cast<std::size_t>(a)]);
  for (int f : J.mor) out.arrow.push_back(F.arrow[static_cast<std::size_t>(f)]);
  // re-point endpoints (shared ssets, the maps are unchanged)
  return out;
}

ReductionReport final_reduction_check(const FiniteCategory& domain, const CatFunctor& J,
                                      const SSetDiagram& F, int trunc, bool bounds_complete) {
  ReductionReport rep;
  auto FJ = restrict_diagram(F, domain, J);
  auto small = colimit(FJ, trunc);
  auto big = colimit(F, trunc);
  // induced comparison: class of (a', s) |-> class of (J a', s)
  bool ok = true;
  std::string why;
  std::vector<std::vector<Idx>> cmp(static_cast<std::size_t>(trunc) + 1);
  for (int n = 0; n <= trunc && ok; ++n) {
    cmp[n].assign(small.object->counts[n], static_cast<Idx>(-1));
    for (std::size_t a = 0; a < FJ.value.size() && ok; ++a)
      for (Idx s = 0; s < FJ.value[a]->counts[n]; ++s) {
        Idx c = small.legs[a].at[n][s];
        Idx d = big.legs[static_cast<std::size_t>(J.ob[a])].at[n][s];
        if (cmp[n][c] == static_cast<Idx>(-1)) cmp[n][c] = d;
        else if (cmp[n][c] != d) {
          ok = false;
          why = "comparison map not well-defined";
        }
      }
    if (!ok) break;
    std::vector<char> hit(big.object->counts[n], 0);
    for (Idx c = 0; c < cmp[n].size(); ++c) {
      if (cmp[n][c] == static_cast<Idx>(-1)) continue;
      if (hit[cmp[n][c]]) {
        ok = false;
        why = "comparison map not injective";
      }
      hit[cmp[n][c]] = 1;
    }
    if (ok && (small.object->counts[n] != big.object->counts[n])) {
      ok = false;
      why = "comparison map not bijective";
    }
  }
  if (ok) {
    rep.status = CertStatus::pass;
    rep.detail = "restricted colimit agrees with the full colimit";
  } else {
    rep.status = bounds_complete ? CertStatus::fail : CertStatus::inconclusive;
    rep.detail = why;
  }
  return rep;
}

}  // namespace nck
