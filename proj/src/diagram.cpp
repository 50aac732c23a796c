#include "nck/diagram.hpp"

#include <algorithm>

namespace nck {

void SSetDiagram::validate() const {
  for (std::size_t f = 0; f < arrow.size(); ++f) {
    if (arrow[f].src != value[static_cast<std::size_t>(shape.mors[f].src)] ||
        arrow[f].dst != value[static_cast<std::size_t>(shape.mors[f].dst)])
      throw std::invalid_argument("diagram: arrow endpoints");
    if (!arrow[f].valid()) throw std::invalid_argument("diagram: arrow not simplicial");
  }
  for (int a = 0; a < shape.n_objects; ++a)
    if (!(arrow[static_cast<std::size_t>(shape.identity[static_cast<std::size_t>(a)])].at ==
          identity_map(value[static_cast<std::size_t>(a)]).at))
      throw std::invalid_argument("diagram: identity arrow");
  for (int g = 0; g < shape.n_mors(); ++g)
    for (int f = 0; f < shape.n_mors(); ++f)
      if (shape.composable(g, f) &&
          !(arrow[static_cast<std::size_t>(shape.compose(g, f))].at ==
            compose(arrow[static_cast<std::size_t>(g)], arrow[static_cast<std::size_t>(f)]).at))
        throw std::invalid_argument("diagram: functoriality");
}

void SetDiagram::validate() const {
  for (std::size_t f = 0; f < arrow.size(); ++f) {
    if (arrow[f].size() != size[static_cast<std::size_t>(shape.mors[f].src)])
      throw std::invalid_argument("set diagram: arrow domain");
    for (Idx v : arrow[f])
      if (v >= size[static_cast<std::size_t>(shape.mors[f].dst)])
        throw std::invalid_argument("set diagram: arrow codomain");
  }
  for (int a = 0; a < shape.n_objects; ++a) {
    auto& id = arrow[static_cast<std::size_t>(shape.identity[static_cast<std::size_t>(a)])];
    for (Idx v = 0; v < id.size(); ++v)
      if (id[v] != v) throw std::invalid_argument("set diagram: identity arrow");
  }
  for (int g = 0; g < shape.n_mors(); ++g)
    for (int f = 0; f < shape.n_mors(); ++f)
      if (shape.composable(g, f)) {
        auto& gf = arrow[static_cast<std::size_t>(shape.compose(g, f))];
        for (Idx v = 0; v < gf.size(); ++v)
          if (gf[v] != arrow[static_cast<std::size_t>(g)][arrow[static_cast<std::size_t>(f)][v]])
            throw std::invalid_argument("set diagram: functoriality");
      }
}

SSetDiagram iota(const SetDiagram& D, int trunc) {
  SSetDiagram out;
  out.shape = D.shape;
  for (std::size_t a = 0; a < D.size.size(); ++a) out.value.push_back(discrete_sset(D.size[a], trunc));
  for (std::size_t f = 0; f < D.arrow.size(); ++f) {
    SimplicialMap g{out.value[static_cast<std::size_t>(D.shape.mors[f].src)],
                    out.value[static_cast<std::size_t>(D.shape.mors[f].dst)],
                    {}};
    g.at.assign(static_cast<std::size_t>(trunc) + 1, D.arrow[f]);
    out.arrow.push_back(std::move(g));
  }
  return out;
}

std::vector<int> HDiagram::zeros(int obj, int level, Idx s) const {
  auto t = prods[static_cast<std::size_t>(obj)].decode(level, s);
  std::vector<int> z(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) z[i] = level + 1 - static_cast<int>(t[i]);
  return z;
}

Idx HDiagram::from_zeros(int obj, int level, const std::vector<int>& z) const {
  std::vector<Idx> t(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) t[i] = static_cast<Idx>(level + 1 - z[i]);
  return prods[static_cast<std::size_t>(obj)].encode(level, t);
}

HDiagram h_diagram(int m, int trunc) {
  HDiagram H;
  H.base = cube(m);
  H.dia.shape = H.base.cat;
  auto D1 = standard_simplex(1, trunc);
  for (auto& o : H.base.objects) {
    std::vector<int> cs;
    for (int i = 1; i < m; ++i)
      if (o.I & (1u << i)) cs.push_back(i);
    std::vector<SSet> fs(cs.size(), D1);
    H.prods.push_back(multi_product(fs, trunc));
    H.dia.value.push_back(H.prods.back().prod);
    H.coords.push_back(std::move(cs));
  }
  for (auto& mor : H.base.cat.mors) {
    int a = mor.src, b = mor.dst;
    const auto& oa = H.base.objects[static_cast<std::size_t>(a)];
    const auto& ob = H.base.objects[static_cast<std::size_t>(b)];
    SimplicialMap f{H.dia.value[static_cast<std::size_t>(a)], H.dia.value[static_cast<std::size_t>(b)], {}};
    f.at.resize(static_cast<std::size_t>(trunc) + 1);
    for (int n = 0; n <= trunc; ++n) {
      f.at[n].resize(H.dia.value[static_cast<std::size_t>(a)]->counts[n]);
      for (Idx s = 0; s < f.at[n].size(); ++s) {
        auto za = H.zeros(a, n, s);
        std::vector<int> zb(H.coords[static_cast<std::size_t>(b)].size());
        for (std::size_t w = 0; w < zb.size(); ++w) {
          int c = H.coords[static_cast<std::size_t>(b)][w];
          auto it = std::find(H.coords[static_cast<std::size_t>(a)].begin(),
                              H.coords[static_cast<std::size_t>(a)].end(), c);
          if (it != H.coords[static_cast<std::size_t>(a)].end())
            zb[w] = za[static_cast<std::size_t>(it - H.coords[static_cast<std::size_t>(a)].begin())];
          else if (oa.S & (1u << c))
            zb[w] = 0;  // constant 1
          else
            zb[w] = n + 1;  // constant 0
        }
        (void)ob;
        f.at[n][s] = H.from_zeros(b, n, zb);
      }
    }
    H.dia.arrow.push_back(std::move(f));
  }
  H.dia.validate();
  return H;
}

std::size_t FinSetPair::x_size() const {
  return static_cast<std::size_t>(std::count(in_x.begin(), in_x.end(), 1));
}

std::vector<std::size_t> FinSetPair::x_elems() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < in_x.size(); ++i)
    if (in_x[i]) out.push_back(i);
  return out;
}

std::vector<Idx> GDiagram::tuple(int obj, Idx e) const {
  std::size_t t = intervals(base.m, base.objects[static_cast<std::size_t>(obj)]).size();
  std::vector<Idx> out(t);
  std::size_t y = pair.y_size();
  for (std::size_t i = t; i-- > 0;) {
    out[i] = static_cast<Idx>(e % y);
    e = static_cast<Idx>(e / y);
  }
  return out;
}

Idx GDiagram::from_tuple(int obj, const std::vector<Idx>& t) const {
  (void)obj;
  std::size_t r = 0;
  for (Idx v : t) r = r * pair.y_size() + v;
  return static_cast<Idx>(r);
}

GDiagram g_diagram(int m, const FinSetPair& pair) {
  if (pair.y.empty()) throw precondition_error("g_diagram: Y must be non-empty");
  GDiagram G;
  G.base = cube(m);
  G.pair = pair;
  G.dia.shape = G.base.cat.opposite();
  std::uint32_t full = m >= 2 ? (((1u << (m - 1)) - 1u) << 1) : 0u;
  G.top = G.base.object_index({full, full});
  for (std::size_t a = 0; a < G.base.objects.size(); ++a) {
    if (static_cast<int>(a) == G.top) {
      G.dia.size.push_back(pair.x_size());
    } else {
      std::size_t t = intervals(m, G.base.objects[a]).size();
      std::size_t n = 1;
      for (std::size_t i = 0; i < t; ++i) n *= pair.y_size();
      G.dia.size.push_back(n);
    }
  }
  auto xe = pair.x_elems();
  // arrow indexed like cube.cat.mors; cube morphism f: a -> b acts G(b) -> G(a)
  for (auto& mor : G.base.cat.mors) {
    int a = mor.src, b = mor.dst;
    std::vector<Idx> act(G.dia.size[static_cast<std::size_t>(b)]);
    auto ia = interval_action(m, G.base.objects[static_cast<std::size_t>(a)],
                              G.base.objects[static_cast<std::size_t>(b)]);
    for (Idx e = 0; e < act.size(); ++e) {
      std::vector<Idx> src_t;
      if (b == G.top) {
        src_t.assign(ia.size(), static_cast<Idx>(xe[e]));
      } else {
        auto tb = G.tuple(b, e);
        src_t.resize(ia.size());
        for (std::size_t i = 0; i < ia.size(); ++i) src_t[i] = tb[static_cast<std::size_t>(ia[i])];
      }
      if (a == G.top) {
        // only the identity lands here; element is the X-index itself
        if (a != b) throw std::logic_error("g_diagram: unexpected morphism out of the top object");
        act[e] = e;
      } else {
        act[e] = G.from_tuple(a, src_t);
      }
    }
    G.dia.arrow.push_back(std::move(act));
  }
  G.dia.validate();
  return G;
}

}  // namespace nck
