#include "nck/category.hpp"

#include <stdexcept>

namespace nck {

void FiniteCategory::validate() const {
  if (static_cast<int>(identity.size()) != n_objects)
    throw std::invalid_argument("category: identity table size");
  for (int a = 0; a < n_objects; ++a) {
    int e = identity[static_cast<std::size_t>(a)];
    if (mors[static_cast<std::size_t>(e)].src != a || mors[static_cast<std::size_t>(e)].dst != a)
      throw std::invalid_argument("category: identity endpoints");
  }
  std::vector<std::vector<int>> by_dst(static_cast<std::size_t>(n_objects));
  for (int f = 0; f < n_mors(); ++f) by_dst[static_cast<std::size_t>(mors[static_cast<std::size_t>(f)].dst)].push_back(f);
  for (int g = 0; g < n_mors(); ++g) {
    auto& gm = mors[static_cast<std::size_t>(g)];
    auto& row = comp[static_cast<std::size_t>(g)];
    for (auto& [f, gf] : row) {
      if (!composable(g, f)) throw std::invalid_argument("category: composite of non-composable pair");
      if (gf < 0 || mors[static_cast<std::size_t>(gf)].src != mors[static_cast<std::size_t>(f)].src ||
          mors[static_cast<std::size_t>(gf)].dst != gm.dst)
        throw std::invalid_argument("category: bad composite");
    }
    for (int f : by_dst[static_cast<std::size_t>(gm.src)])
      if (!row.count(f)) throw std::invalid_argument("category: missing composite");
    if (compose(identity[static_cast<std::size_t>(gm.dst)], g) != g ||
        compose(g, identity[static_cast<std::size_t>(gm.src)]) != g)
      throw std::invalid_argument("category: unit law");
  }
  for (int h = 0; h < n_mors(); ++h)
    for (auto& [g, hg] : comp[static_cast<std::size_t>(h)])
      for (auto& [f, gf] : comp[static_cast<std::size_t>(g)])
        if (compose(h, gf) != compose(hg, f))
          throw std::invalid_argument("category: associativity");
}

FiniteCategory FiniteCategory::opposite() const {
  FiniteCategory op;
  op.n_objects = n_objects;
  op.identity = identity;
  op.mors.resize(mors.size());
  for (std::size_t f = 0; f < mors.size(); ++f) op.mors[f] = {mors[f].dst, mors[f].src};
  op.comp.assign(mors.size(), {});
  for (std::size_t g = 0; g < mors.size(); ++g)
    for (auto& [f, gf] : comp[g]) op.comp[static_cast<std::size_t>(f)][static_cast<int>(g)] = gf;
  return op;
}

bool FiniteCategory::is_poset() const {
  std::vector<std::vector<int>> cnt(static_cast<std::size_t>(n_objects),
                                    std::vector<int>(static_cast<std::size_t>(n_objects), 0));
  for (auto& m : mors)
    if (++cnt[static_cast<std::size_t>(m.src)][static_cast<std::size_t>(m.dst)] > 1) return false;
  return true;
}

}  // namespace nck
