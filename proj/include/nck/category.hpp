#pragma once

#include <unordered_map>
#include <vector>

#include "nck/errors.hpp"

namespace nck {

// A small category given by explicit composition tables.  Morphism lists
// include identities.
struct FiniteCategory {
  struct Mor {
    int src = 0, dst = 0;
  };
  int n_objects = 0;
  std::vector<Mor> mors;
  std::vector<int> identity;            // per object, index into mors
  // comp[g] maps f -> g . f; entries exist exactly for composable pairs
  std::vector<std::unordered_map<int, int>> comp;

  int n_mors() const { return static_cast<int>(mors.size()); }
  bool composable(int g, int f) const { return mors[f].dst == mors[g].src; }
  int compose(int g, int f) const {
    auto& row = comp[static_cast<std::size_t>(g)];
    auto it = row.find(f);
    return it == row.end() ? -1 : it->second;
  }
  void set_comp(int g, int f, int gf) { comp[static_cast<std::size_t>(g)][f] = gf; }

  void validate() const;            // identities + associativity
  FiniteCategory opposite() const;
  bool is_poset() const;            // at most one morphism between any two objects
};

}  // namespace nck
