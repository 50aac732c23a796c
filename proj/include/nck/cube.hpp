#pragma once

#include <cstdint>

#include "nck/category.hpp"
#include "nck/necklace.hpp"

namespace nck {

// Objects of Cube_m: pairs I subset S subset {1..m-1}, as bitmasks over bits
// 1..m-1.  A morphism (I',S') -> (I,S) exists iff I' subset I and S = S' | I.
struct CubeObject {
  std::uint32_t I = 0, S = 0;
};
bool operator==(const CubeObject& a, const CubeObject& b);

struct CubeCategory {
  int m = 1;
  std::vector<CubeObject> objects;  // ordered by (S, I)
  FiniteCategory cat;               // poset; morphisms include identities

  int object_index(const CubeObject& o) const;
  bool has_mor(int from, int to) const;
  int mor_index(int from, int to) const;  // -1 if none
  // generating morphisms: (I \ {j}, S) -> (I,S) and (I \ {j}, S \ {j}) -> (I,S), j in I
  std::vector<int> generators() const;
};
CubeCategory cube(int m);

// Interval functor: the |S\I|+1 intervals of (I,S), each the sorted list of
// S-vertices falling in the gap between consecutive joints
// within {0..m} (endpoints included).
std::vector<std::vector<int>> intervals(int m, const CubeObject& o);
// action on intervals along a morphism (I',S') -> (I,S): position of the
// target interval containing each source interval
std::vector<int> interval_action(int m, const CubeObject& from, const CubeObject& to);

// The isomorphism Nec^tnd(Delta[m]; 0, m) ~ Cube_m.
CubeObject cube_of_necklace(int m, const NecklaceMap& T);
NecklaceMap necklace_of_cube(const SSet& delta_m, int m, const CubeObject& o);

struct IsoReport {
  bool pass = false;
  std::string detail;
};
// verifies the iso is a bijection on objects and morphisms in both directions
IsoReport nec_cube_iso(const SSet& delta_m, int m);
// naturality of bead-set vs interval-set identification
IsoReport cube_bead_compat(const SSet& delta_m, int m);

// P_m = subsets of {1..m-1}; sigma(I) = (I, full), r(I,S) = I | (full & ~S).
std::uint32_t pm_retract(int m, const CubeObject& o);
IsoReport pm_retraction(int m);   // r sigma = id, monotonicity, unit I -> sigma r
IsoReport p12_cofinality(int m);  // P^{1,2} -> P^{>=1} comma categories

}  // namespace nck
