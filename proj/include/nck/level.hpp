#pragma once

#include "nck/colim.hpp"
#include "nck/diagram.hpp"
#include "nck/necklace.hpp"

namespace nck {

// The m-th level P of the pre-nerve glue: pushout of coprod_{m+1} Delta[0]
// <- coprod_{m+1} coprod_Y Delta[0] -> (coprod_{Y\X} dDelta[m]) u (coprod_X
// Delta[m]), with the projection Q to Delta[m].
struct PLevel {
  int m = 0;
  FinSetPair pair;
  SSet delta;                       // Delta[m]
  SSet bd;                          // dDelta[m]
  SimplicialMap bd_incl;            // dDelta[m] -> Delta[m]
  SSet P;
  SimplicialMap Q;                  // P -> Delta[m]
  std::vector<Idx> vertex;          // vertex[i] lies over i
  std::vector<SSet> copy_space;     // per y in Y
  std::vector<SimplicialMap> copy_in;  // copy -> P
  std::vector<std::vector<int>> copy_of;  // per level/simplex of P: copy id, -1 if ambiguous
};
PLevel p_level(int m, const FinSetPair& pair);

// Postcomposition with Q as a functor Nec^tnd(P; 0, m) -> Nec^tnd(Delta[m]; 0, m),
// checked to be a discrete fibration with fibers G(X -> Y).
struct Pushforward {
  PLevel pl;
  NecklaceCategory total, base;
  std::vector<int> on_obj, on_mor;
  bool functorial = false;
  bool discrete_fibration = false;
  bool fibers_match = false;  // natural bijection with g_diagram
  std::string detail;
};
Pushforward q_pushforward(int m, const FinSetPair& pair);

// The m-th level of L(Sp[m] x X): |X|^m necklaces, no non-identity morphisms.
struct SpineLevel {
  SSet L;
  Idx v0 = 0, vm = 0;
  NecklaceCategory necs;
  std::size_t expected = 0;
  bool discrete = false;
  bool count_ok = false;
};
SpineLevel spine_level(int m, std::size_t x_size);

// For 0 < j - i < m the inclusion P(X -> Y) -> P(Y -> Y) induces an
// isomorphism Nec^tnd(P; i, j) ~ Nec^tnd(L(Delta[m] x Y); i, j).
struct InnerHomIso {
  bool pass = false;
  std::string detail;
  NecklaceCategory sub, whole;
};
InnerHomIso inner_hom_iso(int m, const FinSetPair& pair, int i, int j);

}  // namespace nck
