#pragma once

#include <map>
#include <array>

#include "nck/colim.hpp"
#include "nck/level.hpp"

namespace nck {

// A product of copies of Delta[1] with named coordinates.  A level-k simplex
// is a tuple of monotone maps [k] -> [1], each encoded by its number of
// zeros z in 0..k+1 (the Delta[1] simplex index is k+1-z).
struct CubePower {
  std::vector<int> coords;
  ProductSSet p;

  std::vector<int> zeros(int level, Idx s) const;
  Idx from_zeros(int level, const std::vector<int>& z) const;
};
CubePower cube_power(std::vector<int> coords, int trunc);

// Simplicially enriched category with explicit finite hom objects.
struct EnrichedCategory {
  int n_objects = 0;
  int trunc = 0;
  std::vector<std::vector<SSet>> hom;  // hom[i][j]
  std::vector<Idx> id_vertex;          // in hom[i][i]
  struct Comp {
    ProductSSet prod;       // hom(i,j) x hom(j,k)
    SimplicialMap map;      // -> hom(i,k)
  };
  std::map<std::array<int, 3>, Comp> comp;

  const Comp& comp_at(int i, int j, int k) const { return comp.at({i, j, k}); }
  Idx identity_at_level(int i, int level) const;  // degenerate identity simplex
  void validate() const;                          // units + associativity, exhaustive
};

// The directed enriched category c^h[m]: hom(i,j) = prod_{i<w<j} Delta[1];
// composition inserts a constant-1 coordinate at the middle object.
struct ChCat {
  EnrichedCategory C;
  std::vector<std::vector<CubePower>> homp;  // codecs per (i,j), i <= j
};
ChCat ch_standard(int m, int trunc);

// hom action of the coface d^ell: Hom_{c^h[m]}(i,j) -> Hom_{c^h[m+1]}(d i, d j),
// inserting a constant-0 coordinate at ell when i < ell <= j.
SimplicialMap ch_coface_hom(const ChCat& small, const ChCat& big, int ell, int i, int j);

// Hom_{c^h T}(alpha, omega) for a necklace T: coordinates are the interior
// vertices of T.
CubePower ch_hom_necklace(const Necklace& nk, int trunc);

// Hom_{c^h K}(a, b) as the colimit over the necklace category.  With
// tnd = true the (final) tnd poset is used and K must be 1-ordered;
// otherwise the bounded full category is used (an approximation unless the
// bounds dominate every necklace).
struct ChHom {
  NecklaceCategory necs;
  std::vector<CubePower> homs;  // per object
  SSetDiagram dia;
  ColimitResult colim;
};
ChHom ch_hom(const SSet& K, Idx a, Idx b, int trunc, bool tnd = true, int max_beads = 0,
             int max_bead_dim = 0);

// Sigma_m X: objects 0..m, hom(i,j) = X^(j-i), composition by concatenation.
struct SigmaCat {
  EnrichedCategory C;
  std::vector<std::vector<ProductSSet>> homp;
};
SigmaCat sigma_m(const SSet& X, int m, int trunc);

// Hom_{cP}(i, j) for the pre-nerve level P(X -> Y): the long hom (0, m) is
// the weighted colimit colim^{H_m} iota G; the short homs are necklace homs
// of the level itself.
SSet hom_CP_level(int m, const FinSetPair& pair, int i, int j, int trunc);

// Retraction identity for the comparison Hom_{S_m X}(0,m) -> X^m.
struct SigmaComparison {
  bool pass = false;
  std::string detail;
  SSet hom;            // the computed long hom
  std::size_t xm = 0;  // |X|^m
  std::size_t colim_g = 0;  // size of colim G(X -> X)
};
SigmaComparison comparison_to_sigma(int m, std::size_t x_size, int trunc);

// Strict nerve, levels 0..mmax, as a simplicial object of simplicial sets.
struct StrictNerve {
  std::vector<SSet> level;
  std::vector<std::vector<SimplicialMap>> face;   // face[n][i]: level n -> n-1
  std::vector<std::vector<SimplicialMap>> degen;  // degen[n][i]: level n -> n+1
};
StrictNerve strict_nerve(const EnrichedCategory& C, int mmax, int trunc);
bool segal_check(const StrictNerve& N, int n);  // n-fold Segal map bijective

// Homotopy coherent nerve level: enriched functors c^h[m] -> C, by brute
// force.  Returns the number of coherent m-simplices (and object tuples).
struct HcLevel {
  std::size_t count = 0;
  std::vector<std::vector<int>> object_tuples;  // one per functor
};
HcLevel hc_nerve_level(const EnrichedCategory& C, int m, int trunc,
                       std::size_t limit = 5'000'000);

}  // namespace nck
