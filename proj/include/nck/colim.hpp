#pragma once

#include "nck/diagram.hpp"
#include "nck/necklace.hpp"

namespace nck {

struct ColimitResult {
  SSet object;
  std::vector<SimplicialMap> legs;
};
ColimitResult colimit(const SSetDiagram& D, int trunc);

struct SetColimitResult {
  std::size_t size = 0;
  std::vector<std::vector<Idx>> legs;
};
SetColimitResult set_colimit(const SetDiagram& D);

// Weighted colimit colim^W F as the coequalizer of
//   coprod_{f: a -> b} F(a) x W(b)  =>  coprod_a F(a) x W(a).
// W is contravariant: its shape must be F.shape.opposite() (same indexing),
// so W.arrow[f] : W(b) -> W(a) for f: a -> b.
struct WeightedColimitResult {
  SSet object;
  std::vector<ProductSSet> prods;    // F(a) x W(a)
  std::vector<SimplicialMap> legs;   // F(a) x W(a) -> colim
};
WeightedColimitResult weighted_colimit(const SSetDiagram& W, const SSetDiagram& F, int trunc);

// Functor between finite categories, as index maps.
struct CatFunctor {
  std::vector<int> ob;
  std::vector<int> mor;
};
// matches objects/morphisms of `sub` (e.g. a tnd category) inside `big`
CatFunctor necklace_inclusion(const NecklaceCategory& sub, const NecklaceCategory& big);

// restriction of a diagram along a functor
SSetDiagram restrict_diagram(const SSetDiagram& F, const FiniteCategory& domain, const CatFunctor& J);

// Compares colim(F o J) -> colim(F).  `bounds_complete` says the ambient
// category was enumerated exactly; otherwise a failure is only inconclusive.
struct ReductionReport {
  CertStatus status = CertStatus::fail;
  std::string detail;
};
ReductionReport final_reduction_check(const FiniteCategory& domain, const CatFunctor& J,
                                      const SSetDiagram& F, int trunc, bool bounds_complete);

}  // namespace nck
