#pragma once

#include "nck/category.hpp"
#include "nck/cube.hpp"
#include "nck/sset.hpp"

namespace nck {

// Covariant sSet-valued diagram over a finite category; arrow[f] is indexed
// like shape.mors (identities included).
struct SSetDiagram {
  FiniteCategory shape;
  std::vector<SSet> value;
  std::vector<SimplicialMap> arrow;

  void validate() const;  // functoriality, exhaustive
};

// Set-valued diagram (finite sets as sizes).
struct SetDiagram {
  FiniteCategory shape;
  std::vector<std::size_t> size;
  std::vector<std::vector<Idx>> arrow;

  void validate() const;
};

// Discrete embedding of a set diagram.
SSetDiagram iota(const SetDiagram& D, int trunc);

// H_m over Cube_m: (I,S) |-> prod_I Delta[1].  Simplices of prod_I Delta[1]
// are tuples of monotone maps [k] -> [1]; helpers below convert between the
// product encoding and zero-counts.
struct HDiagram {
  CubeCategory base;
  SSetDiagram dia;
  std::vector<ProductSSet> prods;
  // per object: the elements of I in ascending order (coordinate names)
  std::vector<std::vector<int>> coords;

  // zero-counts of the factors of a simplex (z in 0..k+1 per coordinate)
  std::vector<int> zeros(int obj, int level, Idx s) const;
  Idx from_zeros(int obj, int level, const std::vector<int>& z) const;
};
HDiagram h_diagram(int m, int trunc);

struct FinSetPair {
  std::vector<std::string> y;  // elements of Y
  std::vector<char> in_x;      // membership of the subset X
  std::size_t y_size() const { return y.size(); }
  std::size_t x_size() const;
  std::vector<std::size_t> x_elems() const;
};

// G(X -> Y) over Cube_m^op: (I,S) |-> Y^{B(I,S)}, except X at the top object.
// The shape is cube(m).cat.opposite(); value/arrow indexing follows it.
struct GDiagram {
  CubeCategory base;  // the cube itself; shape of `dia` is its opposite
  SetDiagram dia;
  FinSetPair pair;
  int top = -1;  // index of the object (full, full)

  // decode an element of Y^{B(I,S)} as a tuple over the intervals (or a
  // single X-index at the top object)
  std::vector<Idx> tuple(int obj, Idx e) const;
  Idx from_tuple(int obj, const std::vector<Idx>& t) const;
};
GDiagram g_diagram(int m, const FinSetPair& pair);

}  // namespace nck
