#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "nck/errors.hpp"

namespace nck {

using Idx = std::uint32_t;

// A finite simplicial set truncated at dimension `trunc`.  Every simplex up
// to the truncation is stored explicitly; face maps are stored for levels
// 1..trunc and degeneracy maps for levels 0..trunc-1.  Instances are
// immutable after finalize() and shared by pointer.
struct SimplicialSet;
using SSet = std::shared_ptr<const SimplicialSet>;

struct SSetData {
  int trunc = 0;
  // faces[n][s] has n+1 entries (indices into level n-1), for 1 <= n <= trunc.
  // faces[0] is the vertex count marker: counts are taken from these tables,
  // so level 0 size is given separately.
  std::size_t n_vertices = 0;
  std::vector<std::vector<std::vector<Idx>>> faces;  // faces[n], n from 1
  std::vector<std::vector<std::vector<Idx>>> degen;  // degen[n], n from 0
  std::vector<std::string> vertex_labels;            // optional
};

struct SimplicialSet {
  int trunc = 0;
  std::vector<std::size_t> counts;                   // counts[n], 0 <= n <= trunc
  std::vector<std::vector<std::vector<Idx>>> faces;  // faces[n][s][i], n >= 1
  std::vector<std::vector<std::vector<Idx>>> degen;  // degen[n][s][i], n < trunc
  std::vector<std::string> vertex_labels;

  // caches computed by finalize()
  // deg_wit[n][s]: for n >= 1, encodes the maximal i with s = s_i(t) as
  // (i, t), or (-1, 0) if s is non-degenerate.
  std::vector<std::vector<std::pair<int, Idx>>> deg_wit;
  std::vector<std::vector<std::vector<Idx>>> vtx;  // vtx[n][s] = vertex tuple

  std::size_t count(int n) const { return counts.at(static_cast<std::size_t>(n)); }
  Idx face(int n, Idx s, int i) const { return faces[n][s][static_cast<std::size_t>(i)]; }
  Idx degeneracy(int n, Idx s, int i) const { return degen[n][s][static_cast<std::size_t>(i)]; }
  bool is_degenerate(int n, Idx s) const { return n > 0 && deg_wit[n][s].first >= 0; }
  const std::vector<Idx>& vertex_tuple(int n, Idx s) const { return vtx[n][s]; }

  // Eilenberg-Zilber normal form: s = s_{w[0]} ... s_{w.back()} (base) with w
  // strictly decreasing and base non-degenerate.
  std::pair<std::vector<int>, std::pair<int, Idx>> ez(int n, Idx s) const;

  std::vector<std::size_t> nd_counts() const;  // non-degenerate simplices per level
  std::size_t total_size() const;
};

// Builds caches, checks the simplicial identities, returns a shared handle.
SSet finalize(SSetData data);

struct SimplicialMap {
  SSet src, dst;
  std::vector<std::vector<Idx>> at;  // at[n][s], 0 <= n <= levels()-1

  int levels() const { return static_cast<int>(at.size()); }
  Idx operator()(int n, Idx s) const { return at[n][s]; }
  bool valid() const;  // commutes with faces and degeneracies
};

SimplicialMap identity_map(const SSet& K);
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);  // g after f
bool operator==(const SimplicialMap& a, const SimplicialMap& b);
bool is_mono(const SimplicialMap& f);
bool is_epi(const SimplicialMap& f);

// ---- constructions ----

SSet standard_simplex(int m, int trunc);   // Delta[m]
SSet boundary(int m, int trunc);           // dDelta[m]
SSet spine(int m, int trunc);              // Sp[m]
SSet discrete_sset(std::size_t n, int trunc, std::vector<std::string> labels = {});

// Simplices of Delta[m] at level n are weakly increasing (n+1)-tuples over
// {0..m}, ordered lexicographically.
Idx delta_index_of_tuple(int m, const std::vector<Idx>& t);
std::vector<Idx> delta_tuple_of_index(int m, int n, Idx s);

// Full subcomplex on the simplices selected by `keep`; the selection must be
// closed under faces and degeneracies.
struct Subcomplex {
  SSet sub;
  SimplicialMap incl;
  std::vector<std::vector<std::optional<Idx>>> back;  // ambient -> sub index
};
Subcomplex subcomplex(const SSet& K, const std::vector<std::vector<char>>& keep);

struct Coproduct {
  SSet sum;
  std::vector<SimplicialMap> in;
};
Coproduct coproduct(const std::vector<SSet>& parts, int trunc);

// Product of a list of factors; level-n simplices are tuples encoded in
// mixed radix, last factor fastest.
struct ProductSSet {
  SSet prod;
  std::vector<SSet> factors;
  std::vector<std::vector<std::size_t>> stride;  // stride[n][i]

  Idx encode(int n, const std::vector<Idx>& tuple) const;
  std::vector<Idx> decode(int n, Idx s) const;
  SimplicialMap projection(std::size_t i) const;
};
ProductSSet multi_product(const std::vector<SSet>& factors, int trunc);
ProductSSet product(const SSet& K, const SSet& L, int trunc);

// Quotient by the smallest simplicial congruence containing the given
// (level, a, b) identifications.
struct QuotientResult {
  SSet q;
  std::vector<std::vector<Idx>> cls;  // cls[n][s] = index in the quotient
  SimplicialMap proj;
};
QuotientResult quotient(const SSet& K, const std::vector<std::tuple<int, Idx, Idx>>& pairs);

// Map out of a quotient induced by f (must be constant on classes).
SimplicialMap induce_on_quotient(const QuotientResult& q, const SimplicialMap& f);

// Action of a monotone map phi: [n] -> [p] on a level-p simplex.
Idx apply_monotone(const SSet& K, int p, Idx s, const std::vector<int>& phi);

std::size_t pi0(const SSet& K);
std::vector<Idx> pi0_classes(const SSet& K);  // per-vertex component id (normalized)

// All simplicial maps K -> L, determined on non-degenerate simplices by
// backtracking; returned in lexicographic order of their assignment vectors.
// `pins` optionally fixes images of vertices of K.
std::vector<SimplicialMap> enumerate_maps(
    const SSet& K, const SSet& L,
    const std::vector<std::pair<Idx, Idx>>& pins = {},
    std::size_t limit = 2'000'000);

}  // namespace nck
