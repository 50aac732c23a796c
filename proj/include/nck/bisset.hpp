#pragma once

#include "nck/sset.hpp"

namespace nck {

// Finite bisimplicial set, truncated at (trunc_h, trunc_v).  Horizontal
// operators act on the first index, vertical on the second.
struct BiSimplicialSet {
  int trunc_h = 0, trunc_v = 0;
  std::vector<std::vector<std::size_t>> counts;  // counts[p][q]
  // faces_h[p][q][s][i]: i <= p, lands in (p-1, q);  faces_v: i <= q, lands in (p, q-1)
  std::vector<std::vector<std::vector<std::vector<Idx>>>> faces_h, faces_v;
  std::vector<std::vector<std::vector<std::vector<Idx>>>> degen_h, degen_v;

  std::size_t count(int p, int q) const { return counts[p][q]; }
};

// External product: (K box L)_{p,q} = K_p x L_q (K-major encoding).
BiSimplicialSet external_product(const SSet& K, const SSet& L);

// diag(B)_k = B_{k,k} with both operator families applied at once.
SSet diag(const BiSimplicialSet& B, int trunc);

}  // namespace nck
