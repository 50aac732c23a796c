#include "nck/bisset.hpp"

namespace nck {

BiSimplicialSet external_product(const SSet& K, const SSet& L) {
  BiSimplicialSet B;
  B.trunc_h = K->trunc;
  B.trunc_v = L->trunc;
  auto sz = [&](int d) { return static_cast<std::size_t>(d) + 1; };
  B.counts.assign(sz(B.trunc_h), std::vector<std::size_t>(sz(B.trunc_v), 0));
  B.faces_h.assign(sz(B.trunc_h), {});
  B.faces_v.assign(sz(B.trunc_h), {});
  B.degen_h.assign(sz(B.trunc_h), {});
  B.degen_v.assign(sz(B.trunc_h), {});
  for (int p = 0; p <= B.trunc_h; ++p) {
    B.faces_h[p].resize(sz(B.trunc_v));
    B.faces_v[p].resize(sz(B.trunc_v));
    B.degen_h[p].resize(sz(B.trunc_v));
    B.degen_v[p].resize(sz(B.trunc_v));
    for (int q = 0; q <= B.trunc_v; ++q) {
      std::size_t np = K->counts[p], nq = L->counts[q];
      B.counts[p][q] = np * nq;
      auto enc = [&](Idx a, Idx b, std::size_t q_count) { return static_cast<Idx>(a * q_count + b); };
      if (p >= 1) {
        B.faces_h[p][q].resize(np * nq);
        for (Idx a = 0; a < np; ++a)
          for (Idx b = 0; b < nq; ++b)
            for (int i = 0; i <= p; ++i)
              B.faces_h[p][q][enc(a, b, nq)].push_back(enc(K->face(p, a, i), b, nq));
      }
      if (q >= 1) {
        B.faces_v[p][q].resize(np * nq);
        for (Idx a = 0; a < np; ++a)
          for (Idx b = 0; b < nq; ++b)
            for (int i = 0; i <= q; ++i)
              B.faces_v[p][q][enc(a, b, nq)].push_back(enc(a, L->face(q, b, i), L->counts[q - 1]));
      }
      if (p < B.trunc_h) {
        B.degen_h[p][q].resize(np * nq);
        for (Idx a = 0; a < np; ++a)
          for (Idx b = 0; b < nq; ++b)
            for (int i = 0; i <= p; ++i)
              B.degen_h[p][q][enc(a, b, nq)].push_back(enc(K->degeneracy(p, a, i), b, nq));
      }
      if (q < B.trunc_v) {
        B.degen_v[p][q].resize(np * nq);
        for (Idx a = 0; a < np; ++a)
          for (Idx b = 0; b < nq; ++b)
            for (int i = 0; i <= q; ++i)
              B.degen_v[p][q][enc(a, b, nq)].push_back(enc(a, L->degeneracy(q, b, i), L->counts[q + 1]));
      }
    }
  }
  return B;
}

SSet diag(const BiSimplicialSet& B, int trunc) {
  if (trunc > B.trunc_h || trunc > B.trunc_v)
    throw truncation_error("diag: bisimplicial truncation too small");
  SSetData d;
  d.trunc = trunc;
  d.n_vertices = B.counts[0][0];
  d.faces.resize(static_cast<std::size_t>(trunc) + 1);
  d.degen.resize(static_cast<std::size_t>(trunc) + 1);
  for (int n = 1; n <= trunc; ++n) {
    d.faces[n].resize(B.counts[n][n]);
    for (Idx s = 0; s < B.counts[n][n]; ++s)
      for (int i = 0; i <= n; ++i)
        d.faces[n][s].push_back(B.faces_v[n - 1][n][B.faces_h[n][n][s][static_cast<std::size_t>(i)]]
                                                   [static_cast<std::size_t>(i)]);
  }
  for (int n = 0; n < trunc; ++n) {
    d.degen[n].resize(B.counts[n][n]);
    for (Idx s = 0; s < B.counts[n][n]; ++s)
      for (int i = 0; i <= n; ++i)
        d.degen[n][s].push_back(B.degen_v[n + 1][n][B.degen_h[n][n][s][static_cast<std::size_t>(i)]]
                                                   [static_cast<std::size_t>(i)]);
  }
  return finalize(std::move(d));
}

}  // namespace nck
