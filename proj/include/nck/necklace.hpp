#pragma once

#include <string>

#include "nck/category.hpp"
#include "nck/sset.hpp"

namespace nck {

// Vertex preorder generated by the edges of K (reflexive-transitive closure).
std::vector<std::vector<char>> preceq(const SSet& K);

struct OrderClass {
  bool ordered = false;
  bool one_ordered = false;
};
// Checks run over all levels up to the truncation; the truncation must cover
// every non-degenerate simplex of K for the answer to be meaningful.
OrderClass classify_order(const SSet& K);

// A necklace Delta[m_1] v ... v Delta[m_t]; dims = {0} is the point necklace,
// otherwise all dims are positive.
struct Necklace {
  std::vector<int> dims;
  std::vector<int> offsets;  // bead i spans vertices [offsets[i], offsets[i]+dims[i]]

  int beads() const { return static_cast<int>(dims.size()); }
  int n_vertices() const { return offsets.back() + dims.back() + 1; }
  std::vector<int> joints() const;    // includes both endpoints
  std::vector<int> interior() const;  // non-joint vertices, ascending
};
Necklace make_necklace(std::vector<int> dims);
SSet necklace_sset(const Necklace& nk, int trunc);

// index of the simplex of an ordered simplicial set with the given vertex
// tuple (throws if absent)
Idx ordered_index(const SSet& K, const std::vector<Idx>& tuple);

// A bi-pointed necklace map T -> K_{a,b}.
struct NecklaceMap {
  Necklace nk;
  SSet nss;
  SimplicialMap f;  // nss -> K
  Idx a = 0, b = 0;
};

// Builds the necklace map determined by a chain of bead simplices of K
// (level, index), with matching endpoints.
NecklaceMap necklace_from_beads(const SSet& K, std::vector<int> dims,
                                const std::vector<std::pair<int, Idx>>& beads, Idx a, Idx b);

// A category of necklaces over K from a to b.  `mors` includes identities and
// indexes `cat.mors` one-to-one.
struct NecklaceCategory {
  SSet K;
  Idx a = 0, b = 0;
  bool tnd_only = false;
  std::vector<NecklaceMap> objects;
  struct NMor {
    int src = 0, dst = 0;
    SimplicialMap g;  // connecting necklace map, over K
  };
  std::vector<NMor> mors;
  std::vector<int> identity;
  FiniteCategory cat;

  // poset order for the tnd case
  bool leq(int i, int j) const;
};

// Totally non-degenerate necklaces over a 1-ordered K (a poset; objects are
// exactly the monomorphisms).
NecklaceCategory tnd_necklaces(const SSet& K, Idx a, Idx b);

// The full necklace category restricted to <= max_beads beads of dimension
// <= max_bead_dim.  A bounded approximation of Nec(K; a, b).  Pass
// with_mors = false to enumerate objects only (finality checks need no
// morphisms on the bounded side, and the morphism tables can get large).
NecklaceCategory bounded_necklaces(const SSet& K, Idx a, Idx b, int max_beads, int max_bead_dim,
                                   bool with_mors = true);

// For each bead of U, the bead of T its image lies in (g: U -> T mono over K).
std::vector<int> bead_map(const NecklaceMap& U, const NecklaceMap& T, const SimplicialMap& g);

enum class CertStatus { pass, fail, inconclusive };

// Finality of the inclusion tnd -> Nec(K; a, b), checked over the bounded
// enumeration: every comma category U | J must be non-empty and connected.
struct FinalityCertificate {
  CertStatus status = CertStatus::fail;
  std::string detail;
  struct Item {
    int u = 0;                 // object of the bounded category
    std::size_t comma_objects = 0;
    bool connected = false;
    int epi_image = -1;        // tnd object receiving an epi from u, if any
  };
  std::vector<Item> items;
};
FinalityCertificate finality_certificate(const NecklaceCategory& bounded,
                                         const NecklaceCategory& tnd);

}  // namespace nck
