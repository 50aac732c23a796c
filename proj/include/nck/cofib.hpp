#pragma once

#include "nck/diagram.hpp"

namespace nck {

// Classification of a coordinate map [k] -> [1] by its zero count z:
// z = 0 is constant 1, z = k+1 is constant 0, otherwise threshold ell = z-1
// (vertices 0..ell go to 0).
enum class MapKind { constant_one, constant_zero, threshold };
MapKind map_kind(int k, int z);

// alpha: a k-simplex of Delta[1]^I over the object (I,S), given by its zero
// counts, decomposes as the image of an all-threshold core tau over a unique
// (I',S') -> (I,S).
struct AlphaResult {
  CubeObject core;
  std::vector<int> tau;  // zero counts over the coordinates of I', ascending
};
AlphaResult alpha_decompose(const CubeObject& o, int k, const std::vector<int>& z);
// beta: reconstructs the zero counts over (I,S) by the three-case formula
std::vector<int> beta_compose(const CubeObject& core, const CubeObject& o, int k,
                              const std::vector<int>& tau);

struct CheckRecord {
  std::string name;
  bool pass = true;
  std::string detail;
};

// round trips of alpha/beta over the full simplex set of one object
CheckRecord alpha_beta(int m, int k, const CubeObject& o);
// natural bijection on every object, naturality on generators, and the
// counting identity (k+2)^|I| = sum_{I' subset I} 2^{|I minus I'|} k^{|I'|}
CheckRecord decomposition_check(int m, int k);
// degenerate/non-degenerate split: threshold coverage vs the EZ oracle
CheckRecord split_check(int m, int k);

struct CofibrancyCertificate {
  int m = 0;
  int k_max = 0;
  CertStatus status = CertStatus::fail;
  std::string bounds_note;  // checks are exhaustive only up to the bounds
  std::vector<CheckRecord> checks;
};
CofibrancyCertificate hm_certificate(int m, int k_max);

// Retraction machinery for G over the subset poset: r sigma = id with alpha
// naturality, componentwise bijectivity of G(alpha), pullback squares, and
// injectivity of colim_{I strictly below J} G(sigma J) -> G(sigma I) computed
// both from the two-step coequalizer and from the full poset.
CofibrancyCertificate gx_certificate(int m, std::size_t x_size);

}  // namespace nck
