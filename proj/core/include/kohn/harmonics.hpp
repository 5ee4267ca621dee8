// Spherical harmonics on S^3 organized by bidegree.
//
// H_{p,q} = harmonic polynomials, homogeneous of degree p in z and q in zb,
// restricted to the sphere; dim H_{p,q} = p + q + 1.  Two constructions are
// provided: kernel extraction of the Laplacian on P_{p,q} (a solver route)
// and the Kelvin-derivative family
//     Dbar^alpha D^beta |z|^{-2},  |alpha| = p, |beta| = q,
//     alpha_1 = 0 or beta_1 = 0,
// which is pairwise orthogonal in L^2(S^3).  The full-degree basis of H_m
// concatenates the derivative bases over (0,m), (1,m-1), ..., (m,0).
#pragma once

#include "kohn/polynomial.hpp"

#include <utility>
#include <vector>

namespace kohn {

struct BidegreeSpace {
  int p = 0;
  int q = 0;
  int dim() const { return p + q + 1; }
};

struct HarmonicBasis {
  // Exactly one of the two is meaningful: a single bidegree, or a full
  // degree-m space (total_degree >= 0) grouped by ascending p.
  BidegreeSpace space;
  int total_degree = -1;
  std::vector<Polynomial> elements;
};

// Kernel of the Laplacian on P_{p,q}, via exact Gaussian elimination.
HarmonicBasis basis_hpq_solve(int p, int q);

// Kelvin-derivative basis in the canonical order: pairs (alpha_1, beta_1)
// ascending lexicographically over the admissible set {alpha_1 = 0,
// beta_1 = 0..q} then {alpha_1 = 1..p, beta_1 = 0}.  Results are cached;
// the cache is guarded by a mutex and safe to share across threads.
HarmonicBasis basis_hpq_derivative(int p, int q);

// Basis of H_m(S^3), dim (m+1)^2: derivative bases of (p, m-p) for p = 0..m.
HarmonicBasis basis_hm(int m);

// Writes a homogeneous p of degree m as p = sum_j |z|^{2j} h_{m-2j} with each
// h harmonic.  Returns every level j = 0..floor(m/2), zero components
// included.  Rejects non-homogeneous or zero input.
std::vector<std::pair<int, Polynomial>> decompose(const Polynomial& p);

// |z|^2 = z1 zb1 + z2 zb2 as a polynomial.
Polynomial norm_sq_poly();

}  // namespace kohn
