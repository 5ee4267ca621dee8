// Matrix representations of box_b^t on H_m(S^3), and the V/W chain
// decomposition of odd spaces.
//
// For odd m = 2k-1 the space splits into 2k chains of even and odd powers of
// Lbar applied to the top anti-holomorphic basis vectors f_i of H_{0,2k-1}:
//     V_i = span{ Lbar^{2j-2} f_i },  W_i = span{ Lbar^{2j-1} f_i },  j = 1..k.
// box_b^t / h acts on each V_i (resp. W_i) by one fixed k x k tridiagonal
// matrix, independent of i:
//     V: d_j = (2j-1)(2k+1-2j) + |t|^2 (2j-2)(2k+2-2j)
//        u_j = -t (2j)(2j-1)(2k+1-2j)(2k-2j)
//     W: d_j = (2j)(2k-2j)     + |t|^2 (2j-1)(2k+1-2j)
//        u_j = -t (2j+1)(2j)(2k-2j)(2k-1-2j)
// with every subdiagonal entry equal to -t.
#pragma once

#include "kohn/harmonics.hpp"
#include "kohn/polynomial.hpp"
#include "kohn/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace kohn {

// Dense matrix of box_b^t in the canonical basis of H_m, columns holding the
// images of basis vectors.  Entries are exact; with t rational they are in
// fact real rationals.
struct OperatorMatrix {
  int dim = 0;
  bool h_factored = true;  // entries are box_b^t / h when true
  std::vector<ComplexRational> entries;  // row-major, dim x dim
  std::vector<Polynomial> basis;
  std::vector<Rational> basis_norm_sq;

  const ComplexRational& at(int row, int col) const { return entries[row * dim + col]; }
  ComplexRational& at(int row, int col) { return entries[row * dim + col]; }

  // Real double view; throws if any entry has a nonzero imaginary part.
  std::vector<double> to_real_dense() const;
};

enum class BlockKind { V, W };

std::string to_string(BlockKind kind);

// One tridiagonal chain block, stored structurally: d_j = diag_const[j] +
// |t|^2 diag_s[j], u_j = -t upper_coeff[j], l_j = -t.
struct VWBlock {
  int k = 0;
  BlockKind kind = BlockKind::V;
  Rational t_abs;
  std::vector<long> diag_const;   // length k, 1-based index j stored at j-1
  std::vector<long> diag_s;       // length k
  std::vector<long> upper_coeff;  // length k-1

  int dim() const { return k; }
  Rational diag(int j) const;   // d_j, 1-based
  Rational upper(int j) const;  // u_j, 1-based
  Rational lower() const { return -t_abs; }
};

// box_b^t on H_m in the canonical basis (exact).  Columns are images.
OperatorMatrix assemble_full(int m, const RossiParam& t, bool h_factored = true);

// The i-th V and W chains in H_{2k-1} (0 <= i <= 2k-1), each of length k.
std::pair<std::vector<Polynomial>, std::vector<Polynomial>> vw_chain(int k, int i);

VWBlock closed_form_block(int k, BlockKind kind, const RossiParam& t);

struct InvarianceReport {
  int k = 0;
  bool ok = false;
  std::vector<std::string> mismatches;  // "(kind, chain i, position j)" labels
};

// Applies box_b^t / h to every chain element of every chain in H_{2k-1} and
// checks the image against the closed-form block columns, exactly.
InvarianceReport verify_invariance(int k, const RossiParam& t);

// Same check against caller-supplied blocks (for pinning wrong coefficient
// variants as negative tests).
InvarianceReport verify_invariance_blocks(const VWBlock& v_block, const VWBlock& w_block,
                                          const RossiParam& t);

// Spectrum of box_b^t on H_{2k-1} (h included) from the block closed forms:
// each block eigenvalue carries multiplicity 2k; values closer than tol are
// merged.  Sorted ascending.
std::vector<std::pair<double, int>> spectrum_multiplicity(int k, const RossiParam& t,
                                                          double tol = 1e-9);

// Numeric spectrum of an assembled matrix: rescales to the orthonormal basis
// (symmetric; symmetry is checked to 1e-12) and solves densely.  Sorted.
std::vector<double> full_spectrum(const OperatorMatrix& matrix);

// Largest k for which exact chain verification is allowed to run; defaults
// to 5, overridable via the KOHN_SPECTRA_EXACT_LIMIT environment variable.
int exact_mode_limit();

}  // namespace kohn
