// Symmetric tridiagonal eigenvalue machinery: similarity symmetrization of
// the chain blocks, Sturm-sequence bisection, exact continuants as
// polynomials in s = |t|^2, and the closed-form principal determinants
//     det(A_i) = sum_{j=0}^{i} b_1..b_j a_{j+1}..a_i s^j
// for the symmetrized W block with a_i = (2i)(2k-2i), b_i = (2i-1)(2k+1-2i),
// c_i^2 = a_i b_{i+1}.
#pragma once

#include "kohn/rational.hpp"
#include "kohn/rossi_operator.hpp"

#include <utility>
#include <vector>

namespace kohn {

struct SymTridiag {
  std::vector<double> diag;
  std::vector<double> off;  // size diag.size() - 1 (empty for 1x1)

  int dim() const { return static_cast<int>(diag.size()); }
  SymTridiag leading_minor(int n) const;  // top-left n x n
};

// General symmetrization d, u, l -> d, sqrt(u l).  Requires u_j l_j > 0 for
// every off-diagonal pair; throws std::domain_error otherwise.  A diagonal
// input (empty u, l) passes through.
SymTridiag symmetrize(const std::vector<double>& diag, const std::vector<double>& upper,
                      const std::vector<double>& lower);

// Symmetrized chain block from the closed form, off-diagonal |t| sqrt(c_j).
// Valid for t = 0 as well (block degenerates to its diagonal).
SymTridiag block_symmetric(const VWBlock& block);

// Number of eigenvalues strictly below x (Sturm sign count via the shifted
// LDL^T pivot recurrence).
int sturm_count_below(const SymTridiag& m, double x);

// Interval [lo, hi] containing the whole spectrum (union of Gershgorin discs).
std::pair<double, double> gershgorin_bounds(const SymTridiag& m);

// Smallest eigenvalue by bisection to absolute tolerance tol (> 0); the
// bracket defaults to the Gershgorin bounds.  Throws std::runtime_error if
// 200 iterations do not reach tol.
double lambda_min(const SymTridiag& m, double tol = 1e-12);
double lambda_min(const SymTridiag& m, double lo, double hi, double tol);

// All eigenvalues, ascending, each located by counting bisection.
std::vector<double> all_eigenvalues(const SymTridiag& m, double tol = 1e-12);

// Cauchy interlacing of m against its (n-1)-st leading minor, with additive
// slack; true when every nu_i sits between lambda_i and lambda_{i+1}.
bool interlacing_check(const SymTridiag& m, double slack = 1e-10);

// Dense univariate polynomial over the rationals, coefficient of s^i at [i].
struct RatPoly {
  std::vector<Rational> coeff;

  static RatPoly constant(Rational c);
  static RatPoly monomial(int deg, Rational c);

  int degree() const { return static_cast<int>(coeff.size()) - 1; }
  bool is_zero() const { return coeff.empty(); }
  Rational eval(const Rational& s) const;
  void normalize();  // drop trailing zeros

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeff == b.coeff; }
};

std::string to_string(const RatPoly& p, const std::string& var = "s");

// Continuants of a chain block as exact polynomials in s = |t|^2:
// f_0 = 1, f_1 = d_1, f_i = d_i f_{i-1} - u_{i-1} l_{i-1} f_{i-2}; f_i equals
// det of the i-th leading minor.
struct ContinuantSeq {
  std::vector<RatPoly> f;  // indices 0..k
};

ContinuantSeq continuants(const VWBlock& block);

// The a_i, b_i, c_i^2 coefficient families of the symmetrized W block.
struct WCoefficients {
  std::vector<long> a;     // a_i = (2i)(2k-2i), i = 1..k
  std::vector<long> b;     // b_i = (2i-1)(2k+1-2i)
  std::vector<long> c_sq;  // c_i^2 = (2i+1)(2i)(2k-2i)(2k-1-2i), i = 1..k-1
};

WCoefficients w_coefficients(int k);

// Closed-form det(A_i) of the symmetrized W block at chain size k, 1 <= i <= k.
RatPoly det_closed_form(int k, int i);

}  // namespace kohn
