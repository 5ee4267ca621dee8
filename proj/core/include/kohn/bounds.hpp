#pragma once

#include "kohn/rational.hpp"
#include "kohn/rossi_operator.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace kohn {

// Parity of the harmonic space degree m.  Odd spaces (m = 2k-1) decompose into
// the tridiagonal V/W blocks and admit the closed-form determinant bound; even
// spaces (m = 2k) pick up a genuine kernel once t != 0, so the quantity of
// interest there is the smallest *nonzero* eigenvalue.
enum class Parity { Odd, Even };

std::string to_string(Parity p);

// One row of the eigenvalue-decay study on H_m.
//
// For odd m = 2k-1 the chain
//
//   lambda_min(box_b^t on H_m)  <=  h * det(A_k)/det(A_{k-1})
//                               <=  h (2k-1) sqrt(k) t^{2k}            (sharp)
//                               <=  h (2k-1) sqrt(e*max(k-1,1)) t^{2k} (coarse)
//
// is evaluated: the determinant ratio exactly in rational arithmetic, the
// smallest eigenvalue by bisection.  Both envelopes vanish as k grows for any
// fixed t < 1, which is the headline decay statement.
//
// For even m = 2k the determinant machinery does not apply; det_ratio and the
// envelopes are NaN and lambda_min is the smallest eigenvalue above the kernel.
struct BoundReport {
  int k = 0;
  Parity parity = Parity::Odd;
  Rational t_abs;
  double h = 1.0;
  double lambda_min = 0.0;    // h included
  double det_ratio = 0.0;     // h * det(A_k)/det(A_{k-1}); NaN for even parity
  double bound_sharp = 0.0;   // h (2k-1) sqrt(k) t^{2k};   NaN for even parity
  double bound_coarse = 0.0;  // h (2k-1) sqrt(e*max(k-1,1)) t^{2k}; NaN for even
  bool definite = false;      // exact Sylvester certificate that W_k(t) > 0
  bool chain_ok = false;      // the displayed inequalities hold (small slack)

  int degree() const { return parity == Parity::Odd ? 2 * k - 1 : 2 * k; }
};

// Evaluates the full chain above for the W block on H_{2k-1}.
//
// Positive definiteness of W_k(t) for t > 0 is certified exactly (all leading
// principal minors positive as rationals), which justifies bracketing the
// bisection in [0, gershgorin_hi].  At t = 0 the block is singular -- the
// holomorphic polynomials are annihilated -- and lambda_min is reported as 0.
BoundReport bound_chain(int k, const RossiParam& t);

// Decay report for the even space H_{2k}: assembles the full matrix, takes the
// spectrum, and reports the smallest eigenvalue whose h-factored value exceeds
// zero_threshold.  Entries without a closed form are NaN.
BoundReport even_gap(int k, const RossiParam& t, double zero_threshold = 1e-9);

// bound_chain / even_gap for k = 1..k_max over every t in t_grid, ordered by
// t then k.
std::vector<BoundReport> sweep(int k_max, const std::vector<Rational>& t_grid,
                               Parity parity, double zero_threshold = 1e-9);

// Exact arithmetic grid lo, lo+step, ..., capped at hi (inclusive).
std::vector<Rational> grid(const Rational& lo, const Rational& hi, const Rational& step);

// CSV with schema
//   k,parity,t,h,lambda_min,det_ratio,bound_sharp,bound_coarse,definite,chain_ok
// where t is written as an exact rational and the doubles with 17 significant
// digits, so files round-trip bit-for-bit.
void write_csv(std::ostream& out, const std::vector<BoundReport>& rows, bool header = true);

}  // namespace kohn
