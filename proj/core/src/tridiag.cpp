#include "kohn/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace kohn {

SymTridiag SymTridiag::leading_minor(int n) const {
  if (n < 1 || n > dim()) throw std::out_of_range("leading_minor size");
  SymTridiag out;
  out.diag.assign(diag.begin(), diag.begin() + n);
  out.off.assign(off.begin(), off.begin() + (n - 1));
  return out;
}

SymTridiag symmetrize(const std::vector<double>& diag, const std::vector<double>& upper,
                      const std::vector<double>& lower) {
  if (diag.empty()) throw std::invalid_argument("symmetrize: empty diagonal");
  if (upper.size() != diag.size() - 1 || lower.size() != diag.size() - 1)
    throw std::invalid_argument("symmetrize: off-diagonal lengths must be dim-1");
  SymTridiag out;
  out.diag = diag;
  out.off.reserve(upper.size());
  for (std::size_t j = 0; j < upper.size(); ++j) {
    const double prod = upper[j] * lower[j];
    if (!(prod > 0))
      throw std::domain_error("symmetrize: u_j * l_j must be positive at j = " +
                              std::to_string(j + 1));
    out.off.push_back(std::sqrt(prod));
  }
  return out;
}

SymTridiag block_symmetric(const VWBlock& block) {
  SymTridiag out;
  const double t = block.t_abs.get_d();
  for (int j = 1; j <= block.k; ++j) out.diag.push_back(block.diag(j).get_d());
  for (int j = 1; j <= block.k - 1; ++j)
    out.off.push_back(t * std::sqrt(static_cast<double>(block.upper_coeff[j - 1])));
  return out;
}

int sturm_count_below(const SymTridiag& m, double x) {
  // Pivots of (M - x I) = L D L^T; the number of negative pivots equals the
  // number of eigenvalues below x.  Zero pivots are nudged to a tiny negative
  // value, the usual bisection-safe convention.
  constexpr double kPivMin = std::numeric_limits<double>::min() * 1e4;
  int count = 0;
  double q = 1.0;
  for (int i = 0; i < m.dim(); ++i) {
    const double off_sq = i > 0 ? m.off[i - 1] * m.off[i - 1] : 0.0;
    q = (m.diag[i] - x) - (i > 0 ? off_sq / q : 0.0);
    if (q == 0.0) q = -kPivMin;
    if (q < 0.0) ++count;
  }
  return count;
}

std::pair<double, double> gershgorin_bounds(const SymTridiag& m) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < m.dim(); ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(m.off[i - 1]);
    if (i < m.dim() - 1) radius += std::abs(m.off[i]);
    lo = std::min(lo, m.diag[i] - radius);
    hi = std::max(hi, m.diag[i] + radius);
  }
  return {lo, hi};
}

namespace {

// Bisect for the (index+1)-smallest eigenvalue inside [lo, hi].
double bisect_for_index(const SymTridiag& m, int index, double lo, double hi, double tol) {
  constexpr int kMaxIterations = 200;
  int it = 0;
  while (hi - lo > tol) {
    if (++it > kMaxIterations)
      throw std::runtime_error("eigenvalue bisection did not reach tolerance " +
                               std::to_string(tol) + " in 200 iterations");
    const double mid = 0.5 * (lo + hi);
    if (sturm_count_below(m, mid) >= index + 1)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double lambda_min(const SymTridiag& m, double lo, double hi, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("lambda_min: tolerance must be positive");
  if (!(lo <= hi)) throw std::invalid_argument("lambda_min: empty bracket");
  return bisect_for_index(m, 0, lo, hi, tol);
}

double lambda_min(const SymTridiag& m, double tol) {
  const auto [lo, hi] = gershgorin_bounds(m);
  return lambda_min(m, lo, hi, tol);
}

std::vector<double> all_eigenvalues(const SymTridiag& m, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("all_eigenvalues: tolerance must be positive");
  const auto [lo, hi] = gershgorin_bounds(m);
  std::vector<double> eigs;
  eigs.reserve(m.dim());
  for (int i = 0; i < m.dim(); ++i) eigs.push_back(bisect_for_index(m, i, lo, hi, tol));
  return eigs;
}

bool interlacing_check(const SymTridiag& m, double slack) {
  const int n = m.dim();
  if (n == 1) return true;
  const std::vector<double> lambda = all_eigenvalues(m);
  const std::vector<double> nu = all_eigenvalues(m.leading_minor(n - 1));
  for (int i = 0; i < n - 1; ++i) {
    if (lambda[i] > nu[i] + slack) return false;
    if (nu[i] > lambda[i + 1] + slack) return false;
  }
  return true;
}

// --- exact polynomials in s -------------------------------------------------

RatPoly RatPoly::constant(Rational c) {
  RatPoly p;
  if (c != 0) p.coeff.push_back(std::move(c));
  return p;
}

RatPoly RatPoly::monomial(int deg, Rational c) {
  RatPoly p;
  if (c != 0) {
    p.coeff.assign(deg + 1, Rational(0));
    p.coeff[deg] = std::move(c);
  }
  return p;
}

Rational RatPoly::eval(const Rational& s) const {
  Rational acc(0);
  for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) acc = acc * s + *it;
  return acc;
}

void RatPoly::normalize() {
  while (!coeff.empty() && coeff.back() == 0) coeff.pop_back();
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.coeff.size() > coeff.size()) coeff.resize(o.coeff.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeff.size(); ++i) coeff[i] += o.coeff[i];
  normalize();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.coeff.size() > coeff.size()) coeff.resize(o.coeff.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeff.size(); ++i) coeff[i] -= o.coeff[i];
  normalize();
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  RatPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  out.coeff.assign(a.coeff.size() + b.coeff.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeff.size(); ++i)
    for (std::size_t j = 0; j < b.coeff.size(); ++j) out.coeff[i + j] += a.coeff[i] * b.coeff[j];
  out.normalize();
  return out;
}

std::string to_string(const RatPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coeff.size(); ++i) {
    if (p.coeff[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += to_string(p.coeff[i]);
    if (i >= 1) out += "*" + var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

ContinuantSeq continuants(const VWBlock& block) {
  ContinuantSeq seq;
  seq.f.push_back(RatPoly::constant(Rational(1)));
  for (int i = 1; i <= block.k; ++i) {
    RatPoly d = RatPoly::constant(Rational(block.diag_const[i - 1]));
    d += RatPoly::monomial(1, Rational(block.diag_s[i - 1]));
    RatPoly next = d * seq.f[i - 1];
    if (i >= 2) {
      // u_{i-1} l_{i-1} = s * upper_coeff[i-1]
      const RatPoly ul = RatPoly::monomial(1, Rational(block.upper_coeff[i - 2]));
      next -= ul * seq.f[i - 2];
    }
    seq.f.push_back(std::move(next));
  }
  return seq;
}

WCoefficients w_coefficients(int k) {
  if (k < 1) throw std::invalid_argument("w_coefficients: k must be >= 1");
  WCoefficients w;
  const long kk = k;
  for (long i = 1; i <= kk; ++i) {
    w.a.push_back((2 * i) * (2 * kk - 2 * i));
    w.b.push_back((2 * i - 1) * (2 * kk + 1 - 2 * i));
  }
  for (long i = 1; i <= kk - 1; ++i)
    w.c_sq.push_back((2 * i + 1) * (2 * i) * (2 * kk - 2 * i) * (2 * kk - 1 - 2 * i));
  return w;
}

RatPoly det_closed_form(int k, int i) {
  if (i < 1 || i > k) throw std::out_of_range("det_closed_form: need 1 <= i <= k");
  const WCoefficients w = w_coefficients(k);
  RatPoly det;
  for (int j = 0; j <= i; ++j) {
    Rational c(1);
    for (int r = 1; r <= j; ++r) c *= w.b[r - 1];
    for (int r = j + 1; r <= i; ++r) c *= w.a[r - 1];
    det += RatPoly::monomial(j, c);
  }
  return det;
}

}  // namespace kohn
