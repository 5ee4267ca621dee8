#include "kohn/bounds.hpp"

#include "kohn/tridiag.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace kohn {

std::string to_string(Parity p) { return p == Parity::Odd ? "odd" : "even"; }

namespace {

double envelope(int k, double h, double t, double under_sqrt) {
  return h * (2.0 * k - 1.0) * std::sqrt(under_sqrt) * std::pow(t, 2.0 * k);
}

}  // namespace

BoundReport bound_chain(int k, const RossiParam& t) {
  if (k < 1) throw std::invalid_argument("bound_chain: k must be >= 1");
  BoundReport r;
  r.k = k;
  r.parity = Parity::Odd;
  r.t_abs = t.t_abs();
  r.h = t.h().get_d();

  const VWBlock block = closed_form_block(k, BlockKind::W, t);
  const Rational s = t.t_squared();

  // Sylvester criterion on exact minors.  For t > 0 every coefficient of
  // det(A_i) is positive, so this certifies W_k(t) > 0 without any floating
  // point; at t = 0 the top minor vanishes (holomorphic kernel) and the block
  // is only semidefinite.
  r.definite = true;
  for (int i = 1; i <= k; ++i) {
    if (det_closed_form(k, i).eval(s) <= 0) {
      r.definite = false;
      break;
    }
  }

  const SymTridiag sym = block_symmetric(block);
  const auto [glo, ghi] = gershgorin_bounds(sym);
  (void)glo;  // definiteness pins the spectrum in [0, ghi] already
  r.lambda_min = r.h * lambda_min(sym, 0.0, std::max(ghi, 0.0), 1e-12);

  const Rational det_k = det_closed_form(k, k).eval(s);
  const Rational det_k1 = k == 1 ? Rational(1) : det_closed_form(k, k - 1).eval(s);
  if (det_k1 == 0) throw std::logic_error("bound_chain: vanishing leading minor");
  r.det_ratio = Rational(t.h() * det_k / det_k1).get_d();

  const double td = t.t_abs().get_d();
  r.bound_sharp = envelope(k, r.h, td, static_cast<double>(k));
  r.bound_coarse = envelope(k, r.h, td, std::numbers::e * std::max(k - 1, 1));

  // k = 1 is an equality case (det ratio == sharp envelope identically), and
  // the bisection carries an absolute tolerance, so each link gets slack.
  const double abs_slack = r.h * 4e-12;
  const auto leq = [abs_slack](double a, double b) { return a <= b * (1 + 1e-9) + abs_slack; };
  r.chain_ok = leq(r.lambda_min, r.det_ratio) && leq(r.det_ratio, r.bound_sharp) &&
               leq(r.bound_sharp, r.bound_coarse);
  return r;
}

BoundReport even_gap(int k, const RossiParam& t, double zero_threshold) {
  if (k < 1) throw std::invalid_argument("even_gap: k must be >= 1");
  BoundReport r;
  r.k = k;
  r.parity = Parity::Even;
  r.t_abs = t.t_abs();
  r.h = t.h().get_d();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  r.det_ratio = r.bound_sharp = r.bound_coarse = nan;
  r.definite = false;

  const OperatorMatrix mat = assemble_full(2 * k, t, /*h_factored=*/true);
  const std::vector<double> eigs = full_spectrum(mat);
  for (double v : eigs) {
    if (v > zero_threshold) {
      r.lambda_min = r.h * v;
      r.chain_ok = true;  // nothing further to chain on even spaces
      return r;
    }
  }
  throw std::runtime_error("even_gap: spectrum has no eigenvalue above threshold");
}

std::vector<BoundReport> sweep(int k_max, const std::vector<Rational>& t_grid, Parity parity,
                               double zero_threshold) {
  if (k_max < 1) throw std::invalid_argument("sweep: k_max must be >= 1");
  std::vector<BoundReport> rows;
  rows.reserve(t_grid.size() * static_cast<std::size_t>(k_max));
  for (const Rational& t : t_grid) {
    const RossiParam param(t);
    for (int k = 1; k <= k_max; ++k)
      rows.push_back(parity == Parity::Odd ? bound_chain(k, param)
                                           : even_gap(k, param, zero_threshold));
  }
  return rows;
}

std::vector<Rational> grid(const Rational& lo, const Rational& hi, const Rational& step) {
  Rational lo_c = lo, hi_c = hi, step_c = step;
  lo_c.canonicalize();
  hi_c.canonicalize();
  step_c.canonicalize();
  if (step_c <= 0) throw std::invalid_argument("grid: step must be positive");
  if (lo_c > hi_c) throw std::invalid_argument("grid: lo exceeds hi");
  std::vector<Rational> out;
  for (Rational v = lo_c; v <= hi_c; v += step_c) out.push_back(v);
  return out;
}

void write_csv(std::ostream& out, const std::vector<BoundReport>& rows, bool header) {
  if (header)
    out << "k,parity,t,h,lambda_min,det_ratio,bound_sharp,bound_coarse,definite,chain_ok\n";
  const auto saved = out.precision(17);
  for (const BoundReport& r : rows) {
    out << r.k << ',' << to_string(r.parity) << ',' << to_string(r.t_abs) << ',' << r.h << ','
        << r.lambda_min << ',' << r.det_ratio << ',' << r.bound_sharp << ',' << r.bound_coarse
        << ',' << (r.definite ? 1 : 0) << ',' << (r.chain_ok ? 1 : 0) << '\n';
  }
  out.precision(saved);
}

}  // namespace kohn
