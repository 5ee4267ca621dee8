#include "kohn/rossi_operator.hpp"

#include "kohn/operators.hpp"
#include "kohn/tridiag.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace kohn {

std::vector<double> OperatorMatrix::to_real_dense() const {
  std::vector<double> out(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!entries[i].is_real())
      throw std::logic_error("matrix entry has nonzero imaginary part");
    out[i] = entries[i].re.get_d();
  }
  return out;
}

std::string to_string(BlockKind kind) { return kind == BlockKind::V ? "V" : "W"; }

Rational VWBlock::diag(int j) const {
  if (j < 1 || j > k) throw std::out_of_range("VWBlock::diag index");
  return Rational(diag_const[j - 1]) + t_abs * t_abs * Rational(diag_s[j - 1]);
}

Rational VWBlock::upper(int j) const {
  if (j < 1 || j > k - 1) throw std::out_of_range("VWBlock::upper index");
  return -t_abs * Rational(upper_coeff[j - 1]);
}

OperatorMatrix assemble_full(int m, const RossiParam& t, bool h_factored) {
  if (m < 0) throw std::invalid_argument("assemble_full: degree must be nonnegative");
  const HarmonicBasis basis = basis_hm(m);
  const int dim = static_cast<int>(basis.elements.size());
  const int group = m + 1;  // dim H_{p,q} with p + q = m

  OperatorMatrix out;
  out.dim = dim;
  out.h_factored = h_factored;
  out.entries.assign(static_cast<std::size_t>(dim) * dim, ComplexRational());
  out.basis = basis.elements;
  out.basis_norm_sq.reserve(dim);
  for (const Polynomial& f : basis.elements) out.basis_norm_sq.push_back(sphere_norm_sq(f));

  const ComplexRational h(t.h());
  for (int col = 0; col < dim; ++col) {
    Polynomial image = apply_boxbt_factored(basis.elements[col], t);
    if (!h_factored) image *= h;

    // Split the image by bidegree; each component lies in one (p, m-p) group.
    std::map<int, Polynomial> components;
    for (const auto& [mono, c] : image.terms())
      components[mono.holo_degree()].add_term(mono, c);

    for (auto& [p, comp] : components) {
      const auto bd = comp.bidegree();
      if (!bd || bd->first + bd->second != m)
        throw std::logic_error("image component escaped H_m");
      Polynomial residual = comp;
      for (int r = p * group; r < (p + 1) * group; ++r) {
        const ComplexRational coeff =
            sphere_inner_product(comp, basis.elements[r]) /
            ComplexRational(out.basis_norm_sq[r]);
        if (coeff.is_zero()) continue;
        out.at(r, col) = coeff;
        residual -= coeff * basis.elements[r];
      }
      if (!residual.is_zero())
        throw std::logic_error("image not resolved by the harmonic basis");
    }
  }
  return out;
}

std::pair<std::vector<Polynomial>, std::vector<Polynomial>> vw_chain(int k, int i) {
  if (k < 1) throw std::invalid_argument("vw_chain: k must be >= 1");
  if (i < 0 || i > 2 * k - 1) throw std::out_of_range("vw_chain: chain index i out of range");
  const HarmonicBasis top = basis_hpq_derivative(0, 2 * k - 1);

  std::vector<Polynomial> v, w;
  Polynomial current = top.elements[static_cast<std::size_t>(i)];
  for (int j = 1; j <= k; ++j) {
    v.push_back(current);                 // Lbar^{2j-2} f_i
    current = apply_Lbar(current);
    w.push_back(current);                 // Lbar^{2j-1} f_i
    current = apply_Lbar(current);
  }
  for (const auto& chain : {v, w})
    for (const Polynomial& f : chain)
      if (f.is_zero()) throw std::logic_error("vw_chain produced a zero element");
  return {std::move(v), std::move(w)};
}

VWBlock closed_form_block(int k, BlockKind kind, const RossiParam& t) {
  if (k < 1) throw std::invalid_argument("closed_form_block: k must be >= 1");
  VWBlock b;
  b.k = k;
  b.kind = kind;
  b.t_abs = t.t_abs();
  const long kk = k;
  for (long j = 1; j <= kk; ++j) {
    if (kind == BlockKind::V) {
      b.diag_const.push_back((2 * j - 1) * (2 * kk + 1 - 2 * j));
      b.diag_s.push_back((2 * j - 2) * (2 * kk + 2 - 2 * j));
    } else {
      b.diag_const.push_back((2 * j) * (2 * kk - 2 * j));
      b.diag_s.push_back((2 * j - 1) * (2 * kk + 1 - 2 * j));
    }
  }
  for (long j = 1; j <= kk - 1; ++j) {
    if (kind == BlockKind::V)
      b.upper_coeff.push_back((2 * j) * (2 * j - 1) * (2 * kk + 1 - 2 * j) * (2 * kk - 2 * j));
    else
      b.upper_coeff.push_back((2 * j + 1) * (2 * j) * (2 * kk - 2 * j) * (2 * kk - 1 - 2 * j));
  }
  return b;
}

namespace {

// Checks one chain against one block, appending labels of failed columns.
void check_chain(const std::vector<Polynomial>& chain, const VWBlock& block,
                 const RossiParam& t, int i, std::vector<std::string>& mismatches) {
  const int k = block.k;
  for (int j = 1; j <= k; ++j) {
    const Polynomial image = apply_boxbt_factored(chain[j - 1], t);
    Polynomial expected = ComplexRational(block.diag(j)) * chain[j - 1];
    if (j >= 2) expected += ComplexRational(block.upper(j - 1)) * chain[j - 2];
    if (j <= k - 1) expected += ComplexRational(block.lower()) * chain[j];
    if (!(image == expected))
      mismatches.push_back("(" + to_string(block.kind) + ", chain " + std::to_string(i) +
                           ", position " + std::to_string(j) + ")");
  }
}

}  // namespace

InvarianceReport verify_invariance_blocks(const VWBlock& v_block, const VWBlock& w_block,
                                          const RossiParam& t) {
  if (v_block.k != w_block.k) throw std::invalid_argument("block sizes disagree");
  const int k = v_block.k;
  InvarianceReport report;
  report.k = k;
  for (int i = 0; i <= 2 * k - 1; ++i) {
    const auto [v, w] = vw_chain(k, i);
    check_chain(v, v_block, t, i, report.mismatches);
    check_chain(w, w_block, t, i, report.mismatches);
  }
  report.ok = report.mismatches.empty();
  return report;
}

InvarianceReport verify_invariance(int k, const RossiParam& t) {
  const int limit = exact_mode_limit();
  if (k > limit)
    throw std::invalid_argument("verify_invariance: k = " + std::to_string(k) +
                                " exceeds the exact-arithmetic limit " + std::to_string(limit));
  return verify_invariance_blocks(closed_form_block(k, BlockKind::V, t),
                                  closed_form_block(k, BlockKind::W, t), t);
}

int exact_mode_limit() {
  const char* env = std::getenv("KOHN_SPECTRA_EXACT_LIMIT");
  if (env == nullptr || *env == '\0') return 5;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1)
    throw std::invalid_argument("KOHN_SPECTRA_EXACT_LIMIT must be a positive integer");
  return static_cast<int>(v);
}

std::vector<double> full_spectrum(const OperatorMatrix& matrix) {
  const int n = matrix.dim;
  const std::vector<double> raw = matrix.to_real_dense();

  // Rescale to the orthonormal basis: S M S^{-1} with S = diag(|f_i|).
  std::vector<double> norms(n);
  for (int i = 0; i < n; ++i) norms[i] = std::sqrt(matrix.basis_norm_sq[i].get_d());

  Eigen::MatrixXd sym(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sym(i, j) = norms[i] * raw[static_cast<std::size_t>(i) * n + j] / norms[j];

  const double asym = (sym - sym.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12)
    throw std::logic_error("rescaled operator matrix is not symmetric (defect " +
                           std::to_string(asym) + ")");
  sym = 0.5 * (sym + sym.transpose());

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
  if (solver.info() != Eigen::Success) throw std::runtime_error("dense eigensolve failed");
  std::vector<double> eigs(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  return eigs;  // SelfAdjointEigenSolver returns them sorted ascending
}

std::vector<std::pair<double, int>> spectrum_multiplicity(int k, const RossiParam& t,
                                                          double tol) {
  if (k < 1) throw std::invalid_argument("spectrum_multiplicity: k must be >= 1");
  const double h = t.h().get_d();
  const int mult = 2 * k;

  // Block eigenvalues come from the bisection route, deliberately independent
  // of the dense solver used on assembled matrices.
  std::vector<double> values;
  for (const BlockKind kind : {BlockKind::V, BlockKind::W}) {
    const VWBlock block = closed_form_block(k, kind, t);
    for (double v : all_eigenvalues(block_symmetric(block), 1e-13)) values.push_back(h * v);
  }
  std::sort(values.begin(), values.end());

  std::vector<std::pair<double, int>> clustered;
  for (double v : values) {
    if (!clustered.empty() && std::abs(clustered.back().first - v) <= tol)
      clustered.back().second += mult;
    else
      clustered.emplace_back(v, mult);
  }
  return clustered;
}

}  // namespace kohn
