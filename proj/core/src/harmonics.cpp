#include "kohn/harmonics.hpp"

#include "kohn/exact_linalg.hpp"
#include "kohn/operators.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace kohn {

Polynomial norm_sq_poly() {
  Polynomial p;
  p.add_term(Monomial{1, 0, 1, 0}, ComplexRational(1));
  p.add_term(Monomial{0, 1, 0, 1}, ComplexRational(1));
  return p;
}

namespace {

void check_bidegree_args(int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("bidegree indices must be nonnegative");
}

std::vector<Monomial> monomials_of_bidegree(int p, int q) {
  std::vector<Monomial> out;
  for (int a1 = 0; a1 <= p; ++a1)
    for (int b1 = 0; b1 <= q; ++b1) out.push_back(Monomial{a1, p - a1, b1, q - b1});
  return out;
}

// --- Kelvin-derivative construction ---------------------------------------
//
// Intermediate values are Laurent pairs P / |z|^{2N}.  One derivative step:
//   d/dv (P / |z|^{2N}) = (|z|^2 dP/dv - N d(|z|^2)/dv P) / |z|^{2(N+1)},
// with d(|z|^2)/dv the conjugate-partner variable.  Starting from 1/|z|^2 and
// taking p + q derivatives leaves a numerator that is itself the harmonic
// polynomial (its restriction to |z| = 1 equals the derivative's).

struct Laurent {
  Polynomial numer;
  int pow = 0;  // denominator |z|^{2 pow}
};

Laurent laurent_derive(const Laurent& f, Var v) {
  Polynomial partner = Polynomial::variable(conj_var(v));
  Polynomial numer = norm_sq_poly() * derive(f.numer, v) -
                     ComplexRational(f.pow) * partner * f.numer;
  return Laurent{std::move(numer), f.pow + 1};
}

Polynomial kelvin_derivative_element(int alpha1, int alpha2, int beta1, int beta2) {
  Laurent f{Polynomial::constant(ComplexRational(1)), 1};
  for (int i = 0; i < alpha1; ++i) f = laurent_derive(f, Var::zb1);
  for (int i = 0; i < alpha2; ++i) f = laurent_derive(f, Var::zb2);
  for (int i = 0; i < beta1; ++i) f = laurent_derive(f, Var::z1);
  for (int i = 0; i < beta2; ++i) f = laurent_derive(f, Var::z2);
  return f.numer;
}

HarmonicBasis build_hpq_derivative(int p, int q) {
  HarmonicBasis basis;
  basis.space = BidegreeSpace{p, q};
  // alpha_1 = 0 block first (beta_1 = 0..q), then beta_1 = 0, alpha_1 = 1..p.
  for (int beta1 = 0; beta1 <= q; ++beta1)
    basis.elements.push_back(kelvin_derivative_element(0, p, beta1, q - beta1));
  for (int alpha1 = 1; alpha1 <= p; ++alpha1)
    basis.elements.push_back(kelvin_derivative_element(alpha1, p - alpha1, 0, q));
  return basis;
}

std::mutex cache_mutex;
std::map<std::pair<int, int>, HarmonicBasis> hpq_cache;
std::map<int, HarmonicBasis> hm_cache;

}  // namespace

HarmonicBasis basis_hpq_solve(int p, int q) {
  check_bidegree_args(p, q);
  const std::vector<Monomial> cols = monomials_of_bidegree(p, q);

  HarmonicBasis basis;
  basis.space = BidegreeSpace{p, q};

  if (p == 0 || q == 0) {
    // The Laplacian vanishes identically on pure (p,0) / (0,q) monomials.
    for (const Monomial& m : cols)
      basis.elements.push_back(Polynomial::term(m, ComplexRational(1)));
    return basis;
  }

  const std::vector<Monomial> rows = monomials_of_bidegree(p - 1, q - 1);

  RatMatrix a(rows.size(), std::vector<Rational>(cols.size(), Rational(0)));
  std::map<Monomial, std::size_t> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;

  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Polynomial image = laplacian(Polynomial::term(cols[j], ComplexRational(1)));
    for (const auto& [m, c] : image.terms()) {
      if (!c.is_real()) throw std::logic_error("laplacian of a monomial must be real");
      a[row_index.at(m)][j] = c.re;
    }
  }

  for (const auto& v : nullspace(std::move(a), cols.size())) {
    Polynomial f;
    for (std::size_t j = 0; j < cols.size(); ++j) f.add_term(cols[j], ComplexRational(v[j]));
    basis.elements.push_back(std::move(f));
  }
  return basis;
}

HarmonicBasis basis_hpq_derivative(int p, int q) {
  check_bidegree_args(p, q);
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = hpq_cache.find({p, q});
  if (it == hpq_cache.end()) it = hpq_cache.emplace(std::pair{p, q}, build_hpq_derivative(p, q)).first;
  return it->second;
}

HarmonicBasis basis_hm(int m) {
  if (m < 0) throw std::invalid_argument("degree must be nonnegative");
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    const auto it = hm_cache.find(m);
    if (it != hm_cache.end()) return it->second;
  }
  HarmonicBasis basis;
  basis.space = BidegreeSpace{-1, -1};
  basis.total_degree = m;
  for (int p = 0; p <= m; ++p) {
    HarmonicBasis group = basis_hpq_derivative(p, m - p);
    for (auto& f : group.elements) basis.elements.push_back(std::move(f));
  }
  std::lock_guard<std::mutex> lock(cache_mutex);
  hm_cache.emplace(m, basis);
  return basis;
}

std::vector<std::pair<int, Polynomial>> decompose(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("decompose: zero polynomial has no degree");
  if (!p.is_homogeneous()) throw std::invalid_argument("decompose: input must be homogeneous");
  const int m = p.degree();

  std::vector<std::pair<int, Polynomial>> parts;
  if (m <= 1) {
    parts.emplace_back(0, p);
    return parts;
  }

  const Polynomial lap = laplacian(p);
  if (lap.is_zero()) {
    parts.emplace_back(0, p);
    for (int j = 1; 2 * j <= m; ++j) parts.emplace_back(j, Polynomial());
    return parts;
  }

  // lap = sum_{j>=1} 4j(m-j+1) |z|^{2(j-1)} h_{m-2j}: peel the lower levels
  // off the recursive decomposition of the Laplacian.
  const auto sub = decompose(lap);
  parts.emplace_back(0, Polynomial());  // placeholder for the top component
  Polynomial tail;                      // sum_{j>=1} |z|^{2j} h_{m-2j}
  Polynomial zsq_power = norm_sq_poly();
  for (const auto& [i, r] : sub) {
    const int j = i + 1;
    const ComplexRational scale(Rational(1, 4 * j * (m - j + 1)));
    Polynomial h = scale * r;
    tail += zsq_power * h;
    parts.emplace_back(j, std::move(h));
    zsq_power *= norm_sq_poly();
  }
  parts[0].second = p - tail;
  return parts;
}

}  // namespace kohn
