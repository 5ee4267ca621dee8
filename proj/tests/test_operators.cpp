#include "kohn/operators.hpp"

#include "kohn/harmonics.hpp"
#include "kohn/polynomial.hpp"
#include "kohn/rational.hpp"

#include <doctest.h>

#include <complex>
#include <random>
#include <string>
#include <vector>

using namespace kohn;

namespace {

Polynomial P(const std::string& s) { return polynomial_from_string(s); }

ComplexRational CR(long re, long im = 0) { return {Rational(re), Rational(im)}; }

std::complex<double> eval(const Polynomial& p, std::complex<double> z1,
                          std::complex<double> z2) {
  std::complex<double> acc = 0;
  for (const auto& [m, c] : p.terms()) {
    std::complex<double> term(c.re.get_d(), c.im.get_d());
    term *= std::pow(z1, m.a1) * std::pow(z2, m.a2) * std::pow(std::conj(z1), m.b1) *
            std::pow(std::conj(z2), m.b2);
    acc += term;
  }
  return acc;
}

}  // namespace

TEST_CASE("partial derivatives") {
  CHECK(derive(P("z1^2 zb2"), Var::z1) == P("2 * z1 zb2"));
  CHECK(derive(P("zb2^3"), Var::zb2) == P("3 * zb2^2"));
  CHECK(derive(P("zb2^3"), Var::z1) == Polynomial{});
  CHECK(derive(P("7"), Var::z2) == Polynomial{});
  // linearity with complex coefficients
  CHECK(derive(P("(0, 2) * z1 z2 + z2^2"), Var::z2) == P("(0, 2) * z1 + 2 * z2"));
}

TEST_CASE("L and Lbar on generators") {
  CHECK(apply_L(P("z1")) == P("-1 * zb2"));
  CHECK(apply_L(P("z2")) == P("zb1"));
  CHECK(apply_Lbar(P("zb1")) == P("-1 * z2"));
  CHECK(apply_Lbar(P("zb2")) == P("z1"));
  CHECK(apply_Lbar(P("z1")) == Polynomial{});
  CHECK(apply_L(P("zb1")) == Polynomial{});

  // both are tangential: they annihilate |z|^2
  CHECK(apply_L(norm_sq_poly()) == Polynomial{});
  CHECK(apply_Lbar(norm_sq_poly()) == Polynomial{});

  CHECK(apply_Lbar(P("zb2^3")) == P("3 * z1 zb2^2"));
  CHECK(apply_L(P("3 * z1 zb2^2")) == P("-3 * zb2^3"));
  CHECK(apply_boxb(P("zb2^3")) == P("3 * zb2^3"));
}

TEST_CASE("Laplacian") {
  CHECK(laplacian(P("z1 zb1")) == P("4"));
  CHECK(laplacian(norm_sq_poly()) == P("8"));
  CHECK(laplacian(P("z1^2 zb2")) == Polynomial{});
  CHECK(laplacian(norm_sq_poly() * P("z1")) == P("12 * z1"));
}

TEST_CASE("perturbed operator on extremal monomials") {
  const RossiParam t(Rational(1, 2));  // s = 1/4, h = 20/9

  // purely anti-holomorphic input: box_b^t/h = 3 zb2^3 - 6t z1^2 zb2
  CHECK(apply_boxbt_factored(P("zb2^3"), t) == P("3 * zb2^3 + -3 * z1^2 zb2"));
  CHECK(apply_boxbt(P("zb2^3"), t) == P("20/3 * zb2^3 + -20/3 * z1^2 zb2"));

  // purely holomorphic input: box_b^t/h = 3s z1^3 - 6t z1 zb2^2
  CHECK(apply_boxbt_factored(P("z1^3"), t) == P("3/4 * z1^3 + -3 * z1 zb2^2"));

  // t = 0 degenerates to box_b on anything
  const Polynomial f = P("z1^2 zb2 + (0, 3) * z2 zb1 zb2 + zb1^2");
  CHECK(apply_boxbt(f, RossiParam(Rational(0))) == apply_boxb(f));
  CHECK(apply_boxbt_factored(f, RossiParam(Rational(0))) == apply_boxb(f));
}

TEST_CASE("box_b and -Lbar L act as scalars on every harmonic bidegree") {
  for (const auto [p, q] : {std::pair{0, 3}, {1, 1}, {2, 1}, {1, 2}, {3, 2}, {2, 4}}) {
    const HarmonicBasis basis = basis_hpq_solve(p, q);
    REQUIRE(basis.elements.size() == static_cast<std::size_t>(p + q + 1));
    for (const Polynomial& f : basis.elements) {
      CHECK(apply_boxb(f) == ComplexRational(Rational(p * q + q)) * f);
      CHECK(-apply_Lbar(apply_L(f)) == ComplexRational(Rational(p * q + p)) * f);
    }
  }
}

TEST_CASE("exact inner product values") {
  CHECK(sphere_inner_product(P("1"), P("1")) == CR(1));
  CHECK(sphere_inner_product(P("z1"), P("z1")) == ComplexRational(Rational(1, 2)));
  CHECK(sphere_inner_product(P("z2"), P("z2")) == ComplexRational(Rational(1, 2)));
  CHECK(sphere_inner_product(P("z1"), P("z2")) == CR(0));
  CHECK(sphere_inner_product(P("z1"), P("zb1")) == CR(0));
  CHECK(sphere_inner_product(P("z1^2"), P("z1^2")) == ComplexRational(Rational(1, 3)));
  CHECK(sphere_inner_product(P("z1 zb2"), P("z1 zb2")) == ComplexRational(Rational(1, 6)));
  // distinct monomials need not be orthogonal: z1 zb1 vs z2 zb2
  CHECK(sphere_inner_product(P("z1 zb1"), P("z2 zb2")) == ComplexRational(Rational(1, 6)));

  // conjugate symmetry with complex coefficients
  const Polynomial f = P("(1, 1) * z1 + z2");
  const Polynomial g = P("z1 + (0, -2) * z2");
  CHECK(sphere_inner_product(f, g) == sphere_inner_product(g, f).conj());

  CHECK(sphere_norm_sq(P("z1 + z2")) == Rational(1));
  CHECK(sphere_norm_sq(P("3 * z1 zb2")) == Rational(3, 2));
}

TEST_CASE("Monte Carlo agrees with the closed-form inner product") {
  std::mt19937 rng(20260814u);
  std::normal_distribution<double> gauss;

  const std::vector<std::pair<Polynomial, Polynomial>> pairs = {
      {P("z1"), P("z1")},                // 1/2
      {P("z1 zb2"), P("z1 zb2")},        // 1/6
      {P("z1 zb1"), P("z2 zb2")},        // 1/6
      {P("z1"), P("z2")},                // 0
      {P("zb2^3"), P("zb2^3")},          // 3!/4! = 1/4
  };

  const int n = 200000;
  std::vector<std::complex<double>> acc(pairs.size(), 0.0);
  for (int it = 0; it < n; ++it) {
    const double x0 = gauss(rng), x1 = gauss(rng), x2 = gauss(rng), x3 = gauss(rng);
    const double r = std::sqrt(x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3);
    const std::complex<double> z1(x0 / r, x1 / r), z2(x2 / r, x3 / r);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      acc[i] += eval(pairs[i].first, z1, z2) * std::conj(eval(pairs[i].second, z1, z2));
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const ComplexRational exact = sphere_inner_product(pairs[i].first, pairs[i].second);
    const std::complex<double> mc = acc[i] / static_cast<double>(n);
    CHECK(std::abs(mc.real() - exact.re.get_d()) < 1e-2);
    CHECK(std::abs(mc.imag() - exact.im.get_d()) < 1e-2);
  }
}

TEST_CASE("adjoint identities") {
  // <Lbar f, g> = -<f, L g>, the witness pair first
  CHECK(sphere_inner_product(apply_Lbar(P("zb2")), P("z1")) == ComplexRational(Rational(1, 2)));
  CHECK(sphere_inner_product(P("zb2"), apply_L(P("z1"))) == ComplexRational(Rational(-1, 2)));

  const std::vector<std::pair<Polynomial, Polynomial>> pairs = {
      {P("zb2"), P("z1")},
      {P("z1 zb2^2"), P("z1^2 zb2")},
      {P("(1, 2) * z2 zb1 + zb2^2"), P("z1 zb2 + (0, -1) * z2 zb1")},
      {P("zb1^2 zb2"), P("z1 zb1 zb2 + z2 zb2^2")},
  };
  for (const auto& [f, g] : pairs) {
    CHECK(sphere_inner_product(apply_Lbar(f), g) ==
          -sphere_inner_product(f, apply_L(g)));
    // second form, both slots under Lbar
    CHECK(sphere_inner_product(apply_Lbar(f), apply_Lbar(g)) ==
          sphere_inner_product(f, apply_boxb(g)));
  }
}

TEST_CASE("box_b^t is Hermitian for the sphere pairing") {
  const HarmonicBasis basis = basis_hm(3);
  for (const Rational& tv : {Rational(1, 2), Rational(3, 7)}) {
    const RossiParam t(tv);
    // a spread of index pairs, including cross-bidegree ones
    for (const auto [i, j] :
         {std::pair{0, 0}, {0, 12}, {1, 10}, {3, 9}, {4, 14}, {6, 12}, {11, 0}, {15, 7}}) {
      const Polynomial& f = basis.elements[i];
      const Polynomial& g = basis.elements[j];
      CHECK(sphere_inner_product(apply_boxbt(f, t), g) ==
            sphere_inner_product(f, apply_boxbt(g, t)));
    }
  }
}
