#include "kohn/harmonics.hpp"

#include "kohn/exact_linalg.hpp"
#include "kohn/operators.hpp"
#include "kohn/polynomial.hpp"

#include <doctest.h>

#include <map>
#include <string>
#include <thread>
#include <vector>

using namespace kohn;

namespace {

Polynomial P(const std::string& s) { return polynomial_from_string(s); }

// Coefficient vector of f over the union of supports, using a shared index.
std::vector<Rational> coefficient_vector(const Polynomial& f,
                                         const std::map<Monomial, std::size_t>& index) {
  std::vector<Rational> v(index.size(), Rational(0));
  for (const auto& [m, c] : f.terms()) {
    REQUIRE(c.is_real());
    v.at(index.at(m)) = c.re;
  }
  return v;
}

}  // namespace

TEST_CASE("dimension count dim H_{p,q} = p+q+1 for both constructions") {
  for (int p = 0; p <= 12; ++p) {
    for (int q = 0; p + q <= 12; ++q) {
      CAPTURE(p);
      CAPTURE(q);
      CHECK(basis_hpq_derivative(p, q).elements.size() == static_cast<std::size_t>(p + q + 1));
      if (p + q <= 9)
        CHECK(basis_hpq_solve(p, q).elements.size() == static_cast<std::size_t>(p + q + 1));
    }
  }
  CHECK_THROWS_AS(basis_hpq_derivative(-1, 2), std::invalid_argument);
  CHECK_THROWS_AS(basis_hpq_solve(0, -3), std::invalid_argument);
}

TEST_CASE("derivative basis elements are harmonic with the right bidegree") {
  for (const auto [p, q] : {std::pair{0, 4}, {1, 2}, {2, 2}, {3, 1}, {4, 3}}) {
    for (const Polynomial& f : basis_hpq_derivative(p, q).elements) {
      CHECK(laplacian(f) == Polynomial{});
      CHECK(f.bidegree() == std::pair{p, q});
    }
  }
}

TEST_CASE("degree-3 basis, frozen element by element") {
  const HarmonicBasis basis = basis_hm(3);
  CHECK(basis.total_degree == 3);
  REQUIRE(basis.elements.size() == 16);

  const char* expected[16] = {
      // H_{0,3}
      "-6 * zb2^3",
      "-6 * zb1 zb2^2",
      "-6 * zb1^2 zb2",
      "-6 * zb1^3",
      // H_{1,2}
      "4 * z1 zb1 zb2 + -2 * z2 zb2^2",
      "2 * z1 zb1^2 + -4 * z2 zb1 zb2",
      "-6 * z2 zb1^2",
      "-6 * z1 zb2^2",
      // H_{2,1}
      "4 * z1 z2 zb1 + -2 * z2^2 zb2",
      "-6 * z2^2 zb1",
      "2 * z1^2 zb1 + -4 * z1 z2 zb2",
      "-6 * z1^2 zb2",
      // H_{3,0}
      "-6 * z2^3",
      "-6 * z1 z2^2",
      "-6 * z1^2 z2",
      "-6 * z1^3",
  };
  for (int i = 0; i < 16; ++i) {
    CAPTURE(i);
    CHECK(basis.elements[i] == P(expected[i]));
  }
}

TEST_CASE("full-degree bases are orthogonal with positive norms") {
  for (int m = 0; m <= 4; ++m) {
    const HarmonicBasis basis = basis_hm(m);
    REQUIRE(basis.elements.size() == static_cast<std::size_t>((m + 1) * (m + 1)));
    for (std::size_t i = 0; i < basis.elements.size(); ++i) {
      CHECK(sphere_norm_sq(basis.elements[i]) > 0);
      for (std::size_t j = i + 1; j < basis.elements.size(); ++j) {
        CAPTURE(m);
        CAPTURE(i);
        CAPTURE(j);
        CHECK(sphere_inner_product(basis.elements[i], basis.elements[j]).is_zero());
      }
    }
  }
}

TEST_CASE("solver and derivative constructions span the same space") {
  for (const auto [p, q] : {std::pair{2, 1}, {1, 3}, {3, 3}}) {
    const HarmonicBasis solve = basis_hpq_solve(p, q);
    const HarmonicBasis deriv = basis_hpq_derivative(p, q);

    std::map<Monomial, std::size_t> index;
    for (const auto& basis : {solve, deriv})
      for (const Polynomial& f : basis.elements)
        for (const auto& [m, c] : f.terms()) index.emplace(m, index.size());

    // columns = solver basis; every derivative element must be expressible
    RatMatrix a(index.size(), std::vector<Rational>(solve.elements.size(), Rational(0)));
    for (std::size_t col = 0; col < solve.elements.size(); ++col) {
      const auto v = coefficient_vector(solve.elements[col], index);
      for (std::size_t row = 0; row < index.size(); ++row) a[row][col] = v[row];
    }
    for (const Polynomial& f : deriv.elements) {
      const auto rhs = coefficient_vector(f, index);
      CHECK(solve_linear(a, rhs).has_value());
    }
  }
}

TEST_CASE("harmonic decomposition: fixed examples") {
  {
    const auto parts = decompose(P("z1^3"));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == std::pair{0, P("z1^3")});
    CHECK(parts[1].second.is_zero());
  }
  {
    const auto parts = decompose(norm_sq_poly() * P("z1"));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].second.is_zero());
    CHECK(parts[1] == std::pair{1, P("z1")});
  }
  {
    const auto parts = decompose(P("z1 zb1"));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].second == P("z1 zb1") - ComplexRational(Rational(1, 2)) * norm_sq_poly());
    CHECK(parts[1].second == P("1/2"));
  }
}

TEST_CASE("harmonic decomposition: reconstruction and harmonicity") {
  const Polynomial samples[] = {
      P("z1^2 z2 zb1 zb2 + z2^3 zb1 zb2"),
      norm_sq_poly() * norm_sq_poly() * P("z2"),
      P("z1^4 zb1^2 + 3 * z1 z2 zb1 zb2 z1 z2"),
  };
  for (const Polynomial& p : samples) {
    const auto parts = decompose(p);
    Polynomial sum;
    Polynomial zsq_power = P("1");
    std::size_t level = 0;
    for (const auto& [j, h] : parts) {
      CHECK(j == static_cast<int>(level));
      CHECK(laplacian(h) == Polynomial{});
      sum += zsq_power * h;
      zsq_power *= norm_sq_poly();
      ++level;
    }
    CHECK(sum == p);
  }

  CHECK_THROWS(decompose(P("z1 + z2^2")));  // not homogeneous
  CHECK_THROWS(decompose(Polynomial{}));
}

TEST_CASE("bases are cached and safe to query concurrently") {
  std::vector<std::thread> workers;
  std::vector<std::size_t> sizes(8, 0);
  for (int w = 0; w < 8; ++w) {
    workers.emplace_back([w, &sizes] {
      const int m = 3 + w % 3;
      sizes[w] = basis_hm(m).elements.size() + basis_hpq_derivative(2, 2).elements.size();
    });
  }
  for (auto& th : workers) th.join();
  for (int w = 0; w < 8; ++w) {
    const int m = 3 + w % 3;
    CHECK(sizes[w] == static_cast<std::size_t>((m + 1) * (m + 1) + 5));
  }

  // repeated queries hand back the same polynomials
  CHECK(basis_hm(4).elements == basis_hm(4).elements);
}
