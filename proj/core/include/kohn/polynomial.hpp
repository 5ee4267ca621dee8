// Sparse polynomials in z1, z2 and their conjugates (zb1 = conj z1, zb2 =
// conj z2) with exact Gaussian-rational coefficients.  The representation is
// always canonical: zero coefficients are never stored, so equality is plain
// structural equality.
#pragma once

#include "kohn/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace kohn {

enum class Var { z1, z2, zb1, zb2 };

const char* var_name(Var v);

// conj z1 <-> zb1, conj z2 <-> zb2
Var conj_var(Var v);

struct Monomial {
  int a1 = 0;  // exponent of z1
  int a2 = 0;  // exponent of z2
  int b1 = 0;  // exponent of zb1
  int b2 = 0;  // exponent of zb2

  int holo_degree() const { return a1 + a2; }
  int anti_degree() const { return b1 + b2; }
  int degree() const { return holo_degree() + anti_degree(); }

  int exponent(Var v) const;
  Monomial with_exponent(Var v, int e) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, ComplexRational>;

  Polynomial() = default;

  static Polynomial constant(ComplexRational c);
  static Polynomial term(const Monomial& m, ComplexRational c);
  static Polynomial variable(Var v);

  bool is_zero() const { return terms_.empty(); }

  // Total degree of the highest term; -1 for the zero polynomial.
  int degree() const;

  bool is_homogeneous() const;

  // (p, q) = (holomorphic, anti-holomorphic) degree shared by every term.
  // nullopt when the polynomial is zero or mixes bidegrees.
  std::optional<std::pair<int, int>> bidegree() const;

  const TermMap& terms() const { return terms_; }

  ComplexRational coefficient(const Monomial& m) const;

  // Adds c * m, erasing the entry if the sum cancels.
  void add_term(const Monomial& m, const ComplexRational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const ComplexRational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const ComplexRational& c) { return a *= c; }
  friend Polynomial operator*(const ComplexRational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }

 private:
  TermMap terms_;
};

// Text form: terms joined by " + ", each "coeff * z1^a z2^b zb1^c zb2^d" with
// exponent-0 factors omitted, "^1" omitted, rationals printed "p/q" and
// complex coefficients "(re, im)".  Printing then parsing is the identity.
std::string to_string(const Polynomial& p);
Polynomial polynomial_from_string(const std::string& text);

}  // namespace kohn
