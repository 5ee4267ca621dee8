// Exact scalar arithmetic: arbitrary-precision rationals, Gaussian rationals,
// and the deformation parameter with its normalization constant h.
#pragma once

#include <gmpxx.h>

#include <string>

namespace kohn {

using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p/q", a plain integer, or a decimal literal like "0.25" / "-1.5".
// The result is always canonical; a zero denominator is rejected.
Rational rational_from_string(const std::string& text);

std::string to_string(const Rational& r);

Integer factorial(unsigned n);

// Gaussian rational re + i*im.  Field operations are exact; division by zero
// throws.  Comparisons are exact equality only (no ordering).  Components are
// canonicalized on entry, so fractions like 4/2 compare equal to 2.
struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() : re(0), im(0) {}
  ComplexRational(int value) : re(value), im(0) {}
  ComplexRational(Rational real_part) : re(std::move(real_part)), im(0) { re.canonicalize(); }
  ComplexRational(Rational real_part, Rational imag_part)
      : re(std::move(real_part)), im(std::move(imag_part)) {
    re.canonicalize();
    im.canonicalize();
  }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  ComplexRational conj() const { return {re, -im}; }

  // |value|^2 = re^2 + im^2, exact.
  Rational norm_sq() const { return re * re + im * im; }

  ComplexRational operator-() const { return {-re, -im}; }

  ComplexRational& operator+=(const ComplexRational& o);
  ComplexRational& operator-=(const ComplexRational& o);
  ComplexRational& operator*=(const ComplexRational& o);
  ComplexRational& operator/=(const ComplexRational& o);

  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
  friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

std::string to_string(const ComplexRational& c);

// Deformation parameter of the perturbed structure, reduced to its modulus
// t_abs in [0, 1).  A complex parameter t = |t| e^{i theta} is spectrally
// equivalent to |t| (diagonal unitary change of basis along the chains), so
// only the modulus is carried around.
class RossiParam {
 public:
  explicit RossiParam(Rational t_abs);

  const Rational& t_abs() const { return t_abs_; }
  Rational t_squared() const { return t_abs_ * t_abs_; }

  // h = (1 + |t|^2) / (1 - |t|^2)^2, the prefactor of the perturbed operator.
  Rational h() const;

 private:
  Rational t_abs_;
};

}  // namespace kohn
