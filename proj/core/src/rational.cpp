#include "kohn/rational.hpp"

#include <stdexcept>

namespace kohn {

Rational rational_from_string(const std::string& text) {
  std::string s = text;
  // Trim surrounding whitespace.
  const auto first = s.find_first_not_of(" \t");
  const auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw std::invalid_argument("empty rational literal");
  s = s.substr(first, last - first + 1);

  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos)
      throw std::invalid_argument("rational literal mixes '.' and '/': " + text);
    bool negative = false;
    std::string body = s;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
      negative = body[0] == '-';
      body = body.substr(1);
    }
    const auto d = body.find('.');
    const std::string int_part = body.substr(0, d);
    const std::string frac_part = body.substr(d + 1);
    if (int_part.empty() && frac_part.empty())
      throw std::invalid_argument("malformed decimal literal: " + text);
    for (char c : int_part + frac_part)
      if (c < '0' || c > '9') throw std::invalid_argument("malformed decimal literal: " + text);
    Integer numer(int_part.empty() ? "0" : int_part);
    for (char c : frac_part) {
      numer *= 10;
      numer += c - '0';
    }
    Integer denom = 1;
    for (size_t i = 0; i < frac_part.size(); ++i) denom *= 10;
    Rational r(numer, denom);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }

  mpq_class r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + text);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  Rational canonical = r;
  canonical.canonicalize();
  return canonical.get_str();
}

Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

ComplexRational& ComplexRational::operator+=(const ComplexRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

ComplexRational& ComplexRational::operator-=(const ComplexRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

ComplexRational& ComplexRational::operator*=(const ComplexRational& o) {
  Rational new_re = re * o.re - im * o.im;
  Rational new_im = re * o.im + im * o.re;
  re = std::move(new_re);
  im = std::move(new_im);
  return *this;
}

ComplexRational& ComplexRational::operator/=(const ComplexRational& o) {
  const Rational n = o.norm_sq();
  if (n == 0) throw std::domain_error("division by zero ComplexRational");
  Rational new_re = (re * o.re + im * o.im) / n;
  Rational new_im = (im * o.re - re * o.im) / n;
  re = std::move(new_re);
  im = std::move(new_im);
  return *this;
}

std::string to_string(const ComplexRational& c) {
  if (c.is_real()) return to_string(c.re);
  return "(" + to_string(c.re) + ", " + to_string(c.im) + ")";
}

RossiParam::RossiParam(Rational t_abs) : t_abs_(std::move(t_abs)) {
  t_abs_.canonicalize();
  if (t_abs_ < 0 || t_abs_ >= 1)
    throw std::domain_error("RossiParam requires 0 <= |t| < 1, got " + to_string(t_abs_));
}

Rational RossiParam::h() const {
  const Rational s = t_squared();
  const Rational d = 1 - s;
  return (1 + s) / (d * d);
}

}  // namespace kohn
