#include "kohn/operators.hpp"

#include <stdexcept>

namespace kohn {

Polynomial derive(const Polynomial& p, Var v) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    const int e = m.exponent(v);
    if (e == 0) continue;
    out.add_term(m.with_exponent(v, e - 1), c * ComplexRational(e));
  }
  return out;
}

namespace {

// v_mul * d/dv_diff, with monomial multiplication fused in.
Polynomial shift_derive(const Polynomial& p, Var v_mul, Var v_diff) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    const int e = m.exponent(v_diff);
    if (e == 0) continue;
    Monomial shifted = m.with_exponent(v_diff, e - 1);
    shifted = shifted.with_exponent(v_mul, shifted.exponent(v_mul) + 1);
    out.add_term(shifted, c * ComplexRational(e));
  }
  return out;
}

}  // namespace

Polynomial apply_L(const Polynomial& p) {
  return shift_derive(p, Var::zb1, Var::z2) - shift_derive(p, Var::zb2, Var::z1);
}

Polynomial apply_Lbar(const Polynomial& p) {
  return shift_derive(p, Var::z1, Var::zb2) - shift_derive(p, Var::z2, Var::zb1);
}

Polynomial laplacian(const Polynomial& p) {
  Polynomial out = derive(derive(p, Var::z1), Var::zb1) + derive(derive(p, Var::z2), Var::zb2);
  return out * ComplexRational(4);
}

Polynomial apply_boxb(const Polynomial& p) { return -apply_L(apply_Lbar(p)); }

Polynomial apply_boxbt_factored(const Polynomial& p, const RossiParam& t) {
  const ComplexRational tc(t.t_abs());
  const ComplexRational sc(t.t_squared());
  Polynomial acc = apply_L(apply_Lbar(p));
  acc += sc * apply_Lbar(apply_L(p));
  acc += tc * apply_L(apply_L(p));
  acc += tc * apply_Lbar(apply_Lbar(p));
  return -acc;
}

Polynomial apply_boxbt(const Polynomial& p, const RossiParam& t) {
  return ComplexRational(t.h()) * apply_boxbt_factored(p, t);
}

namespace {

// int_{S^3} z^(g1,g2) zb^(g1,g2) dsigma for the unit-mass measure.
Rational diagonal_monomial_integral(int g1, int g2) {
  const Integer numer = factorial(g1) * factorial(g2);
  const Integer denom = factorial(static_cast<unsigned>(g1 + g2 + 1));
  Rational r(numer, denom);
  r.canonicalize();
  return r;
}

}  // namespace

ComplexRational sphere_inner_product(const Polynomial& f, const Polynomial& g) {
  ComplexRational acc;
  for (const auto& [mf, cf] : f.terms()) {
    for (const auto& [mg, cg] : g.terms()) {
      // f * conj(g): the conjugate term swaps holomorphic/anti exponents.
      const int h1 = mf.a1 + mg.b1, h2 = mf.a2 + mg.b2;
      const int a1 = mf.b1 + mg.a1, a2 = mf.b2 + mg.a2;
      if (h1 != a1 || h2 != a2) continue;
      acc += cf * cg.conj() * ComplexRational(diagonal_monomial_integral(h1, h2));
    }
  }
  return acc;
}

Rational sphere_norm_sq(const Polynomial& f) {
  const ComplexRational n = sphere_inner_product(f, f);
  if (!n.is_real()) throw std::logic_error("norm_sq produced a nonreal value");
  return n.re;
}

}  // namespace kohn
