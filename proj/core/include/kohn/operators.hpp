// Differential operators on the sphere S^3 in C^2 and the exact inner
// product of polynomial restrictions.
//
//   L    = zb1 d/dz2 - zb2 d/dz1          (tangential, annihilates |z|^2)
//   Lbar = z1 d/dzb2 - z2 d/dzb1
//   box_b   = -L Lbar
//   box_b^t = -h ( L Lbar + |t|^2 Lbar L + t L^2 + t Lbar^2 ),  t real >= 0
//             with h = (1 + |t|^2) / (1 - |t|^2)^2.
//
// On a harmonic polynomial of bidegree (p, q): box_b f = (pq + q) f and
// -Lbar L f = (pq + p) f.
#pragma once

#include "kohn/polynomial.hpp"
#include "kohn/rational.hpp"

namespace kohn {

Polynomial derive(const Polynomial& p, Var v);

Polynomial apply_L(const Polynomial& p);
Polynomial apply_Lbar(const Polynomial& p);

// Full Laplacian of C^2 = R^4: 4 (d2/dz1 dzb1 + d2/dz2 dzb2).
Polynomial laplacian(const Polynomial& p);

Polynomial apply_boxb(const Polynomial& p);

// box_b^t with the prefactor h included (exact, h(t) rational).
Polynomial apply_boxbt(const Polynomial& p, const RossiParam& t);

// box_b^t / h; the natural normalization for matrix work.
Polynomial apply_boxbt_factored(const Polynomial& p, const RossiParam& t);

// <f, g> = integral over S^3 of f * conj(g) against the unit-mass round
// measure.  Uses the closed form  int z^g zb^g dsigma = g! / (|g|+1)!  per
// monomial (zero off the diagonal); exact.
ComplexRational sphere_inner_product(const Polynomial& f, const Polynomial& g);

// <f, f>, returned as a plain rational (imaginary part vanishes identically).
Rational sphere_norm_sq(const Polynomial& f);

}  // namespace kohn
