// Small dense exact linear algebra over the rationals: just enough for
// harmonic-kernel extraction, change-of-basis checks, and determinant
// cross-checks.  Not performance-tuned; matrices here stay small.
#pragma once

#include "kohn/rational.hpp"

#include <optional>
#include <vector>

namespace kohn {

using RatMatrix = std::vector<std::vector<Rational>>;  // row-major, rectangular

// Basis of { x : A x = 0 }, one vector per free column, deterministic order.
std::vector<std::vector<Rational>> nullspace(RatMatrix a, std::size_t ncols);

// Determinant by exact LU with partial (first-nonzero) pivoting.
Rational determinant(RatMatrix a);

// One solution of A x = b if the system is consistent (free variables get 0),
// nullopt otherwise.  A may be rectangular.
std::optional<std::vector<Rational>> solve_linear(RatMatrix a, std::vector<Rational> b);

}  // namespace kohn
