#pragma once

#include <utility>
#include <vector>

#include "hopf/unipoly.hpp"

namespace hopf {

/// Monic irreducible factors over Q with multiplicities, sorted by degree then coefficients.
std::vector<std::pair<QPoly, unsigned>> factor_rational(const QPoly& p);

/// Monic irreducible factors over the coefficient field of p, with multiplicities.
/// lead(p) * prod f^m == p. Throws DivisionByZero for p = 0.
std::vector<std::pair<UniPoly, unsigned>> factor_unipoly(const UniPoly& p);

/// Roots of p in its coefficient field, repeated by multiplicity.
std::vector<FieldElement> roots_in_field(const UniPoly& p);

/// Norm of x from its field down to Q.
Rational norm(const FieldElement& x);

}  // namespace hopf
