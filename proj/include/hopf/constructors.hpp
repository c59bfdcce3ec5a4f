#pragma once

// Structure constants of the named families.

#include "hopf/hopf.hpp"

namespace hopf {

/// k[Z_n] over Q(zeta_n) (or the given field) on the basis g^0, ..., g^(n-1).
HopfAlgebra group_algebra(unsigned n);
HopfAlgebra group_algebra(unsigned n, const CycloField& field);

/// Taft algebra T_q over the field of tau: basis g^i x^j at index i*q + j, with
/// g^q = 1, x^q = 0, g x = tau x g, Delta(g) = g (x) g, Delta(x) = x (x) g + 1 (x) x.
HopfAlgebra taft(unsigned q, const FieldElement& tau);

/// H_4 = taft(2, -1) over Q; basis 1, x, g, gx.
HopfAlgebra sweedler();

/// A(tau, mu): a^(pq) = 1, y^q = mu (1 - a^q), a y = tau y a, Delta(a) = a (x) a,
/// Delta(y) = y (x) 1 + a (x) y. Basis a^i y^j at index i*q + j. Built over
/// Q(zeta_L), L = lcm(order of tau's field, p q^2).
HopfAlgebra a_tau_mu(unsigned p, unsigned q, const FieldElement& tau, int mu);

/// taft(q, tau) (x) k[Z_p] over Q(zeta_L), L = lcm(order of tau's field, p q^2).
HopfAlgebra taft_tensor_group(unsigned q, const FieldElement& tau, unsigned p);

bool is_prime(unsigned n);

}  // namespace hopf
