#pragma once

// Finite-dimensional Hopf algebras by structure constants, and their invariants.

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hopf/algebra.hpp"

namespace hopf {

struct HopfAlgebra {
    AssocAlgebra algebra;
    /// comult[i][j][k]: coefficient of b_j (x) b_k in Delta(b_i)
    Tensor3 comult;
    Vector counit;
    /// Column c holds S(b_c).
    std::optional<Matrix> antipode;

    const CycloField& field() const { return *algebra.field; }
    std::size_t dim() const { return algebra.dim; }
    Vector basis(std::size_t i) const { return algebra.basis(i); }
    const Vector& unit() const { return algebra.unit; }
    Vector multiply(const Vector& a, const Vector& b) const { return algebra.multiply(a, b); }
    /// Delta(v) as a dim x dim matrix, entry (j, k) the coefficient of b_j (x) b_k.
    Matrix comultiply(const Vector& v) const;
    FieldElement counit_of(const Vector& v) const { return dot(counit, v); }
    /// Throws NoAntipode when the antipode is missing.
    const Matrix& S() const;
};

HopfAlgebra embed(const HopfAlgebra& h, const CycloField& target);

/// Axioms in this order: associativity, unit, coassociativity, counit, comult multiplicative,
/// comult unit, counit multiplicative, antipode left, antipode right.
Report verify_hopf(const HopfAlgebra& h);

/// The antipode as convolution inverse of the identity; throws NoAntipode if none exists
/// or the two-sided law fails.
Matrix solve_antipode(const HopfAlgebra& bialgebra);

/// Dual on the dual basis.
HopfAlgebra dual(const HopfAlgebra& h);

/// H1 (x) H2 on the basis b_i (x) c_j with index i * dim(H2) + j.
HopfAlgebra tensor_hopf(const HopfAlgebra& h1, const HopfAlgebra& h2);

/// Left hit x -> x_1 f(x_2) and right hit x -> f(x_1) x_2 of a functional f.
Vector hit_left(const HopfAlgebra& h, const Vector& f, const Vector& x);
Vector hit_right(const HopfAlgebra& h, const Vector& x, const Vector& f);

struct IntegralData {
    Vector left_integral;
    Vector right_integral_dual;
    Vector distinguished_a;
    Vector distinguished_alpha;
};

IntegralData integrals(const HopfAlgebra& h);
bool check_radford_s4(const HopfAlgebra& h, const IntegralData& data);
FieldElement trace_s2(const HopfAlgebra& h);
bool is_semisimple_LR(const HopfAlgebra& h);

struct GroupLikes {
    /// Identity first, then sorted.
    std::vector<Vector> elements;
    /// table[i][j] is the index of elements[i] * elements[j].
    std::vector<std::vector<std::size_t>> table;
    std::vector<unsigned> orders;
    bool abelian = true;
    bool cyclic = true;
    std::vector<UniPoly> unsplit;

    std::size_t size() const { return elements.size(); }
    std::size_t inverse_of(std::size_t i) const;
};

GroupLikes group_likes(const HopfAlgebra& h);

/// Nontrivial part of {x : Delta(x) = x (x) g + h (x) x}, i.e. a complement of span{g - h}.
std::vector<Vector> skew_primitives(const HopfAlgebra& H, const Vector& g, const Vector& h);

std::vector<Vector> coradical(const HopfAlgebra& h);
bool is_pointed(const HopfAlgebra& h);

struct Fingerprint {
    std::size_t dim = 0;
    std::size_t group_order = 0;
    std::vector<unsigned> element_orders;
    std::size_t dual_group_order = 0;
    FieldElement trace_s2;
    unsigned antipode_order = 0;
    bool pointed = false;
    bool dual_pointed = false;
    /// (order of g, order of h, order of the conjugation action of G on the quotient)
    /// -> total dimension of nontrivial (g, h)-skew primitives.
    std::map<std::tuple<unsigned, unsigned, unsigned>, std::size_t> skew_profile;

    std::string to_text() const;
};

/// Equality with traces compared inside a common field.
bool operator==(const Fingerprint& a, const Fingerprint& b);

Fingerprint fingerprint(const HopfAlgebra& h);

/// One of "A(tau,0)", "A(tau,0)*", "A(tau,1)", "A(tau,1)*", "T_q(x)k[Z_p]", "semisimple",
/// "unknown". Requires dim = 4p for an odd prime p (BadDimension otherwise).
std::string classify_4p(const HopfAlgebra& h);

}  // namespace hopf
