#pragma once

// Finite-dimensional associative algebras given by structure constants.

#include <string>
#include <vector>

#include "hopf/linalg.hpp"
#include "hopf/unipoly.hpp"

namespace hopf {

/// One named axiom check and the places where it fails.
struct Check {
    std::string name;
    std::vector<std::string> violations;
};

struct Report {
    std::vector<Check> checks;

    bool ok() const;
    std::size_t violation_count() const;
    /// One line per check: "name: ok" or "name: FAIL (n) first, second, ...".
    std::string to_text(std::size_t max_listed = 5) const;
    const Check* find(const std::string& name) const;
};

struct AssocAlgebra {
    const CycloField* field = nullptr;
    std::size_t dim = 0;
    Tensor3 mult;
    Vector unit;

    Vector basis(std::size_t i) const { return unit_vector(*field, dim, i); }
    Vector multiply(const Vector& a, const Vector& b) const { return tensor_product_apply(mult, a, b); }
    /// Matrix of x -> a x.
    Matrix left_mult(const Vector& a) const { return contract(mult, ContractMode::left_mult, a); }
    /// Matrix of x -> x a.
    Matrix right_mult(const Vector& a) const { return contract(mult, ContractMode::right_mult, a); }
};

AssocAlgebra embed(const AssocAlgebra& a, const CycloField& target);

/// Associativity on all basis triples and the two-sided unit law on all basis elements.
Report verify_algebra(const AssocAlgebra& a);

/// Jacobson radical as the kernel of the trace form (x, y) -> Tr(L_{xy}).
std::vector<Vector> radical(const AssocAlgebra& a);
std::vector<Vector> center(const AssocAlgebra& a);
bool is_semisimple_trace(const AssocAlgebra& a);

/// Smallest two-sided ideal containing the generators, as an echelon basis.
SubspaceBuilder two_sided_ideal(const AssocAlgebra& a, const std::vector<Vector>& generators);

struct CharacterResult {
    /// Each character as its values on the basis, sorted.
    std::vector<Vector> characters;
    /// Irreducible polynomials of degree > 1 met while splitting; nonempty means a larger
    /// field may carry further characters.
    std::vector<UniPoly> unsplit;
};

/// All algebra maps A -> K over the working field K.
CharacterResult characters(const AssocAlgebra& a);

/// Minimal polynomial of a square matrix (monic).
UniPoly minimal_polynomial(const Matrix& m);
/// p(M)
Matrix evaluate(const UniPoly& p, const Matrix& m);

/// Lexicographic order on vectors via compare().
bool vector_less(const Vector& a, const Vector& b);

}  // namespace hopf
