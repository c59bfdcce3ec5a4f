#pragma once

// Yetter-Drinfeld modules over a Hopf algebra B, braided Hopf algebras in that category,
// and the Radford biproduct R x B.

#include <memory>

#include "hopf/hopf.hpp"

namespace hopf {

struct YDModule {
    std::shared_ptr<const HopfAlgebra> base;
    std::size_t dim = 0;
    /// action[b] is the matrix of v -> b_b |> v (column j holds b |> v_j).
    std::vector<Matrix> action;
    /// coaction[i][j][k]: coefficient of b_j (x) v_k in rho(v_i).
    Tensor3 coaction;

    const CycloField& field() const { return base->field(); }
    Vector basis_vector(std::size_t i) const { return unit_vector(field(), dim, i); }
    /// b |> v for arbitrary b in B.
    Vector act(const Vector& b, const Vector& v) const;
    /// rho(v) as a dim B x dim V matrix.
    Matrix coact(const Vector& v) const;
};

/// b |> v = eps(b) v, rho(v) = 1 (x) v.
YDModule trivial_yd(std::shared_ptr<const HopfAlgebra> base, std::size_t dim);

/// Module, comodule and the compatibility rho(b |> v) = b1 v_-1 S(b3) (x) b2 |> v0,
/// in the check order: module unit, module associativity, comodule counit,
/// comodule coassociativity, yd compatibility.
Report verify_yd(const YDModule& v);

/// c(v (x) w) = v_-1 |> w (x) v0 as a map V (x) W -> W (x) V, indices v * dim W + w and
/// w * dim V + v.
Matrix braiding(const YDModule& v, const YDModule& w);

/// V (x) W with the diagonal action and rho(v (x) w) = v_-1 w_-1 (x) v0 (x) w0.
YDModule tensor_yd(const YDModule& v, const YDModule& w);

struct BraidedHopf {
    YDModule yd;
    Tensor3 mult;
    Vector unit;
    Tensor3 comult;
    Vector counit;
    Matrix antipode;

    std::size_t dim() const { return yd.dim; }
    const CycloField& field() const { return yd.field(); }
    const HopfAlgebra& base() const { return *yd.base; }
    Vector basis(std::size_t i) const { return unit_vector(field(), dim(), i); }
    Vector multiply(const Vector& a, const Vector& b) const { return tensor_product_apply(mult, a, b); }
    Matrix comultiply(const Vector& v) const;
    AssocAlgebra algebra() const { return {&field(), dim(), mult, unit}; }
};

/// An ordinary Hopf algebra over the base field with the trivial YD structure.
BraidedHopf trivial_braided(const HopfAlgebra& r, std::shared_ptr<const HopfAlgebra> base);
/// The one-dimensional unit object.
BraidedHopf unit_braided(std::shared_ptr<const HopfAlgebra> base);
/// The exterior algebra on one odd generator over H_4: g |> v = -v, x |> v = 0,
/// rho(v) = g (x) v, v^2 = 0, v primitive. Base must be sweedler().
BraidedHopf nichols_h4(std::shared_ptr<const HopfAlgebra> h4);

/// Checks in order: associativity, unit, module algebra, comodule algebra, coassociativity,
/// counit, comult yd map, counit yd map, comult multiplicative, comult unit,
/// counit multiplicative, antipode left, antipode right, antipode yd map,
/// antipode braided anti-multiplicative.
Report verify_braided_hopf(const BraidedHopf& r);

/// R x B on the R-major basis r_i (x) b_j, index i * dim B + j. Throws VerificationFailure
/// if the result is not a Hopf algebra.
HopfAlgebra bosonize(const BraidedHopf& r);

/// R* as a braided Hopf algebra over base_dual, which must be dual(R.base()).
BraidedHopf dual_braided(const BraidedHopf& r, std::shared_ptr<const HopfAlgebra> base_dual);

/// dual(R x B) against R* x B* under (r_i (x) b_j)* <-> r_i* (x) b_j*.
bool check_dual_biproduct(const BraidedHopf& r);

struct BraidedIntegralData {
    /// Right integral of R: Lambda r = eps(r) Lambda.
    Vector integral;
    /// Right integral of R*: lambda(r1) r2 = lambda(r) 1, normalized by lambda(Lambda) = 1.
    Vector dual_integral;
    /// b |> Lambda = chi(b) Lambda.
    Vector chi;
    bool semisimple = false;
    /// For semisimple R: chi = eps, eps(Lambda) != 0, rho(Lambda) = 1 (x) Lambda,
    /// S(Lambda) = Lambda, r_-1 lambda(r0) = lambda(r) 1, lambda(b |> r) = chi(b) lambda(r).
    Report checks;
};

BraidedIntegralData braided_integrals(const BraidedHopf& r);

}  // namespace hopf
