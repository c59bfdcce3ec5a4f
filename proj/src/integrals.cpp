#include "hopf/hopf.hpp"

namespace hopf {

namespace {

std::size_t first_nonzero(const Vector& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return i;
    return v.size();
}

}  // namespace

IntegralData integrals(const HopfAlgebra& h) {
    const std::size_t d = h.dim();
    const CycloField& f = h.field();

    // left integrals: (L_b - eps(b)) Lambda = 0
    auto left = joint_kernel(f, d, d, [&](std::size_t b) {
        Matrix m = h.algebra.left_mult(h.basis(b));
        for (std::size_t i = 0; i < d; ++i) m.at(i, i) -= h.counit[b];
        return m;
    });
    if (left.size() != 1)
        throw DegenerateIntegral("left integral space has dimension " + std::to_string(left.size()));

    // right integrals of the dual: lambda(x_1) x_2 = lambda(x) 1, one block per basis element x
    auto right = joint_kernel(f, d, d, [&](std::size_t i) {
        Matrix m(f, d, d);
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& [k, x] : h.comult.slot(i, j)) m.at(k, j) += x;
        for (std::size_t k = 0; k < d; ++k) m.at(k, i) -= h.unit()[k];
        return m;
    });
    if (right.size() != 1)
        throw DegenerateIntegral("right integral space of the dual has dimension " + std::to_string(right.size()));

    IntegralData out;
    out.left_integral = left[0];
    out.right_integral_dual = right[0];
    const Vector& lam = out.right_integral_dual;

    FieldElement pairing = dot(lam, out.left_integral);
    if (!pairing.is_zero()) out.right_integral_dual = scale(lam, pairing.inverse());

    // lambda -> b = b_1 lambda(b_2) = lambda(b) a
    std::size_t nz = first_nonzero(out.right_integral_dual);
    Vector e = h.basis(nz);
    out.distinguished_a = scale(hit_left(h, out.right_integral_dual, e), out.right_integral_dual[nz].inverse());

    // Lambda b = alpha(b) Lambda
    std::size_t lnz = first_nonzero(out.left_integral);
    FieldElement inv = out.left_integral[lnz].inverse();
    out.distinguished_alpha = Vector(d);
    for (std::size_t b = 0; b < d; ++b) {
        Vector prod = h.multiply(out.left_integral, h.basis(b));
        out.distinguished_alpha[b] = prod[lnz] * inv;
    }
    return out;
}

bool check_radford_s4(const HopfAlgebra& h, const IntegralData& data) {
    const std::size_t d = h.dim();
    const Matrix& S = h.S();
    Matrix s4 = pow(S, 4);
    const Vector& a = data.distinguished_a;
    Vector a_inv = S.apply(a);
    const Vector& alpha = data.distinguished_alpha;
    // alpha^{-1} = alpha o S, as a row vector
    Vector alpha_inv = transpose(S).apply(alpha);
    for (std::size_t b = 0; b < d; ++b) {
        Vector x = hit_left(h, alpha, h.basis(b));
        x = hit_right(h, x, alpha_inv);
        x = h.multiply(h.multiply(a, x), a_inv);
        if (x != s4.column(b)) return false;
    }
    return true;
}

FieldElement trace_s2(const HopfAlgebra& h) {
    const Matrix& S = h.S();
    return trace(S * S);
}

bool is_semisimple_LR(const HopfAlgebra& h) { return !trace_s2(h).is_zero(); }

}  // namespace hopf
