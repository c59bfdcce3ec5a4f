#include "hopf/constructors.hpp"

#include <numeric>

namespace hopf {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// product in H (x) H of two elements stored as d x d coefficient matrices
Matrix tensor_mult(const Tensor3& m, const Matrix& X, const Matrix& Y) {
    const std::size_t d = X.rows();
    Matrix out(X.field(), d, d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            if (X.at(a, b).is_zero()) continue;
            for (std::size_t c = 0; c < d; ++c)
                for (std::size_t e = 0; e < d; ++e) {
                    if (Y.at(c, e).is_zero()) continue;
                    const auto& ac = m.slot(a, c);
                    const auto& be = m.slot(b, e);
                    if (ac.empty() || be.empty()) continue;
                    FieldElement xy = X.at(a, b) * Y.at(c, e);
                    for (const auto& [p, u] : ac)
                        for (const auto& [q, v] : be) out.at(p, q) += xy * u * v;
                }
        }
    return out;
}

void set_comult(Tensor3& t, std::size_t i, const Matrix& m) {
    for (std::size_t j = 0; j < m.rows(); ++j)
        for (std::size_t k = 0; k < m.cols(); ++k)
            if (!m.at(j, k).is_zero()) t.set(i, j, k, m.at(j, k));
}

Matrix simple_tensor(const CycloField& f, std::size_t d, std::size_t j, std::size_t k) {
    Matrix m(f, d, d);
    m.at(j, k) = f.one();
    return m;
}

// Two-generator pointed algebra on the basis u^i w^j (index i*q + j, 0 <= i < n, 0 <= j < q):
// (u^i w^j)(u^k w^l) = tau^(-jk) u^(i+k) w^(j+l), with w^q = mu (1 - u^q).
// Delta(u) = u (x) u and Delta(w) = w (x) u_right + u_left (x) w given by index pairs.
HopfAlgebra pointed_family(const CycloField& f, unsigned n, unsigned q, const FieldElement& tau, int mu,
                           bool taft_coproduct) {
    const std::size_t d = static_cast<std::size_t>(n) * q;
    auto index = [&](unsigned i, unsigned j) { return static_cast<std::size_t>(i % n) * q + j; };
    Tensor3 mult(f, d, d, d);
    FieldElement tau_inv = tau.inverse();
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < q; ++j)
            for (unsigned k = 0; k < n; ++k)
                for (unsigned l = 0; l < q; ++l) {
                    FieldElement c = embed(tau_inv.pow(static_cast<long long>(j) * k), f);
                    std::size_t src = index(i, j), rhs = index(k, l);
                    if (j + l < q) {
                        mult.add(src, rhs, index(i + k, j + l), c);
                    } else if (mu != 0) {
                        FieldElement cm = c * f.from_rational(Rational(mu));
                        mult.add(src, rhs, index(i + k, j + l - q), cm);
                        mult.add(src, rhs, index(i + k + q, j + l - q), -cm);
                    }
                }
    Vector unit = unit_vector(f, d, 0);
    Vector counit = zero_vector(f, d);
    for (unsigned i = 0; i < n; ++i) counit[index(i, 0)] = f.one();

    // Delta(u) = u (x) u; Delta(w) = w (x) u + 1 (x) w (Taft) or w (x) 1 + u (x) w
    std::size_t u = index(1, 0), w = index(0, 1), one = 0;
    Matrix du = simple_tensor(f, d, u, u);
    Matrix dw = taft_coproduct ? simple_tensor(f, d, w, u) + simple_tensor(f, d, one, w)
                               : simple_tensor(f, d, w, one) + simple_tensor(f, d, u, w);
    Tensor3 comult(f, d, d, d);
    Matrix cur = simple_tensor(f, d, one, one);
    for (unsigned i = 0; i < n; ++i) {
        Matrix c = cur;
        set_comult(comult, index(i, 0), c);
        for (unsigned j = 1; j < q; ++j) {
            c = tensor_mult(mult, c, dw);
            set_comult(comult, index(i, j), c);
        }
        cur = tensor_mult(mult, cur, du);
    }
    HopfAlgebra h{{&f, d, std::move(mult), unit}, std::move(comult), counit, std::nullopt};
    h.antipode = solve_antipode(h);
    return h;
}

}  // namespace

HopfAlgebra group_algebra(unsigned n) { return group_algebra(n, make_field(n == 0 ? 1 : n)); }

HopfAlgebra group_algebra(unsigned n, const CycloField& f) {
    if (n == 0) throw BadParams("group order must be positive");
    Tensor3 mult(f, n, n, n), comult(f, n, n, n);
    Matrix S(f, n, n);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) mult.set(i, j, (i + j) % n, f.one());
        comult.set(i, i, i, f.one());
        S.at((n - i) % n, i) = f.one();
    }
    Vector counit(n, f.one());
    return HopfAlgebra{{&f, n, std::move(mult), unit_vector(f, n, 0)}, std::move(comult), counit, S};
}

HopfAlgebra taft(unsigned q, const FieldElement& tau) {
    if (q < 2) throw BadParams("Taft algebras need q >= 2");
    if (!tau.field()) throw NotPrimitiveRoot("tau has no field");
    require_primitive_root(tau, q);
    return pointed_family(*tau.field(), q, q, tau, 0, true);
}

HopfAlgebra sweedler() { return taft(2, make_field(1).from_rational(Rational(-1))); }

HopfAlgebra a_tau_mu(unsigned p, unsigned q, const FieldElement& tau, int mu) {
    if (!is_prime(p) || !is_prime(q) || p == q) throw BadParams("p and q must be distinct primes");
    if (mu != 0 && mu != 1) throw BadParams("mu must be 0 or 1");
    if (!tau.field()) throw NotPrimitiveRoot("tau has no field");
    require_primitive_root(tau, q);
    const CycloField& f = make_field(std::lcm(tau.field()->order(), p * q * q));
    return pointed_family(f, p * q, q, embed(tau, f), mu, false);
}

HopfAlgebra taft_tensor_group(unsigned q, const FieldElement& tau, unsigned p) {
    if (!tau.field()) throw NotPrimitiveRoot("tau has no field");
    const CycloField& f = make_field(std::lcm(tau.field()->order(), p * q * q));
    HopfAlgebra t = taft(q, embed(tau, f));
    return tensor_hopf(t, group_algebra(p, f));
}

}  // namespace hopf
