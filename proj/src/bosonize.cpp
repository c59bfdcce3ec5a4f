#include "hopf/yd.hpp"

namespace hopf {

namespace {

Vector kron(const Vector& x, const Vector& y) {
    Vector out;
    out.reserve(x.size() * y.size());
    for (const auto& a : x)
        for (const auto& b : y) out.push_back(a * b);
    return out;
}

}  // namespace

HopfAlgebra bosonize(const BraidedHopf& r) {
    const HopfAlgebra& B = r.base();
    const CycloField& f = r.field();
    const std::size_t dR = r.dim(), dB = B.dim(), d = dR * dB;
    auto at = [dB](std::size_t i, std::size_t b) { return i * dB + b; };

    // (r a)(s b) = r (a1 |> s) a2 b
    Tensor3 mult(f, d, d, d);
    for (std::size_t i = 0; i < dR; ++i)
        for (std::size_t a = 0; a < dB; ++a)
            for (std::size_t k = 0; k < dR; ++k)
                for (std::size_t b = 0; b < dB; ++b)
                    for (std::size_t x = 0; x < dB; ++x)
                        for (const auto& [y, c] : B.comult.slot(a, x)) {
                            Vector t = r.multiply(r.basis(i), r.yd.action[x].column(k));
                            const auto& u = B.algebra.mult.slot(y, b);
                            for (std::size_t m = 0; m < dR; ++m) {
                                if (t[m].is_zero()) continue;
                                for (const auto& [n, z] : u) mult.add(at(i, a), at(k, b), at(m, n), c * t[m] * z);
                            }
                        }

    // Delta(r b) = r(1) (r(2))_-1 b1 (x) (r(2))_0 b2
    Tensor3 comult(f, d, d, d);
    for (std::size_t i = 0; i < dR; ++i)
        for (std::size_t b = 0; b < dB; ++b)
            for (std::size_t p = 0; p < dR; ++p)
                for (const auto& [q, c] : r.comult.slot(i, p))
                    for (std::size_t a = 0; a < dB; ++a)
                        for (const auto& [m, c2] : r.yd.coaction.slot(q, a))
                            for (std::size_t x = 0; x < dB; ++x)
                                for (const auto& [y, c3] : B.comult.slot(b, x))
                                    for (const auto& [t, z] : B.algebra.mult.slot(a, x))
                                        comult.add(at(i, b), at(p, t), at(m, y), c * c2 * c3 * z);

    Vector counit = kron(r.counit, B.counit);
    Vector unit = kron(r.unit, B.unit());
    HopfAlgebra h{{&f, d, std::move(mult), unit}, std::move(comult), counit, std::nullopt};

    // S(r b) = (1 S_B(r_-1 b)) (S_R(r_0) 1)
    Matrix S(f, d, d);
    for (std::size_t i = 0; i < dR; ++i)
        for (std::size_t b = 0; b < dB; ++b) {
            Vector col = zero_vector(f, d);
            for (std::size_t a = 0; a < dB; ++a)
                for (const auto& [k, c] : r.yd.coaction.slot(i, a)) {
                    Vector y = B.S().apply(B.multiply(B.basis(a), B.basis(b)));
                    Vector left = kron(r.unit, y);
                    Vector right = kron(r.antipode.column(k), B.unit());
                    axpy(col, c, h.multiply(left, right));
                }
            S.set_column(at(i, b), col);
        }
    h.antipode = S;

    Report rep = verify_hopf(h);
    if (!rep.ok()) throw VerificationFailure("bosonization is not a Hopf algebra:\n" + rep.to_text());
    return h;
}

BraidedHopf dual_braided(const BraidedHopf& r, std::shared_ptr<const HopfAlgebra> base_dual) {
    const HopfAlgebra& B = r.base();
    const std::size_t d = r.dim(), dB = B.dim();
    HopfAlgebra expected = dual(B);
    if (base_dual->dim() != dB || !(base_dual->algebra.mult == expected.algebra.mult) ||
        !(base_dual->comult == expected.comult))
        throw BaseMismatch("dual braided Hopf algebra needs the dual of the base");
    const CycloField& f = r.field();

    // (beta |> s*)(t) = beta(t_-1) s*(t_0); rho(t*) = sum_j b_j* (x) (s -> t*(b_j |> s))
    YDModule yd{base_dual, d, {}, Tensor3(f, d, dB, d)};
    for (std::size_t j = 0; j < dB; ++j) {
        Matrix m(f, d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (const auto& [k, x] : r.yd.coaction.slot(i, j)) m.at(i, k) = x;
        yd.action.push_back(std::move(m));
    }
    for (std::size_t j = 0; j < dB; ++j)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t k = 0; k < d; ++k)
                if (!r.yd.action[j].at(i, k).is_zero()) yd.coaction.set(i, j, k, r.yd.action[j].at(i, k));

    Tensor3 mult(f, d, d, d), comult(f, d, d, d);
    for (const auto& [k, i, j, x] : r.comult.entries()) mult.set(i, j, k, x);
    for (const auto& [i, j, k, x] : r.mult.entries()) comult.set(k, i, j, x);
    return {std::move(yd), std::move(mult), r.counit, std::move(comult), r.unit, transpose(r.antipode)};
}

bool check_dual_biproduct(const BraidedHopf& r) {
    auto base_dual = std::make_shared<const HopfAlgebra>(dual(r.base()));
    BraidedHopf rd = dual_braided(r, base_dual);
    Report rep = verify_braided_hopf(rd);
    if (!rep.ok()) throw VerificationFailure("dual braided Hopf algebra fails its axioms:\n" + rep.to_text());
    HopfAlgebra lhs = dual(bosonize(r));
    HopfAlgebra rhs = bosonize(rd);
    return lhs.algebra.mult == rhs.algebra.mult && lhs.unit() == rhs.unit() && lhs.comult == rhs.comult &&
           lhs.counit == rhs.counit && lhs.S() == rhs.S();
}

BraidedIntegralData braided_integrals(const BraidedHopf& r) {
    const HopfAlgebra& B = r.base();
    const CycloField& f = r.field();
    const std::size_t d = r.dim(), dB = B.dim();
    AssocAlgebra alg = r.algebra();

    auto right = joint_kernel(f, d, d, [&](std::size_t s) {
        Matrix m = alg.right_mult(r.basis(s));
        for (std::size_t i = 0; i < d; ++i) m.at(i, i) -= r.counit[s];
        return m;
    });
    if (right.size() != 1)
        throw DegenerateIntegral("right integral space has dimension " + std::to_string(right.size()));
    auto dual_right = joint_kernel(f, d, d, [&](std::size_t i) {
        Matrix m(f, d, d);
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& [k, x] : r.comult.slot(i, j)) m.at(k, j) += x;
        for (std::size_t k = 0; k < d; ++k) m.at(k, i) -= r.unit[k];
        return m;
    });
    if (dual_right.size() != 1)
        throw DegenerateIntegral("right integral space of the dual has dimension " + std::to_string(dual_right.size()));

    BraidedIntegralData out;
    out.integral = right[0];
    out.dual_integral = dual_right[0];
    FieldElement pairing = dot(out.dual_integral, out.integral);
    if (!pairing.is_zero()) out.dual_integral = scale(out.dual_integral, pairing.inverse());

    std::size_t nz = 0;
    while (out.integral[nz].is_zero()) ++nz;
    out.chi = zero_vector(f, dB);
    for (std::size_t b = 0; b < dB; ++b) out.chi[b] = r.yd.action[b].apply(out.integral)[nz] / out.integral[nz];

    Check chi2{"b |> Lambda = chi(b) Lambda", {}}, chi1{"lambda(b |> r) = chi(b) lambda(r)", {}};
    for (std::size_t b = 0; b < dB; ++b) {
        if (r.yd.action[b].apply(out.integral) != scale(out.integral, out.chi[b]))
            chi2.violations.push_back("b" + std::to_string(b));
        for (std::size_t i = 0; i < d; ++i)
            if (dot(out.dual_integral, r.yd.action[b].column(i)) != out.chi[b] * out.dual_integral[i])
                chi1.violations.push_back("(b" + std::to_string(b) + ",r" + std::to_string(i) + ")");
    }
    out.checks.checks = {chi2, chi1};

    out.semisimple = is_semisimple_trace(alg);
    if (out.semisimple) {
        Check eps{"chi = eps", {}}, eps_lambda{"eps(Lambda) != 0", {}}, rho{"rho(Lambda) = 1 (x) Lambda", {}},
            anti{"S(Lambda) = Lambda", {}}, co{"r_-1 lambda(r_0) = lambda(r) 1", {}};
        if (out.chi != B.counit) eps.violations.push_back("chi");
        if (dot(r.counit, out.integral).is_zero()) eps_lambda.violations.push_back("Lambda");
        Matrix rl = r.yd.coact(out.integral);
        for (std::size_t a = 0; a < dB; ++a)
            for (std::size_t k = 0; k < d; ++k)
                if (rl.at(a, k) != B.unit()[a] * out.integral[k]) {
                    if (rho.violations.empty()) rho.violations.push_back("Lambda");
                }
        if (r.antipode.apply(out.integral) != out.integral) anti.violations.push_back("Lambda");
        for (std::size_t i = 0; i < d; ++i) {
            Matrix ri = r.yd.coact(r.basis(i));
            Vector lhs = zero_vector(f, dB);
            for (std::size_t a = 0; a < dB; ++a)
                for (std::size_t k = 0; k < d; ++k) lhs[a] += ri.at(a, k) * out.dual_integral[k];
            if (lhs != scale(B.unit(), out.dual_integral[i])) co.violations.push_back("r" + std::to_string(i));
        }
        for (auto* c : {&eps, &eps_lambda, &rho, &anti, &co}) out.checks.checks.push_back(*c);
    }
    return out;
}

}  // namespace hopf
