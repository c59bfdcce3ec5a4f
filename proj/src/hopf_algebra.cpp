#include <array>
#include <map>

#include "hopf/hopf.hpp"

namespace hopf {

Matrix HopfAlgebra::comultiply(const Vector& v) const {
    const std::size_t d = dim();
    Matrix out(field(), d, d);
    for (std::size_t i = 0; i < d; ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& [k, x] : comult.slot(i, j)) out.at(j, k) += v[i] * x;
    }
    return out;
}

const Matrix& HopfAlgebra::S() const {
    if (!antipode) throw NoAntipode("antipode has not been computed");
    return *antipode;
}

HopfAlgebra embed(const HopfAlgebra& h, const CycloField& target) {
    HopfAlgebra out{embed(h.algebra, target), embed(h.comult, target), embed(h.counit, target), std::nullopt};
    if (h.antipode) out.antipode = embed(*h.antipode, target);
    return out;
}

namespace {

std::string idx(std::size_t i) { return "b" + std::to_string(i); }
std::string idx2(std::size_t i, std::size_t j) { return "(" + idx(i) + "," + idx(j) + ")"; }

using Key3 = std::array<std::size_t, 3>;

void accumulate(std::map<Key3, FieldElement>& m, const Key3& k, const FieldElement& v) {
    auto [it, inserted] = m.emplace(k, v);
    if (!inserted) {
        it->second += v;
    }
}

void drop_zeros(std::map<Key3, FieldElement>& m) {
    for (auto it = m.begin(); it != m.end();) it = it->second.is_zero() ? m.erase(it) : std::next(it);
}

// convolution f * id where f is given as a matrix (column c = f(b_c))
Matrix convolve_with_id(const HopfAlgebra& h, const Matrix& f) {
    const std::size_t d = h.dim();
    Matrix out(h.field(), d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t a = 0; a < d; ++a)
            for (const auto& [b, c] : h.comult.slot(i, a))
                for (std::size_t l = 0; l < d; ++l) {
                    const FieldElement& fl = f.at(l, a);
                    if (fl.is_zero()) continue;
                    FieldElement coef = c * fl;
                    for (const auto& [k, x] : h.algebra.mult.slot(l, b)) out.at(k, i) += coef * x;
                }
    return out;
}

Check antipode_check(const HopfAlgebra& h, bool left) {
    Check chk{left ? "antipode left" : "antipode right", {}};
    if (!h.antipode) {
        chk.violations.push_back("antipode missing");
        return chk;
    }
    const std::size_t d = h.dim();
    const Matrix& S = *h.antipode;
    for (std::size_t i = 0; i < d; ++i) {
        Vector acc = zero_vector(h.field(), d);
        for (std::size_t a = 0; a < d; ++a)
            for (const auto& [b, c] : h.comult.slot(i, a)) {
                Vector x = left ? h.multiply(S.column(a), h.basis(b)) : h.multiply(h.basis(a), S.column(b));
                axpy(acc, c, x);
            }
        if (acc != scale(h.unit(), h.counit[i])) chk.violations.push_back(idx(i));
    }
    return chk;
}

}  // namespace

Report verify_hopf(const HopfAlgebra& h) {
    const std::size_t d = h.dim();
    const CycloField& f = h.field();
    Report rep = verify_algebra(h.algebra);

    Check coassoc{"coassociativity", {}};
    for (std::size_t i = 0; i < d; ++i) {
        std::map<Key3, FieldElement> lhs, rhs;
        for (std::size_t a = 0; a < d; ++a)
            for (const auto& [b, c] : h.comult.slot(i, a)) {
                for (std::size_t j = 0; j < d; ++j)
                    for (const auto& [k, x] : h.comult.slot(a, j)) accumulate(lhs, {j, k, b}, c * x);
                for (std::size_t k = 0; k < d; ++k)
                    for (const auto& [l, x] : h.comult.slot(b, k)) accumulate(rhs, {a, k, l}, c * x);
            }
        drop_zeros(lhs);
        drop_zeros(rhs);
        if (lhs != rhs) coassoc.violations.push_back(idx(i));
    }
    rep.checks.push_back(std::move(coassoc));

    Check counit{"counit", {}};
    for (std::size_t i = 0; i < d; ++i) {
        Vector left = zero_vector(f, d), right = zero_vector(f, d);
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& [k, x] : h.comult.slot(i, j)) {
                if (!h.counit[j].is_zero()) left[k] += h.counit[j] * x;
                if (!h.counit[k].is_zero()) right[j] += h.counit[k] * x;
            }
        Vector e = h.basis(i);
        if (left != e || right != e) counit.violations.push_back(idx(i));
    }
    rep.checks.push_back(std::move(counit));

    Check mult{"comult multiplicative", {}};
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            std::vector<FieldElement> lhs(d * d), rhs(d * d);
            for (const auto& [l, c] : h.algebra.mult.slot(i, j))
                for (std::size_t p = 0; p < d; ++p)
                    for (const auto& [q, x] : h.comult.slot(l, p)) lhs[p * d + q] += c * x;
            for (std::size_t a = 0; a < d; ++a)
                for (const auto& [b, x] : h.comult.slot(i, a))
                    for (std::size_t c = 0; c < d; ++c)
                        for (const auto& [e, y] : h.comult.slot(j, c)) {
                            const auto& ac = h.algebra.mult.slot(a, c);
                            const auto& be = h.algebra.mult.slot(b, e);
                            if (ac.empty() || be.empty()) continue;
                            FieldElement xy = x * y;
                            for (const auto& [p, u] : ac)
                                for (const auto& [q, v] : be) rhs[p * d + q] += xy * u * v;
                        }
            if (lhs != rhs) mult.violations.push_back(idx2(i, j));
        }
    rep.checks.push_back(std::move(mult));

    Check cunit{"comult unit", {}};
    {
        Matrix got = h.comultiply(h.unit());
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                if (got.at(j, k) != h.unit()[j] * h.unit()[k]) cunit.violations.push_back(idx2(j, k));
    }
    rep.checks.push_back(std::move(cunit));

    Check emult{"counit multiplicative", {}};
    if (!h.counit_of(h.unit()).is_one()) emult.violations.push_back("eps(1)");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            FieldElement v = f.zero();
            for (const auto& [k, x] : h.algebra.mult.slot(i, j)) v += x * h.counit[k];
            if (v != h.counit[i] * h.counit[j]) emult.violations.push_back(idx2(i, j));
        }
    rep.checks.push_back(std::move(emult));

    rep.checks.push_back(antipode_check(h, true));
    rep.checks.push_back(antipode_check(h, false));
    return rep;
}

Matrix solve_antipode(const HopfAlgebra& bialgebra) {
    const HopfAlgebra& h = bialgebra;
    const std::size_t d = h.dim();
    const CycloField& f = h.field();
    // unit of the convolution algebra: b -> eps(b) 1
    Matrix p0(f, d, d);
    for (std::size_t c = 0; c < d; ++c)
        for (std::size_t r = 0; r < d; ++r) p0.at(r, c) = h.counit[c] * h.unit()[r];
    std::vector<Matrix> powers{p0};
    SubspaceBuilder span(f, d * d);
    span.add(p0.entries());
    std::vector<Vector> flats{p0.entries()};
    Matrix next = Matrix::identity(f, d);
    std::vector<FieldElement> coeffs;
    for (;;) {
        if (span.contains(next.entries())) {
            Matrix sys = Matrix::from_columns(f, flats, d * d);
            auto sol = solve(sys, next.entries());
            // next = sum sol_k P_k, i.e. P_K - sum sol_k P_k = 0
            for (const auto& c : sol->particular) coeffs.push_back(-c);
            break;
        }
        span.add(next.entries());
        flats.push_back(next.entries());
        powers.push_back(next);
        next = convolve_with_id(h, next);
    }
    // sum_{k<K} coeffs_k P_k + P_K = 0
    const std::size_t K = coeffs.size();
    if (coeffs[0].is_zero()) throw NoAntipode("the identity map is not convolution invertible");
    Matrix S(f, d, d);
    for (std::size_t k = 1; k <= K; ++k) {
        FieldElement ck = k == K ? f.one() : coeffs[k];
        if (!ck.is_zero()) S = S + scale(powers[k - 1], ck);
    }
    S = scale(S, -coeffs[0].inverse());
    HopfAlgebra probe = h;
    probe.antipode = S;
    if (!antipode_check(probe, true).violations.empty() || !antipode_check(probe, false).violations.empty())
        throw NoAntipode("candidate antipode fails the antipode law");
    return S;
}

HopfAlgebra dual(const HopfAlgebra& h) {
    const std::size_t d = h.dim();
    const CycloField& f = h.field();
    Tensor3 mult(f, d, d, d), comult(f, d, d, d);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t i = 0; i < d; ++i)
            for (const auto& [j, x] : h.comult.slot(k, i)) mult.set(i, j, k, x);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& [k, x] : h.algebra.mult.slot(i, j)) comult.set(k, i, j, x);
    HopfAlgebra out{{&f, d, std::move(mult), h.counit}, std::move(comult), h.unit(), std::nullopt};
    if (h.antipode) out.antipode = transpose(*h.antipode);
    return out;
}

HopfAlgebra tensor_hopf(const HopfAlgebra& h1, const HopfAlgebra& h2) {
    if (!same_field(&h1.field(), &h2.field())) throw FieldMismatch("tensor product of Hopf algebras over different fields");
    const CycloField& f = h1.field();
    const std::size_t d1 = h1.dim(), d2 = h2.dim(), d = d1 * d2;
    auto combine = [&](const Tensor3& a, const Tensor3& b) {
        Tensor3 out(f, d, d, d);
        for (std::size_t i1 = 0; i1 < d1; ++i1)
            for (std::size_t j1 = 0; j1 < d1; ++j1)
                for (const auto& [k1, x] : a.slot(i1, j1))
                    for (std::size_t i2 = 0; i2 < d2; ++i2)
                        for (std::size_t j2 = 0; j2 < d2; ++j2)
                            for (const auto& [k2, y] : b.slot(i2, j2))
                                out.set(i1 * d2 + i2, j1 * d2 + j2, k1 * d2 + k2, x * y);
        return out;
    };
    Vector unit(d), counit(d);
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j = 0; j < d2; ++j) {
            unit[i * d2 + j] = h1.unit()[i] * h2.unit()[j];
            counit[i * d2 + j] = h1.counit[i] * h2.counit[j];
        }
    HopfAlgebra out{{&f, d, combine(h1.algebra.mult, h2.algebra.mult), unit},
                    combine(h1.comult, h2.comult), counit, std::nullopt};
    if (h1.antipode && h2.antipode) out.antipode = kron(*h1.antipode, *h2.antipode);
    return out;
}

Vector hit_left(const HopfAlgebra& h, const Vector& f, const Vector& x) {
    return contract(h.comult, ContractMode::comult_right, f).apply(x);
}

Vector hit_right(const HopfAlgebra& h, const Vector& x, const Vector& f) {
    return contract(h.comult, ContractMode::comult_left, f).apply(x);
}

}  // namespace hopf
