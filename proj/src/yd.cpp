#include "hopf/yd.hpp"

namespace hopf {

namespace {

std::string pair_name(const char* a, std::size_t i, const char* b, std::size_t j) {
    return "(" + std::string(a) + std::to_string(i) + "," + b + std::to_string(j) + ")";
}

bool same_base(const YDModule& v, const YDModule& w) {
    if (v.base == w.base) return true;
    const HopfAlgebra& a = *v.base;
    const HopfAlgebra& b = *w.base;
    return same_field(&a.field(), &b.field()) && a.dim() == b.dim() && a.algebra.mult == b.algebra.mult &&
           a.comult == b.comult && a.unit() == b.unit() && a.counit == b.counit;
}

// Delta^2(b_i) as (a, m, c, coefficient) over basis triples
std::vector<std::tuple<std::size_t, std::size_t, std::size_t, FieldElement>> double_comult(const HopfAlgebra& h,
                                                                                         std::size_t i) {
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, FieldElement>> out;
    for (std::size_t a = 0; a < h.dim(); ++a)
        for (const auto& [m, x] : h.comult.slot(i, a))
            for (std::size_t b = 0; b < h.dim(); ++b)
                for (const auto& [c, y] : h.comult.slot(m, b)) out.emplace_back(a, b, c, x * y);
    return out;
}

}  // namespace

Vector YDModule::act(const Vector& b, const Vector& v) const {
    Vector out = zero_vector(field(), dim);
    for (std::size_t i = 0; i < b.size(); ++i)
        if (!b[i].is_zero()) axpy(out, b[i], action[i].apply(v));
    return out;
}

Matrix YDModule::coact(const Vector& v) const {
    Matrix out(field(), base->dim(), dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < base->dim(); ++j)
            for (const auto& [k, x] : coaction.slot(i, j)) out.at(j, k) += v[i] * x;
    }
    return out;
}

YDModule trivial_yd(std::shared_ptr<const HopfAlgebra> base, std::size_t dim) {
    const CycloField& f = base->field();
    YDModule v{base, dim, {}, Tensor3(f, dim, base->dim(), dim)};
    for (std::size_t b = 0; b < base->dim(); ++b) v.action.push_back(scale(Matrix::identity(f, dim), base->counit[b]));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < base->dim(); ++j)
            if (!base->unit()[j].is_zero()) v.coaction.set(i, j, i, base->unit()[j]);
    return v;
}

Report verify_yd(const YDModule& v) {
    const HopfAlgebra& B = *v.base;
    const CycloField& f = v.field();
    const std::size_t dB = B.dim(), dV = v.dim;
    Report rep;

    Check unit{"module unit", {}};
    Matrix one(f, dV, dV);
    for (std::size_t b = 0; b < dB; ++b)
        if (!B.unit()[b].is_zero()) one = one + scale(v.action[b], B.unit()[b]);
    if (!one.is_identity()) unit.violations.push_back("1 |> v != v");
    rep.checks.push_back(unit);

    Check assoc{"module associativity", {}};
    for (std::size_t a = 0; a < dB; ++a)
        for (std::size_t b = 0; b < dB; ++b) {
            Vector ab = B.multiply(B.basis(a), B.basis(b));
            Matrix lhs(f, dV, dV);
            for (std::size_t c = 0; c < dB; ++c)
                if (!ab[c].is_zero()) lhs = lhs + scale(v.action[c], ab[c]);
            if (!(lhs == v.action[a] * v.action[b])) assoc.violations.push_back(pair_name("b", a, "b", b));
        }
    rep.checks.push_back(assoc);

    Check counit{"comodule counit", {}};
    Check coassoc{"comodule coassociativity", {}};
    for (std::size_t i = 0; i < dV; ++i) {
        Matrix r = v.coact(v.basis_vector(i));
        Vector e = zero_vector(f, dV);
        for (std::size_t j = 0; j < dB; ++j)
            for (std::size_t k = 0; k < dV; ++k) e[k] += B.counit[j] * r.at(j, k);
        if (e != unit_vector(f, dV, i)) counit.violations.push_back("v" + std::to_string(i));

        // (Delta (x) id) rho = (id (x) rho) rho, flattened as (a * dB + b) * dV + k
        Vector lhs = zero_vector(f, dB * dB * dV), rhs = zero_vector(f, dB * dB * dV);
        for (std::size_t j = 0; j < dB; ++j)
            for (std::size_t k = 0; k < dV; ++k) {
                const FieldElement& x = r.at(j, k);
                if (x.is_zero()) continue;
                for (std::size_t a = 0; a < dB; ++a)
                    for (const auto& [b, y] : B.comult.slot(j, a)) lhs[(a * dB + b) * dV + k] += x * y;
                for (std::size_t b = 0; b < dB; ++b)
                    for (const auto& [l, y] : v.coaction.slot(k, b)) rhs[(j * dB + b) * dV + l] += x * y;
            }
        if (lhs != rhs) coassoc.violations.push_back("v" + std::to_string(i));
    }
    rep.checks.push_back(counit);
    rep.checks.push_back(coassoc);

    Check yd{"yd compatibility", {}};
    const Matrix& S = B.S();
    for (std::size_t b = 0; b < dB; ++b) {
        auto d2 = double_comult(B, b);
        for (std::size_t i = 0; i < dV; ++i) {
            Vector vi = v.basis_vector(i);
            Matrix lhs = v.coact(v.action[b].column(i));
            Matrix rhs(f, dB, dV);
            Matrix r = v.coact(vi);
            for (const auto& [b1, b2, b3, c] : d2)
                for (std::size_t j = 0; j < dB; ++j)
                    for (std::size_t k = 0; k < dV; ++k) {
                        if (r.at(j, k).is_zero()) continue;
                        Vector left = B.multiply(B.multiply(B.basis(b1), B.basis(j)), S.column(b3));
                        Vector right = v.action[b2].column(k);
                        FieldElement coef = c * r.at(j, k);
                        for (std::size_t p = 0; p < dB; ++p) {
                            if (left[p].is_zero()) continue;
                            for (std::size_t q = 0; q < dV; ++q)
                                if (!right[q].is_zero()) rhs.at(p, q) += coef * left[p] * right[q];
                        }
                    }
            if (!(lhs == rhs)) yd.violations.push_back(pair_name("b", b, "v", i));
        }
    }
    rep.checks.push_back(yd);
    return rep;
}

Matrix braiding(const YDModule& v, const YDModule& w) {
    if (!same_base(v, w)) throw BaseMismatch("braiding needs modules over the same base");
    const std::size_t dV = v.dim, dW = w.dim, dB = v.base->dim();
    Matrix c(v.field(), dW * dV, dV * dW);
    for (std::size_t i = 0; i < dV; ++i)
        for (std::size_t b = 0; b < dB; ++b)
            for (const auto& [k, x] : v.coaction.slot(i, b))
                for (std::size_t j = 0; j < dW; ++j) {
                    Vector bw = w.action[b].column(j);
                    for (std::size_t l = 0; l < dW; ++l)
                        if (!bw[l].is_zero()) c.at(l * dV + k, i * dW + j) += x * bw[l];
                }
    return c;
}

YDModule tensor_yd(const YDModule& v, const YDModule& w) {
    if (!same_base(v, w)) throw BaseMismatch("tensor product needs modules over the same base");
    const HopfAlgebra& B = *v.base;
    const CycloField& f = v.field();
    const std::size_t dV = v.dim, dW = w.dim, dB = B.dim();
    YDModule out{v.base, dV * dW, {}, Tensor3(f, dV * dW, dB, dV * dW)};
    for (std::size_t b = 0; b < dB; ++b) {
        Matrix m(f, dV * dW, dV * dW);
        for (std::size_t a = 0; a < dB; ++a)
            for (const auto& [c, x] : B.comult.slot(b, a)) m = m + scale(kron(v.action[a], w.action[c]), x);
        out.action.push_back(std::move(m));
    }
    for (std::size_t i = 0; i < dV; ++i)
        for (std::size_t j = 0; j < dW; ++j)
            for (std::size_t a = 0; a < dB; ++a)
                for (const auto& [k, x] : v.coaction.slot(i, a))
                    for (std::size_t c = 0; c < dB; ++c)
                        for (const auto& [l, y] : w.coaction.slot(j, c))
                            for (const auto& [b, z] : B.algebra.mult.slot(a, c))
                                out.coaction.add(i * dW + j, b, k * dW + l, x * y * z);
    return out;
}

Matrix BraidedHopf::comultiply(const Vector& v) const {
    const std::size_t d = dim();
    Matrix out(field(), d, d);
    for (std::size_t i = 0; i < d; ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& [k, x] : comult.slot(i, j)) out.at(j, k) += v[i] * x;
    }
    return out;
}

BraidedHopf trivial_braided(const HopfAlgebra& r, std::shared_ptr<const HopfAlgebra> base) {
    if (!same_field(&r.field(), &base->field())) throw FieldMismatch("braided Hopf algebra and base over different fields");
    YDModule yd = trivial_yd(base, r.dim());
    return {std::move(yd), r.algebra.mult, r.unit(), r.comult, r.counit, r.S()};
}

BraidedHopf unit_braided(std::shared_ptr<const HopfAlgebra> base) {
    const CycloField& f = base->field();
    Tensor3 m(f, 1, 1, 1), c(f, 1, 1, 1);
    m.set(0, 0, 0, f.one());
    c.set(0, 0, 0, f.one());
    return {trivial_yd(base, 1), m, {f.one()}, c, {f.one()}, Matrix::identity(f, 1)};
}

BraidedHopf nichols_h4(std::shared_ptr<const HopfAlgebra> h4) {
    if (h4->dim() != 4) throw BadDimension("nichols_h4 needs the four-dimensional Sweedler algebra");
    const CycloField& f = h4->field();
    FieldElement one = f.one(), minus = -f.one();
    // basis of H_4: 1, x, g, gx; basis of R: 1, v
    YDModule yd{h4, 2, {}, Tensor3(f, 2, 4, 2)};
    Matrix g(f, 2, 2);
    g.at(0, 0) = one;
    g.at(1, 1) = minus;
    yd.action = {Matrix::identity(f, 2), Matrix(f, 2, 2), g, Matrix(f, 2, 2)};
    yd.coaction.set(0, 0, 0, one);
    yd.coaction.set(1, 2, 1, one);

    Tensor3 m(f, 2, 2, 2), c(f, 2, 2, 2);
    m.set(0, 0, 0, one);
    m.set(0, 1, 1, one);
    m.set(1, 0, 1, one);
    c.set(0, 0, 0, one);
    c.set(1, 1, 0, one);
    c.set(1, 0, 1, one);
    Matrix S = g;
    return {std::move(yd), m, {one, f.zero()}, c, {one, f.zero()}, S};
}

namespace {

// element of X (x) Y from two vectors
Matrix outer(const CycloField& f, const Vector& x, const Vector& y) {
    Matrix m(f, x.size(), y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (!y[j].is_zero()) m.at(i, j) = x[i] * y[j];
    }
    return m;
}

void add_outer(Matrix& m, const FieldElement& c, const Vector& x, const Vector& y) {
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        FieldElement cx = c * x[i];
        for (std::size_t j = 0; j < y.size(); ++j)
            if (!y[j].is_zero()) m.at(i, j) += cx * y[j];
    }
}

Check braided_module_algebra(const BraidedHopf& r) {
    Check chk{"module algebra", {}};
    const HopfAlgebra& B = r.base();
    const std::size_t d = r.dim();
    for (std::size_t b = 0; b < B.dim(); ++b) {
        if (r.yd.action[b].apply(r.unit) != scale(r.unit, B.counit[b]))
            chk.violations.push_back("(b" + std::to_string(b) + ",1)");
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Vector lhs = r.yd.action[b].apply(r.multiply(r.basis(i), r.basis(j)));
                Vector rhs = zero_vector(r.field(), d);
                for (std::size_t a = 0; a < B.dim(); ++a)
                    for (const auto& [c, x] : B.comult.slot(b, a))
                        axpy(rhs, x, r.multiply(r.yd.action[a].column(i), r.yd.action[c].column(j)));
                if (lhs != rhs)
                    chk.violations.push_back("(b" + std::to_string(b) + ",r" + std::to_string(i) + ",r" +
                                             std::to_string(j) + ")");
            }
    }
    return chk;
}

Check braided_comodule_algebra(const BraidedHopf& r) {
    Check chk{"comodule algebra", {}};
    const HopfAlgebra& B = r.base();
    const CycloField& f = r.field();
    const std::size_t d = r.dim();
    if (!(r.yd.coact(r.unit) == outer(f, B.unit(), r.unit))) chk.violations.push_back("rho(1)");
    for (std::size_t i = 0; i < d; ++i) {
        Matrix ri = r.yd.coact(r.basis(i));
        for (std::size_t j = 0; j < d; ++j) {
            Matrix rj = r.yd.coact(r.basis(j));
            Matrix lhs = r.yd.coact(r.multiply(r.basis(i), r.basis(j)));
            Matrix rhs(f, B.dim(), d);
            for (std::size_t a = 0; a < B.dim(); ++a)
                for (std::size_t k = 0; k < d; ++k) {
                    if (ri.at(a, k).is_zero()) continue;
                    for (std::size_t c = 0; c < B.dim(); ++c)
                        for (std::size_t l = 0; l < d; ++l) {
                            if (rj.at(c, l).is_zero()) continue;
                            add_outer(rhs, ri.at(a, k) * rj.at(c, l), B.multiply(B.basis(a), B.basis(c)),
                                      r.multiply(r.basis(k), r.basis(l)));
                        }
                }
            if (!(lhs == rhs)) chk.violations.push_back(pair_name("r", i, "r", j));
        }
    }
    return chk;
}

// the R-coalgebra part: coassociativity and counit
void braided_coalgebra(const BraidedHopf& r, Report& rep) {
    const std::size_t d = r.dim();
    const CycloField& f = r.field();
    Check coassoc{"coassociativity", {}}, counit{"counit", {}};
    for (std::size_t i = 0; i < d; ++i) {
        Vector lhs = zero_vector(f, d * d * d), rhs = zero_vector(f, d * d * d);
        for (std::size_t a = 0; a < d; ++a)
            for (const auto& [b, x] : r.comult.slot(i, a)) {
                for (std::size_t p = 0; p < d; ++p)
                    for (const auto& [q, y] : r.comult.slot(a, p)) lhs[(p * d + q) * d + b] += x * y;
                for (std::size_t p = 0; p < d; ++p)
                    for (const auto& [q, y] : r.comult.slot(b, p)) rhs[(a * d + p) * d + q] += x * y;
            }
        if (lhs != rhs) coassoc.violations.push_back("r" + std::to_string(i));
        Vector el = zero_vector(f, d), er = zero_vector(f, d);
        for (std::size_t a = 0; a < d; ++a)
            for (const auto& [b, x] : r.comult.slot(i, a)) {
                el[b] += r.counit[a] * x;
                er[a] += r.counit[b] * x;
            }
        if (el != r.basis(i) || er != r.basis(i)) counit.violations.push_back("r" + std::to_string(i));
    }
    rep.checks.push_back(coassoc);
    rep.checks.push_back(counit);
}

// Delta and eps are module and comodule maps
void braided_structure_maps(const BraidedHopf& r, Report& rep) {
    const HopfAlgebra& B = r.base();
    const CycloField& f = r.field();
    const std::size_t d = r.dim(), dB = B.dim();
    Check comult{"comult yd map", {}}, counit{"counit yd map", {}};
    for (std::size_t b = 0; b < dB; ++b)
        for (std::size_t i = 0; i < d; ++i) {
            Matrix lhs = r.comultiply(r.yd.action[b].column(i));
            Matrix rhs(f, d, d);
            for (std::size_t a = 0; a < dB; ++a)
                for (const auto& [c, x] : B.comult.slot(b, a))
                    for (std::size_t p = 0; p < d; ++p)
                        for (const auto& [q, y] : r.comult.slot(i, p))
                            add_outer(rhs, x * y, r.yd.action[a].column(p), r.yd.action[c].column(q));
            if (!(lhs == rhs)) comult.violations.push_back("action " + pair_name("b", b, "r", i));
            if (dot(r.counit, r.yd.action[b].column(i)) != B.counit[b] * r.counit[i])
                counit.violations.push_back("action " + pair_name("b", b, "r", i));
        }
    for (std::size_t i = 0; i < d; ++i) {
        // (id (x) Delta) rho(r) against r(1)_-1 r(2)_-1 (x) r(1)_0 (x) r(2)_0, flattened (a * d + k) * d + l
        Matrix rho = r.yd.coact(r.basis(i));
        Vector lhs = zero_vector(f, dB * d * d), rhs = zero_vector(f, dB * d * d);
        for (std::size_t a = 0; a < dB; ++a)
            for (std::size_t m = 0; m < d; ++m) {
                if (rho.at(a, m).is_zero()) continue;
                for (std::size_t k = 0; k < d; ++k)
                    for (const auto& [l, x] : r.comult.slot(m, k)) lhs[(a * d + k) * d + l] += rho.at(a, m) * x;
            }
        for (std::size_t p = 0; p < d; ++p)
            for (const auto& [q, x] : r.comult.slot(i, p)) {
                Matrix rp = r.yd.coact(r.basis(p)), rq = r.yd.coact(r.basis(q));
                for (std::size_t a = 0; a < dB; ++a)
                    for (std::size_t k = 0; k < d; ++k) {
                        if (rp.at(a, k).is_zero()) continue;
                        for (std::size_t c = 0; c < dB; ++c)
                            for (std::size_t l = 0; l < d; ++l) {
                                if (rq.at(c, l).is_zero()) continue;
                                FieldElement coef = x * rp.at(a, k) * rq.at(c, l);
                                for (const auto& [e, y] : B.algebra.mult.slot(a, c)) rhs[(e * d + k) * d + l] += coef * y;
                            }
                    }
            }
        if (lhs != rhs) comult.violations.push_back("coaction r" + std::to_string(i));
        Vector e = zero_vector(f, dB);
        for (std::size_t a = 0; a < dB; ++a)
            for (std::size_t k = 0; k < d; ++k) e[a] += rho.at(a, k) * r.counit[k];
        if (e != scale(B.unit(), r.counit[i])) counit.violations.push_back("coaction r" + std::to_string(i));
    }
    rep.checks.push_back(comult);
    rep.checks.push_back(counit);
}

// Delta(r s) = r(1) (r(2)_-1 |> s(1)) (x) r(2)_0 s(2)
Check braided_multiplicative(const BraidedHopf& r) {
    Check chk{"comult multiplicative", {}};
    const HopfAlgebra& B = r.base();
    const CycloField& f = r.field();
    const std::size_t d = r.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Matrix lhs = r.comultiply(r.multiply(r.basis(i), r.basis(j)));
            Matrix rhs(f, d, d);
            for (std::size_t a = 0; a < d; ++a)
                for (const auto& [b, x] : r.comult.slot(i, a)) {
                    Matrix rho = r.yd.coact(r.basis(b));
                    for (std::size_t e = 0; e < d; ++e)
                        for (const auto& [g, y] : r.comult.slot(j, e))
                            for (std::size_t c = 0; c < B.dim(); ++c)
                                for (std::size_t k = 0; k < d; ++k) {
                                    if (rho.at(c, k).is_zero()) continue;
                                    Vector left = r.multiply(r.basis(a), r.yd.action[c].column(e));
                                    Vector right = r.multiply(r.basis(k), r.basis(g));
                                    add_outer(rhs, x * y * rho.at(c, k), left, right);
                                }
                }
            if (!(lhs == rhs)) chk.violations.push_back(pair_name("r", i, "r", j));
        }
    return chk;
}

}  // namespace

Report verify_braided_hopf(const BraidedHopf& r) {
    const std::size_t d = r.dim();
    const CycloField& f = r.field();
    const HopfAlgebra& B = r.base();
    Report rep = verify_algebra(r.algebra());
    rep.checks.push_back(braided_module_algebra(r));
    rep.checks.push_back(braided_comodule_algebra(r));
    braided_coalgebra(r, rep);
    braided_structure_maps(r, rep);
    rep.checks.push_back(braided_multiplicative(r));

    Check cunit{"comult unit", {}};
    if (!(r.comultiply(r.unit) == outer(f, r.unit, r.unit))) cunit.violations.push_back("Delta(1)");
    rep.checks.push_back(cunit);

    Check emult{"counit multiplicative", {}};
    if (!dot(r.counit, r.unit).is_one()) emult.violations.push_back("eps(1)");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (dot(r.counit, r.multiply(r.basis(i), r.basis(j))) != r.counit[i] * r.counit[j])
                emult.violations.push_back(pair_name("r", i, "r", j));
    rep.checks.push_back(emult);

    const Matrix& S = r.antipode;
    Check left{"antipode left", {}}, right{"antipode right", {}};
    for (std::size_t i = 0; i < d; ++i) {
        Vector l = zero_vector(f, d), rr = zero_vector(f, d);
        for (std::size_t a = 0; a < d; ++a)
            for (const auto& [b, x] : r.comult.slot(i, a)) {
                axpy(l, x, r.multiply(S.column(a), r.basis(b)));
                axpy(rr, x, r.multiply(r.basis(a), S.column(b)));
            }
        Vector target = scale(r.unit, r.counit[i]);
        if (l != target) left.violations.push_back("r" + std::to_string(i));
        if (rr != target) right.violations.push_back("r" + std::to_string(i));
    }
    rep.checks.push_back(left);
    rep.checks.push_back(right);

    Check ydmap{"antipode yd map", {}};
    for (std::size_t b = 0; b < B.dim(); ++b)
        if (!(S * r.yd.action[b] == r.yd.action[b] * S)) ydmap.violations.push_back("action b" + std::to_string(b));
    for (std::size_t i = 0; i < d; ++i) {
        Matrix lhs = r.yd.coact(S.column(i));
        Matrix rhs = r.yd.coact(r.basis(i)) * transpose(S);
        if (!(lhs == rhs)) ydmap.violations.push_back("coaction r" + std::to_string(i));
    }
    rep.checks.push_back(ydmap);

    // S(r s) = (r_-1 |> S(s)) S(r_0)
    Check anti{"antipode braided anti-multiplicative", {}};
    for (std::size_t i = 0; i < d; ++i) {
        Matrix rho = r.yd.coact(r.basis(i));
        for (std::size_t j = 0; j < d; ++j) {
            Vector lhs = S.apply(r.multiply(r.basis(i), r.basis(j)));
            Vector rhs = zero_vector(f, d);
            for (std::size_t a = 0; a < B.dim(); ++a)
                for (std::size_t k = 0; k < d; ++k)
                    if (!rho.at(a, k).is_zero())
                        axpy(rhs, rho.at(a, k), r.multiply(r.yd.action[a].apply(S.column(j)), S.column(k)));
            if (lhs != rhs) anti.violations.push_back(pair_name("r", i, "r", j));
        }
    }
    rep.checks.push_back(anti);
    return rep;
}

}  // namespace hopf
