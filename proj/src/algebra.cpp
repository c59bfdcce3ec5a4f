#include "hopf/algebra.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "hopf/factor.hpp"

namespace hopf {

bool Report::ok() const { return violation_count() == 0; }

std::size_t Report::violation_count() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.violations.size();
    return n;
}

std::string Report::to_text(std::size_t max_listed) const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << c.name << ": ";
        if (c.violations.empty()) {
            os << "ok\n";
            continue;
        }
        os << "FAIL (" << c.violations.size() << ")";
        for (std::size_t i = 0; i < c.violations.size() && i < max_listed; ++i)
            os << (i ? ", " : " ") << c.violations[i];
        if (c.violations.size() > max_listed) os << ", ...";
        os << "\n";
    }
    return os.str();
}

const Check* Report::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

AssocAlgebra embed(const AssocAlgebra& a, const CycloField& target) {
    return {&target, a.dim, embed(a.mult, target), embed(a.unit, target)};
}

bool vector_less(const Vector& a, const Vector& b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        auto c = compare(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return a.size() < b.size();
}

namespace {
std::string triple(std::size_t i, std::size_t j, std::size_t k) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}
}  // namespace

Report verify_algebra(const AssocAlgebra& a) {
    Report rep;
    Check assoc{"associativity", {}};
    const std::size_t d = a.dim;
    // (b_i b_j) b_k versus b_i (b_j b_k)
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vector ij = a.mult.fiber(i, j);
            for (std::size_t k = 0; k < d; ++k) {
                Vector lhs = zero_vector(*a.field, d);
                for (const auto& [l, c] : a.mult.slot(i, j))
                    for (const auto& [m, x] : a.mult.slot(l, k)) lhs[m] += c * x;
                Vector rhs = zero_vector(*a.field, d);
                for (const auto& [l, c] : a.mult.slot(j, k))
                    for (const auto& [m, x] : a.mult.slot(i, l)) rhs[m] += c * x;
                if (lhs != rhs) assoc.violations.push_back(triple(i, j, k));
            }
        }
    rep.checks.push_back(std::move(assoc));
    Check unit{"unit", {}};
    Matrix lu = a.left_mult(a.unit), ru = a.right_mult(a.unit);
    for (std::size_t i = 0; i < d; ++i) {
        Vector e = a.basis(i);
        if (lu.column(i) != e) unit.violations.push_back("1*b" + std::to_string(i));
        if (ru.column(i) != e) unit.violations.push_back("b" + std::to_string(i) + "*1");
    }
    rep.checks.push_back(std::move(unit));
    return rep;
}

std::vector<Vector> radical(const AssocAlgebra& a) {
    const std::size_t d = a.dim;
    Vector tr = zero_vector(*a.field, d);
    for (std::size_t l = 0; l < d; ++l)
        for (std::size_t k = 0; k < d; ++k)
            for (const auto& [m, x] : a.mult.slot(l, k))
                if (m == k) tr[l] += x;
    Matrix form(*a.field, d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& [l, x] : a.mult.slot(i, j))
                if (!tr[l].is_zero()) form.at(j, i) += x * tr[l];
    return kernel(form);
}

std::vector<Vector> center(const AssocAlgebra& a) {
    const std::size_t d = a.dim;
    Matrix sys(*a.field, d * d, d);
    for (std::size_t b = 0; b < d; ++b)
        for (std::size_t i = 0; i < d; ++i) {
            for (const auto& [k, x] : a.mult.slot(i, b)) sys.at(b * d + k, i) += x;
            for (const auto& [k, x] : a.mult.slot(b, i)) sys.at(b * d + k, i) -= x;
        }
    return kernel(sys);
}

bool is_semisimple_trace(const AssocAlgebra& a) { return radical(a).empty(); }

SubspaceBuilder two_sided_ideal(const AssocAlgebra& a, const std::vector<Vector>& generators) {
    SubspaceBuilder ideal(*a.field, a.dim);
    std::deque<Vector> work;
    for (const auto& g : generators)
        if (ideal.add(g)) work.push_back(g);
    while (!work.empty()) {
        Vector v = std::move(work.front());
        work.pop_front();
        for (std::size_t b = 0; b < a.dim; ++b) {
            Vector e = a.basis(b);
            for (Vector w : {a.multiply(e, v), a.multiply(v, e)})
                if (ideal.add(w)) work.push_back(std::move(w));
            if (ideal.dim() == a.dim) return ideal;
        }
    }
    return ideal;
}

UniPoly minimal_polynomial(const Matrix& m) {
    const CycloField& f = m.field();
    std::size_t n = m.rows();
    // flatten powers of m until the first linear dependence
    SubspaceBuilder span(f, n * n);
    std::vector<Vector> powers;
    Matrix p = Matrix::identity(f, n);
    for (std::size_t k = 0;; ++k) {
        Vector flat = p.entries();
        if (!span.contains(flat)) {
            span.add(flat);
            powers.push_back(flat);
            p = p * m;
            continue;
        }
        // solve flat = sum c_i powers[i]
        Matrix sys = Matrix::from_columns(f, powers, n * n);
        auto sol = solve(sys, flat);
        std::vector<FieldElement> coeffs;
        for (const auto& c : sol->particular) coeffs.push_back(-c);
        coeffs.push_back(f.one());
        return UniPoly(f, coeffs);
    }
}

Matrix evaluate(const UniPoly& p, const Matrix& m) {
    Matrix r(m.field(), m.rows(), m.cols());
    Matrix id = Matrix::identity(m.field(), m.rows());
    for (std::size_t i = p.coeffs().size(); i-- > 0;) r = r * m + scale(id, p.coeffs()[i]);
    return r;
}

CharacterResult characters(const AssocAlgebra& a) {
    const CycloField& f = *a.field;
    const std::size_t d = a.dim;
    CharacterResult result;

    std::vector<Vector> gens = radical(a);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            Vector c = sub(a.mult.fiber(i, j), a.mult.fiber(j, i));
            if (!is_zero(c)) gens.push_back(std::move(c));
        }
    SubspaceBuilder ideal = two_sided_ideal(a, gens);
    if (ideal.dim() == d) return result;

    // quotient C = A / ideal, coordinates on the non-pivot positions
    std::vector<bool> pivot(d, false);
    for (auto p : ideal.pivots()) pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < d; ++i)
        if (!pivot[i]) free.push_back(i);
    const std::size_t c = free.size();
    auto project = [&](const Vector& v) {
        Vector r = ideal.reduce(v);
        Vector out(c);
        for (std::size_t t = 0; t < c; ++t) out[t] = r[free[t]];
        return out;
    };
    // multiplication operators on C by the images of the free basis elements
    std::vector<Matrix> ops;
    for (std::size_t s = 0; s < c; ++s) {
        Matrix op(f, c, c);
        for (std::size_t t = 0; t < c; ++t) op.set_column(t, project(a.mult.fiber(free[s], free[t])));
        ops.push_back(std::move(op));
    }

    // split C into ideals by eigen-decomposition of the operators
    std::vector<std::vector<Vector>> pending{{}};
    for (std::size_t t = 0; t < c; ++t) pending[0].push_back(unit_vector(f, c, t));
    std::vector<Vector> lines;
    while (!pending.empty()) {
        std::vector<Vector> J = std::move(pending.back());
        pending.pop_back();
        if (J.size() == 1) {
            lines.push_back(J[0]);
            continue;
        }
        Matrix basis = Matrix::from_columns(f, J, c);
        bool handled = false;
        for (std::size_t s = 0; s < c && !handled; ++s) {
            // restriction of ops[s] to J in J-coordinates
            Matrix img = ops[s] * basis;
            Matrix restricted(f, J.size(), J.size());
            for (std::size_t col = 0; col < J.size(); ++col) {
                auto sol = solve(basis, img.column(col));
                restricted.set_column(col, sol->particular);
            }
            UniPoly mp = minimal_polynomial(restricted);
            auto factors = factor_unipoly(mp);
            if (factors.size() == 1 && factors[0].first.degree() == 1) continue;
            handled = true;
            if (factors.size() == 1) {
                result.unsplit.push_back(factors[0].first);
                break;
            }
            for (const auto& [q, mult] : factors) {
                std::vector<Vector> piece;
                for (const auto& kv : kernel(evaluate(q, restricted))) piece.push_back(basis.apply(kv));
                pending.push_back(std::move(piece));
            }
        }
        if (!handled) lines.push_back(J[0]);
    }

    for (const auto& w : lines) {
        // eigenvalue of each operator on w
        std::size_t nz = 0;
        while (w[nz].is_zero()) ++nz;
        Vector chi_c(c);
        for (std::size_t s = 0; s < c; ++s) chi_c[s] = ops[s].apply(w)[nz] / w[nz];
        Vector chi(d);
        for (std::size_t i = 0; i < d; ++i) chi[i] = dot(project(a.basis(i)), chi_c);
        result.characters.push_back(std::move(chi));
    }
    std::sort(result.characters.begin(), result.characters.end(), vector_less);
    return result;
}

}  // namespace hopf
