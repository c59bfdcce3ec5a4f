#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "hopf/yd.hpp"

using namespace hopf;
using testing::q;

namespace {

using BasePtr = std::shared_ptr<const HopfAlgebra>;

BasePtr h4_ptr() {
    static BasePtr h = std::make_shared<const HopfAlgebra>(sweedler());
    return h;
}

// One-dimensional module over H_4: g |> v = sign v, x |> v = 0, rho(v) = g (x) v or 1 (x) v.
YDModule h4_line(int sign, bool g_coaction) {
    BasePtr h = h4_ptr();
    const CycloField& Q = h->field();
    YDModule v{h, 1, {}, Tensor3(Q, 1, 4, 1)};
    for (long s : {1L, 0L, static_cast<long>(sign), 0L}) {
        Matrix m(Q, 1, 1);
        m.at(0, 0) = q(Q, s);
        v.action.push_back(m);
    }
    v.coaction.set(0, g_coaction ? 2 : 0, 0, Q.one());
    return v;
}

// Over k[Z_n]: v_i has degree g^deg[i] and g |> v_i = zeta^chr[i] v_i.
YDModule graded(BasePtr base, const std::vector<unsigned>& deg, const std::vector<unsigned>& chr) {
    const CycloField& f = base->field();
    std::size_t n = base->dim(), d = deg.size();
    YDModule v{base, d, {}, Tensor3(f, d, n, d)};
    for (std::size_t b = 0; b < n; ++b) {
        Matrix m(f, d, d);
        for (std::size_t i = 0; i < d; ++i) m.at(i, i) = f.zeta_pow(static_cast<long long>(b * chr[i]) * (f.order() / n));
        v.action.push_back(m);
    }
    for (std::size_t i = 0; i < d; ++i) v.coaction.set(i, deg[i], i, f.one());
    return v;
}

// Same module on the basis w_j = sum_i P[i][j] v_i.
YDModule change_basis(const YDModule& v, const Matrix& p) {
    Matrix pinv = *inverse(p);
    YDModule w{v.base, v.dim, {}, Tensor3(v.field(), v.dim, v.base->dim(), v.dim)};
    for (const auto& a : v.action) w.action.push_back(pinv * a * p);
    for (std::size_t j = 0; j < v.dim; ++j) {
        Matrix rho = v.coact(p.column(j)) * transpose(pinv);
        for (std::size_t t = 0; t < v.base->dim(); ++t)
            for (std::size_t l = 0; l < v.dim; ++l) w.coaction.set(j, t, l, rho.at(t, l));
    }
    return w;
}

Matrix random_invertible(const CycloField& f, std::size_t n) {
    for (;;) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = testing::random_element(f, 2);
        if (!det(m).is_zero()) return m;
    }
}

// Sum over Delta^2(b) of b1 v_-1 S(b3) (x) b2 |> v0, as a dim B x dim V matrix.
Matrix yd_rhs(const YDModule& v, std::size_t b, const Vector& x) {
    const HopfAlgebra& B = *v.base;
    const CycloField& f = B.field();
    Matrix rho = v.coact(x);
    Matrix out(f, B.dim(), v.dim);
    for (const auto& [bb, i, jk, c1] : B.comult.entries()) {
        if (bb != b) continue;
        for (const auto& [jj, j, k, c2] : B.comult.entries()) {
            if (jj != jk) continue;
            for (std::size_t t = 0; t < B.dim(); ++t) {
                Vector v0 = rho.row(t);
                if (is_zero(v0)) continue;
                Vector left = B.multiply(B.multiply(B.basis(i), B.basis(t)), B.S().column(k));
                Vector right = v.act(B.basis(j), v0);
                out = out + scale(testing::outer(f, left, right), c1 * c2);
            }
        }
    }
    return out;
}

Matrix flip(const CycloField& f, std::size_t dv, std::size_t dw) {
    Matrix m(f, dv * dw, dv * dw);
    for (std::size_t a = 0; a < dv; ++a)
        for (std::size_t b = 0; b < dw; ++b) m.at(b * dv + a, a * dw + b) = f.one();
    return m;
}

// B itself with the adjoint action b |> h = b1 h S(b2) and the regular coaction Delta.
YDModule adjoint(BasePtr base) {
    const HopfAlgebra& B = *base;
    YDModule v{base, B.dim(), {}, B.comult};
    for (std::size_t b = 0; b < B.dim(); ++b) {
        Matrix m(B.field(), B.dim(), B.dim());
        for (std::size_t j = 0; j < B.dim(); ++j) {
            Vector col = zero_vector(B.field(), B.dim());
            for (const auto& [bb, s, t, c] : B.comult.entries())
                if (bb == b) axpy(col, c, B.multiply(B.multiply(B.basis(s), B.basis(j)), B.S().column(t)));
            m.set_column(j, col);
        }
        v.action.push_back(m);
    }
    return v;
}

// Random valid module over H_4: trivial or odd lines, the adjoint module, tensor products, base changes.
YDModule random_h4_module(int depth) {
    std::uniform_int_distribution<int> pick(0, 5);
    int k = pick(testing::rng());
    YDModule v = k < 2 ? trivial_yd(h4_ptr(), 1 + k) : k < 5 ? h4_line(-1, true) : adjoint(h4_ptr());
    if (depth > 0 && v.dim < 4 && pick(testing::rng()) < 3) v = tensor_yd(v, random_h4_module(depth - 1));
    if (v.dim > 1) v = change_basis(v, random_invertible(v.field(), v.dim));
    return v;
}

YDModule random_graded(BasePtr base, std::size_t d) {
    std::uniform_int_distribution<unsigned> pick(0, static_cast<unsigned>(base->dim()) - 1);
    std::vector<unsigned> deg, chr;
    for (std::size_t i = 0; i < d; ++i) {
        deg.push_back(pick(testing::rng()));
        chr.push_back(pick(testing::rng()));
    }
    YDModule v = graded(base, deg, chr);
    return d > 1 ? change_basis(v, random_invertible(base->field(), d)) : v;
}

}  // namespace

TEST_CASE("verify_yd examples") {
    CHECK(verify_yd(trivial_yd(h4_ptr(), 3)).ok());
    CHECK(verify_yd(trivial_yd(std::make_shared<const HopfAlgebra>(group_algebra(4)), 2)).ok());
    CHECK(verify_yd(h4_line(-1, true)).ok());

    YDModule bad = h4_line(-1, false);
    Report r = verify_yd(bad);
    CHECK_FALSE(r.ok());
    REQUIRE(r.checks.size() == 5);
    CHECK(r.checks[4].name == "yd compatibility");
    // fails at x, and so at gx
    CHECK(r.checks[4].violations == std::vector<std::string>{"(b1,v0)", "(b3,v0)"});
    for (std::size_t i = 0; i < 4; ++i) CHECK(r.checks[i].violations.empty());

    // At b = x: rho(x |> v) = 0, while the other side is -2 xg (x) v.
    const CycloField& Q = bad.field();
    Vector v0 = bad.basis_vector(0);
    CHECK(bad.coact(bad.act(h4_ptr()->basis(1), v0)).is_zero());
    Vector xg = h4_ptr()->multiply(h4_ptr()->basis(1), h4_ptr()->basis(2));
    CHECK(yd_rhs(bad, 1, v0) == testing::outer(Q, scale(xg, q(Q, -2)), v0));
}

TEST_CASE("yd oracle agrees with verify_yd on random modules") {
    for (int trial = 0; trial < 20; ++trial) {
        YDModule v = random_h4_module(2);
        CHECK(verify_yd(v).ok());
        for (std::size_t b = 0; b < 4; ++b)
            for (std::size_t i = 0; i < v.dim; ++i) {
                Vector x = v.basis_vector(i);
                CHECK(v.coact(v.act(h4_ptr()->basis(b), x)) == yd_rhs(v, b, x));
            }
    }
}

TEST_CASE("braiding examples") {
    YDModule t2 = trivial_yd(h4_ptr(), 2), t3 = trivial_yd(h4_ptr(), 3);
    CHECK(braiding(t2, t3) == flip(t2.field(), 2, 3));
    YDModule s = h4_line(-1, true);
    Matrix c = braiding(s, s);
    REQUIRE(c.rows() == 1);
    CHECK(c.at(0, 0) == q(s.field(), -1));
    auto z3 = std::make_shared<const HopfAlgebra>(group_algebra(3));
    YDModule a = graded(z3, {1}, {0}), b = graded(z3, {0}, {2});
    CHECK_THROWS_AS(braiding(a, s), BaseMismatch);
    // c(v (x) w) = g |> w (x) v with g of degree 1 acting on w by zeta^2
    CHECK(braiding(a, b).at(0, 0) == z3->field().zeta_pow(2));
    CHECK(braiding(b, a).at(0, 0) == z3->field().one());
}

TEST_CASE("random braidings are invertible") {
    auto z4 = std::make_shared<const HopfAlgebra>(group_algebra(4));
    auto z3 = std::make_shared<const HopfAlgebra>(group_algebra(3));
    int count = 0;
    for (int trial = 0; trial < 25; ++trial) {
        YDModule v = random_h4_module(1), w = random_h4_module(1);
        REQUIRE(verify_yd(v).ok());
        REQUIRE(verify_yd(w).ok());
        CHECK(inverse(braiding(v, w)).has_value());
        ++count;
    }
    for (int trial = 0; trial < 25; ++trial) {
        auto base = trial % 2 ? z4 : z3;
        YDModule v = random_graded(base, 1 + trial % 3), w = random_graded(base, 1 + (trial / 3) % 3);
        REQUIRE(verify_yd(v).ok());
        REQUIRE(verify_yd(w).ok());
        CHECK(inverse(braiding(v, w)).has_value());
        ++count;
    }
    CHECK(count == 50);
}

TEST_CASE("hexagon identities and braid relation") {
    auto z3 = std::make_shared<const HopfAlgebra>(group_algebra(3));
    for (int trial = 0; trial < 12; ++trial) {
        bool over_h4 = trial % 2 == 0;
        YDModule v = over_h4 ? random_h4_module(0) : random_graded(z3, 2);
        YDModule w = over_h4 ? random_h4_module(0) : random_graded(z3, 1);
        YDModule x = over_h4 ? random_h4_module(0) : random_graded(z3, 2);
        const CycloField& f = v.field();
        Matrix iv = Matrix::identity(f, v.dim), iw = Matrix::identity(f, w.dim), ix = Matrix::identity(f, x.dim);
        CHECK(braiding(v, tensor_yd(w, x)) == kron(iw, braiding(v, x)) * kron(braiding(v, w), ix));
        CHECK(braiding(tensor_yd(v, w), x) == kron(braiding(v, x), iw) * kron(iv, braiding(w, x)));
        Matrix c = braiding(v, v);
        Matrix c12 = kron(c, iv), c23 = kron(iv, c);
        CHECK(c12 * c23 * c12 == c23 * c12 * c23);
    }
}

TEST_CASE("adjoint module") {
    YDModule ad = adjoint(h4_ptr());
    CHECK(verify_yd(ad).ok());
    // x |> g = x g S(g) + g S(x) = x - g x g = 2x
    CHECK(is_zero(ad.act(h4_ptr()->basis(1), ad.basis_vector(0))));
    CHECK(ad.act(h4_ptr()->basis(1), ad.basis_vector(2)) == scale(ad.basis_vector(1), q(ad.field(), 2)));
}

TEST_CASE("tensor products stay Yetter-Drinfeld") {
    YDModule s = h4_line(-1, true);
    YDModule ss = tensor_yd(s, s);
    CHECK(verify_yd(ss).ok());
    // g (x) g = 1: the square of the odd line has trivial coaction and trivial action
    CHECK(ss.coaction.get(0, 0, 0).is_one());
    CHECK(ss.action[2].at(0, 0).is_one());
}

TEST_CASE("verify_braided_hopf examples") {
    BraidedHopf one = unit_braided(h4_ptr());
    CHECK(verify_braided_hopf(one).ok());
    for (unsigned p : {3u, 5u}) {
        auto base = std::make_shared<const HopfAlgebra>(embed(sweedler(), make_field(p)));
        BraidedHopf r = trivial_braided(group_algebra(p), base);
        Report rep = verify_braided_hopf(r);
        CHECK_MESSAGE(rep.ok(), rep.to_text());
        CHECK(rep.checks.size() == 15);
    }
    CHECK_THROWS_AS(trivial_braided(group_algebra(3), h4_ptr()), FieldMismatch);
    BraidedHopf nh = nichols_h4(h4_ptr());
    CHECK(verify_yd(nh.yd).ok());
    CHECK(verify_braided_hopf(nh).ok());
}

TEST_CASE("perturbed braided antipode fails") {
    auto base = std::make_shared<const HopfAlgebra>(embed(sweedler(), make_field(3)));
    BraidedHopf r = trivial_braided(group_algebra(3), base);
    r.antipode.set_column(1, r.basis(1));
    Report rep = verify_braided_hopf(r);
    CHECK_FALSE(rep.ok());
    CHECK_FALSE(rep.find("antipode left")->violations.empty());
    CHECK_FALSE(rep.find("antipode right")->violations.empty());
    CHECK(rep.find("coassociativity")->violations.empty());
}

TEST_CASE("nichols algebra on the odd line") {
    BraidedHopf nh = nichols_h4(h4_ptr());
    const CycloField& Q = nh.field();
    Vector v = nh.basis(1);
    CHECK(is_zero(nh.multiply(v, v)));
    CHECK(nh.comultiply(v) == testing::outer(Q, v, nh.unit) + testing::outer(Q, nh.unit, v));
    CHECK(nh.antipode.apply(v) == scale(v, q(Q, -1)));
    YDModule odd = nh.yd;
    CHECK(braiding(odd, odd).at(3, 3) == q(Q, -1));
}
