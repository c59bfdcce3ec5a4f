#include <doctest.h>

#include "support.hpp"

using namespace hopf;
using testing::q;

namespace {

const FieldElement minus_one = make_field(1).from_rational(Rational(-1));

}  // namespace

TEST_CASE("group algebras") {
    HopfAlgebra one = group_algebra(1);
    CHECK(one.dim() == 1);
    CHECK(verify_hopf(one).ok());
    HopfAlgebra z5 = group_algebra(5);
    CHECK(group_likes(z5).size() == 5);
    CHECK(is_semisimple_LR(z5));
    CHECK(z5.field().order() == 5);
    CHECK(group_algebra(4, make_field(1)).field().order() == 1);
}

TEST_CASE("Taft relations") {
    for (unsigned qq : {2u, 3u, 5u}) {
        const CycloField& f = make_field(qq == 2 ? 1 : qq);
        FieldElement tau = qq == 2 ? q(f, -1) : f.zeta();
        HopfAlgebra t = taft(qq, tau);
        CHECK(t.dim() == qq * qq);
        CHECK(verify_hopf(t).ok());
        Vector x = t.basis(1), g = t.basis(qq);
        CHECK(t.multiply(g, x) == scale(t.multiply(x, g), tau));
        Vector xp = t.unit(), gp = t.unit();
        for (unsigned i = 0; i < qq; ++i) {
            xp = t.multiply(xp, x);
            gp = t.multiply(gp, g);
        }
        CHECK(is_zero(xp));
        CHECK(gp == t.unit());
        // Delta(x) = x (x) g + 1 (x) x
        CHECK(t.comultiply(x) == testing::outer(f, x, g) + testing::outer(f, t.unit(), x));
    }
    CHECK_THROWS_AS(taft(3, q(make_field(3), 1)), NotPrimitiveRoot);
    CHECK_THROWS_AS(taft(1, minus_one), BadParams);
}

TEST_CASE("sweedler") {
    HopfAlgebra h = sweedler();
    CHECK(h.dim() == 4);
    CHECK(verify_hopf(h).ok());
    CHECK(h.algebra.mult == taft(2, minus_one).algebra.mult);
}

TEST_CASE("A(tau, mu) relations") {
    for (unsigned p : {3u, 5u})
        for (int mu : {0, 1}) {
            HopfAlgebra a = a_tau_mu(p, 2, minus_one, mu);
            CHECK(a.dim() == 4 * p);
            CHECK(verify_hopf(a).ok());
            const CycloField& f = a.field();
            Vector y = a.basis(1), g = a.basis(2);
            // a y = tau y a
            CHECK(a.multiply(g, y) == scale(a.multiply(y, g), q(f, -1)));
            // y^2 = mu (1 - a^2)
            Vector a2 = a.multiply(g, g);
            CHECK(a.multiply(y, y) == scale(sub(a.unit(), a2), q(f, mu)));
            // Delta(y) = y (x) 1 + a (x) y
            CHECK(a.comultiply(y) == testing::outer(f, y, a.unit()) + testing::outer(f, g, y));
            Vector pw = a.unit();
            for (unsigned i = 0; i < 2 * p; ++i) pw = a.multiply(pw, g);
            CHECK(pw == a.unit());
        }
    CHECK(a_tau_mu(2, 3, make_field(3).zeta(), 0).dim() == 18);
    CHECK_THROWS_AS(a_tau_mu(3, 3, make_field(3).zeta(), 0), BadParams);
    CHECK_THROWS_AS(a_tau_mu(4, 2, minus_one, 0), BadParams);
    CHECK_THROWS_AS(a_tau_mu(3, 2, minus_one, 2), BadParams);
    CHECK_THROWS_AS(a_tau_mu(3, 2, q(make_field(1), 1), 0), NotPrimitiveRoot);
}

TEST_CASE("taft tensor group") {
    HopfAlgebra t = taft_tensor_group(2, minus_one, 3);
    CHECK(t.dim() == 12);
    CHECK(verify_hopf(t).ok());
    CHECK(classify_4p(t) == "T_q(x)k[Z_p]");
}

TEST_CASE("reference families at fixed p") {
    for (unsigned p : {3u, 5u}) {
        std::vector<HopfAlgebra> refs{a_tau_mu(p, 2, minus_one, 0), dual(a_tau_mu(p, 2, minus_one, 0)),
                                      a_tau_mu(p, 2, minus_one, 1), dual(a_tau_mu(p, 2, minus_one, 1)),
                                      taft_tensor_group(2, minus_one, p)};
        for (std::size_t i = 0; i < refs.size(); ++i) {
            CHECK(trace_s2(refs[i]).is_zero());
            if (i != 3) CHECK(group_likes(refs[i]).size() == 2 * p);
        }
    }
}

TEST_CASE("is_prime") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(11));
    CHECK_FALSE(is_prime(15));
}
