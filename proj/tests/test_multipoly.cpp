#include <doctest.h>

#include "support.hpp"
#include "hopf/multipoly.hpp"

using namespace hopf;

namespace {

const std::vector<std::string> ab{"alpha", "beta"};

MultiPoly var(const std::string& name) { return MultiPoly::variable(make_field(1), ab, name); }
MultiPoly cst(long c) { return MultiPoly::constant(make_field(1), ab, make_field(1).from_rational(Rational(c))); }

}  // namespace

TEST_CASE("multipoly arithmetic") {
    MultiPoly a = var("alpha"), b = var("beta");
    CHECK(multipoly_arith(a, b, PolyOp::mul).coeff({1, 1}) == make_field(1).one());
    CHECK(multipoly_arith(a + cst(1), a, PolyOp::sub) == cst(1));
    MultiPoly s = (a + b) * (a + b);
    CHECK(s == a * a + cst(2) * a * b + b * b);
    CHECK(s.to_string() == "alpha^2 + 2*alpha*beta + beta^2");
    CHECK((a - a).is_zero());
    CHECK(cst(3).is_constant());
    CHECK(s.degree_in("alpha") == 2);
    CHECK_FALSE((a * a).involves("beta"));
}

TEST_CASE("substitution") {
    MultiPoly a = var("alpha"), b = var("beta");
    MultiPoly p = a * b + cst(2) * a - cst(1);
    CHECK(p.substitute("alpha", cst(0)) == cst(-1));
    CHECK(p.substitute("beta", a) == a * a + cst(2) * a - cst(1));
    CHECK(p.substitute("alpha", make_field(1).from_rational(Rational(1))) == b + cst(1));
}

TEST_CASE("mismatched variables are rejected") {
    MultiPoly a = var("alpha");
    MultiPoly other = MultiPoly::variable(make_field(1), {"gamma"}, "gamma");
    CHECK_THROWS_AS(a + other, VariableMismatch);
    CHECK_THROWS_AS(MultiPoly::variable(make_field(1), ab, "delta"), VariableMismatch);
}

TEST_CASE("ring axioms on random polynomials") {
    auto& g = testing::rng();
    std::uniform_int_distribution<int> e(0, 2), c(-3, 3);
    auto random_poly = [&] {
        MultiPoly p = cst(0);
        for (int t = 0; t < 3; ++t) {
            MultiPoly m = cst(c(g));
            for (int i = e(g); i > 0; --i) m = m * var("alpha");
            for (int i = e(g); i > 0; --i) m = m * var("beta");
            p += m;
        }
        return p;
    };
    for (int trial = 0; trial < 50; ++trial) {
        MultiPoly x = random_poly(), y = random_poly(), z = random_poly();
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
    }
}
