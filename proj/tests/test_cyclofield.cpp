#include <doctest.h>

#include "support.hpp"

using namespace hopf;
using testing::q;
using testing::random_element;

namespace {

std::vector<Rational> rats(std::initializer_list<long> xs) {
    std::vector<Rational> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

// Phi_n from x^n - 1 divided by Phi_d for proper divisors d, via QPoly division.
QPoly cyclotomic_oracle(unsigned n) {
    QPoly p(n + 1, Rational(0));
    p[0] = -1;
    p[n] = 1;
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) p = qp_divmod(p, cyclotomic_oracle(d)).first;
    return p;
}

}  // namespace

TEST_CASE("make_field moduli") {
    CHECK(make_field(1).degree() == 1);
    CHECK(make_field(1).modulus() == rats({-1, 1}));
    CHECK(make_field(4).degree() == 2);
    CHECK(make_field(4).modulus() == rats({1, 0, 1}));
    CHECK(make_field(6).modulus() == rats({1, -1, 1}));
    for (unsigned n = 1; n <= 30; ++n) {
        CHECK(make_field(n).modulus() == cyclotomic_oracle(n));
        CHECK(make_field(n).degree() == euler_phi(n));
    }
    CHECK(&make_field(12) == &make_field(12));
}

TEST_CASE("arith small cases") {
    const CycloField& f = make_field(4);
    FieldElement z = f.zeta();
    CHECK(z * z == q(f, -1));
    CHECK((f.one() + z) * (f.one() - z) == q(f, 2));
    for (unsigned n : {3u, 5u, 7u, 8u, 12u}) {
        const CycloField& g = make_field(n);
        CHECK(arith(g.one(), g.zeta(), ArithOp::div) == g.zeta_pow(n - 1));
        CHECK(g.zeta_pow(-1) == g.zeta_pow(n - 1));
    }
    CHECK_THROWS_AS(f.one() / f.zero(), DivisionByZero);
}

TEST_CASE("field axioms on random elements") {
    for (unsigned n = 1; n <= 20; ++n) {
        const CycloField& f = make_field(n);
        for (int trial = 0; trial < 10; ++trial) {
            FieldElement a = random_element(f), b = random_element(f), c = random_element(f);
            CHECK((a * b) * c == a * (b * c));
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK(a - a == f.zero());
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == f.one());
                CHECK((b / a) * a == b);
            }
        }
    }
}

TEST_CASE("zeta has exact order n") {
    for (unsigned n = 1; n <= 44; ++n) {
        const CycloField& f = make_field(n);
        FieldElement z = f.zeta();
        CHECK(z.pow(n).is_one());
        FieldElement p = f.one();
        for (unsigned m = 1; m < n; ++m) {
            p *= z;
            CHECK_FALSE(p.is_one());
        }
        CHECK(multiplicative_order(z, 100) == n);
    }
}

TEST_CASE("rationals") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-3")) == "-3/1");
    CHECK(to_string(Rational(0)) == "0/1");
    CHECK_THROWS_AS(parse_rational("2/-4"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("embedding is a ring map") {
    const CycloField& small = make_field(3);
    const CycloField& big = make_field(12);
    CHECK(embed(small.zeta(), big) == big.zeta_pow(4));
    for (int trial = 0; trial < 20; ++trial) {
        FieldElement a = random_element(small), b = random_element(small);
        CHECK(embed(a * b, big) == embed(a, big) * embed(b, big));
        CHECK(embed(a + b, big) == embed(a, big) + embed(b, big));
    }
}

TEST_CASE("primitive root validation") {
    const CycloField& f = make_field(6);
    CHECK_NOTHROW(require_primitive_root(f.zeta_pow(2), 3));
    CHECK_NOTHROW(require_primitive_root(q(f, -1), 2));
    CHECK_THROWS_AS(require_primitive_root(f.one(), 3), NotPrimitiveRoot);
    CHECK_THROWS_AS(require_primitive_root(f.zeta(), 3), NotPrimitiveRoot);
    CHECK_THROWS_AS(require_primitive_root(q(f, 2), 2), NotPrimitiveRoot);
}

TEST_CASE("to_string") {
    const CycloField& f = make_field(5);
    CHECK(f.zero().to_string() == "0");
    CHECK(q(f, 1, 2).to_string() == "1/2");
    CHECK((f.one() - f.zeta_pow(3)).to_string() == "-z^3 + 1");
}
