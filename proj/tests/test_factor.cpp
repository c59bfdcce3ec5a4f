#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "hopf/factor.hpp"

using namespace hopf;
using testing::q;

namespace {

UniPoly rpoly(const CycloField& f, std::initializer_list<long> xs) {
    QPoly p;
    for (long x : xs) p.emplace_back(x);
    return UniPoly::from_rational(f, p);
}

UniPoly reconstruct(const UniPoly& p, const std::vector<std::pair<UniPoly, unsigned>>& fs) {
    UniPoly out = UniPoly::constant(p.lead());
    for (const auto& [g, m] : fs)
        for (unsigned i = 0; i < m; ++i) out = out * g;
    return out;
}

unsigned count_divisors(unsigned n) {
    unsigned c = 0;
    for (unsigned d = 1; d <= n; ++d) c += n % d == 0;
    return c;
}

}  // namespace

TEST_CASE("factor over Q") {
    const CycloField& Q = make_field(1);
    auto fs = factor_unipoly(rpoly(Q, {-1, 0, 0, 0, 1}));
    REQUIRE(fs.size() == 3);
    CHECK(fs[0].first == rpoly(Q, {-1, 1}));
    CHECK(fs[1].first == rpoly(Q, {1, 1}));
    CHECK(fs[2].first == rpoly(Q, {1, 0, 1}));
    auto phi6 = factor_unipoly(rpoly(Q, {1, -1, 1}));
    REQUIRE(phi6.size() == 1);
    CHECK(phi6[0].second == 1);
    CHECK_THROWS_AS(factor_unipoly(UniPoly()), DivisionByZero);
}

TEST_CASE("x^2+1 splits over Q(zeta_4)") {
    const CycloField& f = make_field(4);
    auto fs = factor_unipoly(rpoly(f, {1, 0, 1}));
    REQUIRE(fs.size() == 2);
    for (const auto& [g, m] : fs) {
        CHECK(g.degree() == 1);
        CHECK(m == 1);
        FieldElement root = -g.coeff(0);
        CHECK(root * root == q(f, -1));
    }
}

TEST_CASE("x^n - 1 has one factor per divisor over Q") {
    for (unsigned n = 1; n <= 24; ++n) {
        QPoly p(n + 1, Rational(0));
        p[0] = -1;
        p[n] = 1;
        auto fs = factor_rational(p);
        CHECK(fs.size() == count_divisors(n));
        for (const auto& [g, m] : fs) CHECK(m == 1);
    }
}

TEST_CASE("roots_in_field") {
    const CycloField& Q = make_field(1);
    CHECK(roots_in_field(rpoly(Q, {1, 0, 1})).empty());
    auto r = roots_in_field(rpoly(Q, {4, -4, 1}));
    REQUIRE(r.size() == 2);
    CHECK(r[0] == q(Q, 2));
    CHECK(r[1] == q(Q, 2));

    const CycloField& f3 = make_field(3);
    auto cube = roots_in_field(rpoly(f3, {-1, 0, 0, 1}));
    REQUIRE(cube.size() == 3);
    for (unsigned k = 0; k < 3; ++k) CHECK(std::count(cube.begin(), cube.end(), f3.zeta_pow(k)) == 1);

    for (unsigned n = 2; n <= 20; ++n) {
        const CycloField& f = make_field(n);
        auto roots = roots_in_field(UniPoly::from_rational(f, f.modulus()));
        CHECK(std::count(roots.begin(), roots.end(), f.zeta()) == 1);
        CHECK(roots.size() == f.degree());
    }
}

TEST_CASE("random factorizations reconstruct the input") {
    auto& g = testing::rng();
    std::uniform_int_distribution<int> deg(1, 8), coeff(-4, 4), pick(0, 3);
    const unsigned fields[] = {1, 3, 4, 5};
    for (int trial = 0; trial < 200; ++trial) {
        const CycloField& f = make_field(fields[pick(g)]);
        // Build products of small pieces so repeated and nontrivial factors show up.
        UniPoly p = UniPoly::constant(f.from_rational(Rational(coeff(g) == 0 ? 1 : 3)));
        int target = deg(g);
        while (p.degree() < target) {
            int d = std::min(target - p.degree(), 1 + pick(g) % 3);
            std::vector<FieldElement> c;
            for (int i = 0; i < d; ++i) c.push_back(testing::random_element(f, 3));
            c.push_back(f.one());
            UniPoly piece(f, c);
            p = p * piece;
            if (pick(g) == 0 && p.degree() + d <= target) p = p * piece;
        }
        auto fs = factor_unipoly(p);
        CHECK(reconstruct(p, fs) == p);
        for (const auto& [h, m] : fs) {
            CHECK(h.lead().is_one());
            CHECK(h.degree() >= 1);
        }
    }
}

TEST_CASE("norm") {
    const CycloField& f = make_field(4);
    CHECK(norm(f.one() + f.zeta()) == Rational(2));
    CHECK(norm(q(f, 3)) == Rational(9));
}
