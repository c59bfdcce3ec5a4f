// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "hopf/constructors.hpp"
#include "hopf/dim5.hpp"
#include "hopf/yd.hpp"

using namespace hopf;

namespace {

using Clock = std::chrono::steady_clock;

const unsigned primes[] = {3, 5, 7, 11};

const FieldElement& minus_one() {
    static FieldElement m = make_field(1).from_rational(Rational(-1));
    return m;
}

struct Named {
    std::string name;
    HopfAlgebra h;
    bool semisimple;
    bool s4_identity;
};

// every algebra the criteria quantify over, built once
const std::vector<Named>& families() {
    static std::vector<Named> all = [] {
        std::vector<Named> out;
        out.push_back({"sweedler", sweedler(), false, true});
        out.push_back({"taft(2,-1)", taft(2, minus_one()), false, true});
        for (unsigned n = 1; n <= 12; ++n) out.push_back({"k[Z_" + std::to_string(n) + "]", group_algebra(n), true, true});
        for (unsigned p : primes) {
            for (int mu : {0, 1}) {
                HopfAlgebra a = a_tau_mu(p, 2, minus_one(), mu);
                std::string name = "A(tau," + std::to_string(mu) + ") p=" + std::to_string(p);
                out.push_back({name + "*", dual(a), false, true});
                out.push_back({name, std::move(a), false, true});
            }
            out.push_back({"T_2(x)k[Z_" + std::to_string(p) + "]", taft_tensor_group(2, minus_one(), p), false, true});
        }
        return out;
    }();
    return all;
}

// left integrals by a direct linear solve: b Lambda = eps(b) Lambda for all basis b
std::size_t integral_space_dim(const HopfAlgebra& h, Vector* one = nullptr) {
    const CycloField& f = h.field();
    std::size_t d = h.dim();
    Matrix m(f, d * d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vector prod = h.multiply(h.basis(i), h.basis(j));
            for (std::size_t k = 0; k < d; ++k) {
                FieldElement c = prod[k];
                if (k == j) c -= h.counit[i];
                m.at(i * d + k, j) = c;
            }
        }
    std::vector<Vector> ker = kernel(m);
    if (one && ker.size() == 1) *one = ker[0];
    return ker.size();
}

struct Outcome {
    bool ok = true;
    std::ostringstream notes;
    void fail(const std::string& why) {
        if (ok) notes << why;
        ok = false;
    }
};

using Criterion = std::function<void(Outcome&)>;

void axioms(Outcome& r) {
    for (const auto& fam : families()) {
        auto start = Clock::now();
        if (!verify_hopf(fam.h).ok()) r.fail(fam.name + " violates an axiom");
        if (Clock::now() - start > std::chrono::seconds(60)) r.fail(fam.name + " exceeds 60 s");
    }
}

void larson_radford(Outcome& r) {
    for (const auto& fam : families()) {
        FieldElement t = trace_s2(fam.h);
        if (fam.semisimple) {
            if (!(t == fam.h.field().from_rational(Rational(static_cast<long>(fam.h.dim())))))
                r.fail(fam.name + ": Tr(S^2) != n");
        } else if (!t.is_zero()) {
            r.fail(fam.name + ": Tr(S^2) != 0");
        }
        bool lr = is_semisimple_LR(fam.h);
        if (lr != is_semisimple_trace(fam.h.algebra) || lr != fam.semisimple) r.fail(fam.name + ": semisimplicity tests disagree");
    }
}

void integral_dims(Outcome& r) {
    for (const auto& fam : families())
        if (integral_space_dim(fam.h) != 1) r.fail(fam.name + ": integral space not one-dimensional");
    HopfAlgebra h4 = sweedler();
    Vector lambda;
    integral_space_dim(h4, &lambda);
    const FieldElement minus = h4.field().from_rational(Rational(-1));
    Vector g = h4.basis(2);
    if (!(h4.multiply(lambda, g) == scale(lambda, minus))) r.fail("H_4: Lambda g != -Lambda");
    IntegralData data = integrals(h4);
    if (!(data.distinguished_a == g)) r.fail("H_4: a != g");
    if (!(dot(data.distinguished_alpha, g) == minus)) r.fail("H_4: alpha(g) != -1");
    // the library integral spans the same line as the oracle
    Matrix pair(h4.field(), 4, 2);
    for (std::size_t i = 0; i < 4; ++i) {
        pair.at(i, 0) = lambda[i];
        pair.at(i, 1) = data.left_integral[i];
    }
    if (rank(pair) != 1) r.fail("H_4: integral differs from the oracle");
}

void radford(Outcome& r) {
    for (const auto& fam : families()) {
        if (!check_radford_s4(fam.h, integrals(fam.h))) r.fail(fam.name + ": S^4 formula fails");
        if (fam.s4_identity && !pow(*fam.h.antipode, 4).is_identity()) r.fail(fam.name + ": S^4 != id");
    }
}

void group_likes_criterion(Outcome& r) {
    for (unsigned p : primes)
        for (int mu : {0, 1}) {
            GroupLikes g = group_likes(a_tau_mu(p, 2, minus_one(), mu));
            if (g.size() != 2 * p || !g.cyclic) r.fail("A(tau," + std::to_string(mu) + ") p=" + std::to_string(p));
        }
    for (const auto& fam : families()) {
        GroupLikes g = group_likes(fam.h);
        if (g.size() == 0 || fam.h.dim() % g.size() != 0) r.fail(fam.name + ": |G| does not divide dim");
    }
}

void pointedness(Outcome& r) {
    for (unsigned p : primes) {
        HopfAlgebra a0 = a_tau_mu(p, 2, minus_one(), 0), a1 = a_tau_mu(p, 2, minus_one(), 1);
        std::string ps = " p=" + std::to_string(p);
        if (!is_pointed(a0)) r.fail("A(tau,0)" + ps);
        if (!is_pointed(dual(a0))) r.fail("A(tau,0)*" + ps);
        if (!is_pointed(a1)) r.fail("A(tau,1)" + ps);
        if (!is_pointed(taft_tensor_group(2, minus_one(), p))) r.fail("T_2(x)k[Z_p]" + ps);
        if (is_pointed(dual(a1))) r.fail("A(tau,1)* is pointed" + ps);
    }
    for (const auto& fam : families()) {
        std::size_t d = fam.h.dim();
        if (fam.semisimple || d % 4 != 0 || !is_prime(static_cast<unsigned>(d / 4)) || d / 4 == 2) continue;
        if (group_likes(fam.h).size() > 2 && !is_pointed(fam.h)) r.fail(fam.name + ": |G| > 2 but not pointed");
    }
}

void classifier(Outcome& r) {
    for (unsigned p : primes) {
        HopfAlgebra a0 = a_tau_mu(p, 2, minus_one(), 0), a1 = a_tau_mu(p, 2, minus_one(), 1);
        std::vector<std::pair<std::string, HopfAlgebra>> refs{{"A(tau,0)", a0},
                                                              {"A(tau,0)*", dual(a0)},
                                                              {"A(tau,1)", a1},
                                                              {"A(tau,1)*", dual(a1)},
                                                              {"T_q(x)k[Z_p]", taft_tensor_group(2, minus_one(), p)}};
        std::vector<Fingerprint> fps;
        for (const auto& [label, h] : refs) {
            std::string got = classify_4p(h);
            if (got != label) r.fail("p=" + std::to_string(p) + ": " + label + " labelled " + got);
            fps.push_back(fingerprint(h));
        }
        for (std::size_t i = 0; i < fps.size(); ++i)
            for (std::size_t j = i + 1; j < fps.size(); ++j)
                if (fps[i] == fps[j]) r.fail("p=" + std::to_string(p) + ": " + refs[i].first + " and " + refs[j].first + " collide");
    }
}

void bosonization(Outcome& r) {
    auto h4 = std::make_shared<const HopfAlgebra>(sweedler());
    HopfAlgebra b = bosonize(unit_braided(h4));
    if (!(b.algebra.mult == h4->algebra.mult && b.algebra.unit == h4->algebra.unit && b.comult == h4->comult &&
          b.counit == h4->counit && b.antipode == h4->antipode))
        r.fail("k # H_4 differs from H_4");
    for (unsigned p : {3u, 5u, 7u}) {
        HopfAlgebra s = bosonize(trivial_braided(group_algebra(p, h4->field()), h4));
        std::string ps = "k[Z_" + std::to_string(p) + "] # H_4";
        if (!verify_hopf(s).ok()) r.fail(ps + " violates an axiom");
        if (group_likes(s).size() != 2 * p) r.fail(ps + ": |G| != 2p");
        if (!is_pointed(s)) r.fail(ps + " is not pointed");
    }
    if (!check_dual_biproduct(unit_braided(h4))) r.fail("dual biproduct for k");
    for (unsigned p : {3u, 5u})
        if (!check_dual_biproduct(trivial_braided(group_algebra(p, h4->field()), h4)))
            r.fail("dual biproduct for k[Z_" + std::to_string(p) + "]");
}

bool free_of_symbols(const Residual& res) {
    for (const auto& p : res.value)
        for (const char* s : {"beta", "eta", "zeta3"})
            if (p.involves(s)) return false;
    return true;
}

void dim5(Outcome& r) {
    auto start = Clock::now();
    Dim5Report a = dim5_check(Dim5Case::A), b = dim5_check(Dim5Case::B), c = dim5_check(Dim5Case::C);
    auto has = [](const Dim5Report& rep, const std::string& s) {
        return std::find(rep.conclusions.begin(), rep.conclusions.end(), s) != rep.conclusions.end();
    };
    // (a)
    const Residual* rho = a.find("rho(uv)");
    const Residual* one = a.find("r_-1 lambda(r_0) - lambda(r) 1 at r = uv");
    if (!rho || rho->to_string() != "g(x)uv") r.fail("(a) rho(uv)");
    if (!one || one->to_string() != "-1 + g" || !free_of_symbols(*one)) r.fail("(a) residual");
    if (!a.inconsistent) r.fail("(a) case A survives");
    for (const Dim5Report* rep : {&b, &c}) {
        std::string tag = rep == &b ? "B" : "C";
        // (b)
        const Residual* unit = rep->find("sum x_i y_i - 1_R");
        if (!unit || unit->to_string() != "(gamma - 1)*iota" || !has(*rep, "gamma=1")) r.fail("(b) " + tag);
        // (c)
        const Residual* uu = rep->find("S(uu) - (u_-1 |> S(u)) S(u_0)");
        if (!uu || uu->to_string() != "2*alpha*iota" || !free_of_symbols(*uu) || !has(*rep, "alpha=0"))
            r.fail("(c) " + tag);
        // (d)
        const Residual* vu = rep->find("S(vu) - (v_-1 |> S(u)) S(v_0) after alpha");
        if (!vu || vu->to_string() != "(-zeta4 + 1)*iota" || !free_of_symbols(*vu) || !has(*rep, "zeta4=1"))
            r.fail("(d) " + tag);
        // (e)
        const Residual* fin = rep->find("(u_-1 |> S(v)) S(u_0) - S(uv)");
        std::string want = rep == &b ? "-2*iota" : "-3*iota";
        std::string mismatch = rep == &b ? "mismatch uv - iota vs uv + iota" : "mismatch uv - 2*iota vs uv + iota";
        if (!fin || fin->to_string() != want || !free_of_symbols(*fin) || !has(*rep, mismatch) || !rep->inconsistent)
            r.fail("(e) " + tag);
    }
    if (Clock::now() - start > std::chrono::seconds(10)) r.fail("runtime over 10 s");
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, Criterion>> criteria{
        {"axiom suite", axioms},
        {"Tr(S^2) and semisimplicity", larson_radford},
        {"one-dimensional integrals, H_4 data", integral_dims},
        {"S^4 formula and S^4 = id", radford},
        {"group-likes: |G| = 2p cyclic, |G| divides dim", group_likes_criterion},
        {"pointedness", pointedness},
        {"classifier labels and fingerprints", classifier},
        {"bosonization", bosonization},
        {"dimension 5 elimination", dim5},
    };
    bool all = true, instances = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome r;
        auto start = Clock::now();
        try {
            criteria[i].second(r);
        } catch (const std::exception& e) {
            r.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(Clock::now() - start).count();
        std::cout << "criterion " << i + 1 << ": " << (r.ok ? "PASS" : "FAIL") << "  " << criteria[i].first << " ("
                  << std::fixed << std::setprecision(1) << secs << " s)";
        if (!r.ok) std::cout << "  " << r.notes.str();
        std::cout << "\n";
        all = all && r.ok;
        if (i >= 4) instances = instances && r.ok;
    }
    std::cout << "criterion 10: " << (instances ? "PASS" : "FAIL")
              << "  instance-level suites 5-9 stand in for the classification theorems\n";
    return all && instances ? 0 : 1;
}
