#include <map>
#include <mutex>
#include <numeric>

#include "hopf/constructors.hpp"

namespace hopf {

namespace {

struct Reference {
    std::string label;
    Fingerprint fp;
};

const std::vector<Reference>& references(unsigned p) {
    static std::mutex m;
    static std::map<unsigned, std::vector<Reference>> cache;
    std::lock_guard lock(m);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    FieldElement tau = make_field(1).from_rational(Rational(-1));
    HopfAlgebra a0 = a_tau_mu(p, 2, tau, 0);
    HopfAlgebra a1 = a_tau_mu(p, 2, tau, 1);
    std::vector<Reference> refs{
        {"A(tau,0)", fingerprint(a0)},
        {"A(tau,0)*", fingerprint(dual(a0))},
        {"A(tau,1)", fingerprint(a1)},
        {"A(tau,1)*", fingerprint(dual(a1))},
        {"T_q(x)k[Z_p]", fingerprint(taft_tensor_group(2, tau, p))},
    };
    return cache.emplace(p, std::move(refs)).first->second;
}

}  // namespace

std::string classify_4p(const HopfAlgebra& h) {
    const std::size_t d = h.dim();
    if (d % 4 != 0 || d / 4 < 3 || !is_prime(static_cast<unsigned>(d / 4)))
        throw BadDimension("classification needs dimension 4p for an odd prime p, got " + std::to_string(d));
    unsigned p = static_cast<unsigned>(d / 4);
    const CycloField& f = make_field(std::lcm(h.field().order(), 4 * p));
    HopfAlgebra big = embed(h, f);
    if (!big.antipode) big.antipode = solve_antipode(big);
    if (!trace_s2(big).is_zero()) return "semisimple";
    Fingerprint fp = fingerprint(big);
    std::string label = "unknown";
    int matches = 0;
    for (const auto& ref : references(p))
        if (ref.fp == fp) {
            label = ref.label;
            ++matches;
        }
    return matches == 1 ? label : "unknown";
}

}  // namespace hopf
