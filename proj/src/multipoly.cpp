#include "hopf/multipoly.hpp"

#include <numeric>
#include <sstream>

namespace hopf {

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da < db;
    // among equal degree, earlier variables weigh more
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly::MultiPoly(const CycloField& field, std::vector<std::string> vars)
    : field_(&field), vars_(std::move(vars)) {
    if (vars_.size() > max_variables)
        throw VariableMismatch("at most " + std::to_string(max_variables) + " variables are supported");
}

MultiPoly MultiPoly::constant(const CycloField& field, std::vector<std::string> vars, const FieldElement& c) {
    MultiPoly p(field, std::move(vars));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(const CycloField& field, std::vector<std::string> vars, const std::string& name) {
    MultiPoly p(field, std::move(vars));
    Exponents e(p.vars_.size(), 0);
    e[p.index_of(name)] = 1;
    p.add_term(e, field.one());
    return p;
}

std::size_t MultiPoly::index_of(const std::string& var) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == var) return i;
    throw VariableMismatch("unknown variable '" + var + "'");
}

void MultiPoly::add_term(const Exponents& e, const FieldElement& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void MultiPoly::check_vars(const MultiPoly& other) const {
    if (vars_ != other.vars_) throw VariableMismatch("polynomials over different variable lists");
    if (!same_field(field_, other.field_)) throw FieldMismatch("polynomials over different fields");
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && std::accumulate(terms_.begin()->first.begin(),
                                                                    terms_.begin()->first.end(), 0u) == 0);
}

FieldElement MultiPoly::constant_term() const { return coeff(Exponents(vars_.size(), 0)); }

FieldElement MultiPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? field_->zero() : it->second;
}

unsigned MultiPoly::degree_in(const std::string& var) const {
    std::size_t i = index_of(var);
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    check_vars(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    check_vars(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::scaled(const FieldElement& k) const {
    MultiPoly r(*field_, vars_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * k);
    return r;
}

MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_vars(b);
    MultiPoly r(*a.field_, a.vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly multipoly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op) {
    switch (op) {
        case PolyOp::add: return a + b;
        case PolyOp::sub: return a - b;
        case PolyOp::mul: return a * b;
    }
    return a;
}

MultiPoly MultiPoly::substitute(const std::string& var, const MultiPoly& value) const {
    check_vars(value);
    std::size_t idx = index_of(var);
    MultiPoly r(*field_, vars_);
    std::vector<MultiPoly> powers{constant(*field_, vars_, field_->one())};
    for (const auto& [e, c] : terms_) {
        while (powers.size() <= e[idx]) powers.push_back(powers.back() * value);
        Exponents rest = e;
        rest[idx] = 0;
        MultiPoly mono(*field_, vars_);
        mono.add_term(rest, c);
        r += mono * powers[e[idx]];
    }
    return r;
}

MultiPoly MultiPoly::substitute(const std::string& var, const FieldElement& value) const {
    return substitute(var, constant(*field_, vars_, value));
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool constant_term = std::accumulate(e.begin(), e.end(), 0u) == 0;
        std::string coeff;
        bool neg = false;
        if (c.is_rational()) {
            Rational q = c.rational_part();
            neg = q < 0;
            if (neg) q = -q;
            if (q != 1 || constant_term) coeff = q.get_str();
        } else {
            coeff = "(" + c.to_string() + ")";
        }
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        os << coeff << (!coeff.empty() && !mono.empty() ? "*" : "") << mono;
    }
    return os.str();
}

}  // namespace hopf
