#include "hopf/unipoly.hpp"

#include <sstream>

namespace hopf {

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly qp_add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

QPoly qp_sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

std::pair<QPoly, QPoly> qp_divmod(const QPoly& a, const QPoly& b) {
    if (b.empty()) throw DivisionByZero("polynomial division by zero");
    QPoly r = a;
    trim(r);
    if (r.size() < b.size()) return {QPoly{}, r};
    QPoly q(r.size() - b.size() + 1);
    Rational inv = 1 / b.back();
    for (std::size_t i = r.size(); i-- >= b.size();) {
        if (r[i] == 0) continue;
        Rational c = r[i] * inv;
        std::size_t shift = i - (b.size() - 1);
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    }
    trim(q);
    trim(r);
    return {q, r};
}

QPoly qp_monic(const QPoly& a) {
    if (a.empty()) return a;
    QPoly r = a;
    Rational inv = 1 / a.back();
    for (auto& x : r) x *= inv;
    return r;
}

QPoly qp_gcd(QPoly a, QPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        QPoly r = qp_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return qp_monic(a);
}

QPoly qp_derivative(const QPoly& a) {
    if (a.size() <= 1) return {};
    QPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<long>(i);
    trim(r);
    return r;
}

Rational qp_eval(const QPoly& a, const Rational& x) {
    Rational r = 0;
    for (std::size_t i = a.size(); i-- > 0;) r = r * x + a[i];
    return r;
}

std::string qp_to_string(const QPoly& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.size(); i-- > 0;) {
        if (p[i] == 0) continue;
        bool neg = p[i] < 0;
        Rational a = neg ? Rational(-p[i]) : p[i];
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        if (i == 0 || a != 1) os << a.get_str() << (i ? "*" : "");
        if (i) os << "x" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    return os.str();
}

UniPoly::UniPoly(const CycloField& field, std::vector<FieldElement> coeffs)
    : field_(&field), c_(std::move(coeffs)) {
    for (auto& c : c_)
        if (c.field() && !same_field(c.field(), field_))
            throw FieldMismatch("polynomial coefficient from another field");
    trim();
}

UniPoly UniPoly::from_rational(const CycloField& field, const QPoly& p) {
    std::vector<FieldElement> c;
    c.reserve(p.size());
    for (const auto& x : p) c.emplace_back(field, x);
    return UniPoly(field, std::move(c));
}

UniPoly UniPoly::constant(const FieldElement& c) {
    if (!c.field()) throw FieldMismatch("constant polynomial needs a field");
    return UniPoly(*c.field(), {c});
}

UniPoly UniPoly::linear(const FieldElement& root) {
    if (!root.field()) throw FieldMismatch("linear polynomial needs a field");
    return UniPoly(*root.field(), {-root, root.field()->one()});
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElement UniPoly::coeff(std::size_t i) const {
    if (i < c_.size()) return c_[i];
    return field_ ? field_->zero() : FieldElement();
}

bool UniPoly::is_rational() const {
    for (const auto& c : c_)
        if (!c.is_rational()) return false;
    return true;
}

QPoly UniPoly::to_rational() const {
    QPoly r;
    for (const auto& c : c_) r.push_back(c.rational_part());
    return r;
}

FieldElement UniPoly::eval(const FieldElement& x) const {
    FieldElement r = field_ ? field_->zero() : FieldElement();
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

UniPoly UniPoly::monic() const {
    if (c_.empty()) return *this;
    FieldElement inv = c_.back().inverse();
    UniPoly r = *this;
    for (auto& c : r.c_) c *= inv;
    return r;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly(*field_, {});
    std::vector<FieldElement> d;
    for (std::size_t i = 1; i < c_.size(); ++i)
        d.push_back(c_[i] * field_->from_rational(Rational(static_cast<long>(i))));
    return UniPoly(*field_, std::move(d));
}

UniPoly UniPoly::shift(const FieldElement& a) const {
    if (c_.empty()) return *this;
    UniPoly xa(*field_, {a, field_->one()});
    UniPoly r(*field_, {});
    for (std::size_t i = c_.size(); i-- > 0;) r = r * xa + UniPoly(*field_, {c_[i]});
    return r;
}

std::string UniPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        bool unit = c_[i].is_one();
        if (!unit || i == 0) os << "(" << c_[i].to_string() << ")" << (i ? "*" : "");
        if (i) os << "x" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    return os.str();
}

namespace {
const CycloField& common_field(const UniPoly& a, const UniPoly& b) {
    if (a.field() && b.field() && !same_field(a.field(), b.field()))
        throw FieldMismatch("polynomials over different fields");
    const CycloField* f = a.field() ? a.field() : b.field();
    if (!f) throw FieldMismatch("polynomial without a field");
    return *f;
}
}  // namespace

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    const CycloField& f = common_field(a, b);
    std::vector<FieldElement> c(std::max(a.c_.size(), b.c_.size()), f.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UniPoly(f, std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    const CycloField& f = common_field(a, b);
    std::vector<FieldElement> c(std::max(a.c_.size(), b.c_.size()), f.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return UniPoly(f, std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    const CycloField& f = common_field(a, b);
    if (a.c_.empty() || b.c_.empty()) return UniPoly(f, {});
    std::vector<FieldElement> c(a.c_.size() + b.c_.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(f, std::move(c));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    const CycloField& f = common_field(a, b);
    if (b.c_.empty()) throw DivisionByZero("polynomial division by zero");
    std::vector<FieldElement> r = a.c_;
    if (r.size() < b.c_.size()) return {UniPoly(f, {}), a};
    std::vector<FieldElement> q(r.size() - b.c_.size() + 1, f.zero());
    FieldElement inv = b.c_.back().inverse();
    std::size_t db = b.c_.size() - 1;
    for (std::size_t i = r.size(); i-- > db;) {
        if (r[i].is_zero()) continue;
        FieldElement c = r[i] * inv;
        std::size_t shift = i - db;
        q[shift] = c;
        for (std::size_t j = 0; j <= db; ++j)
            if (!b.c_[j].is_zero()) r[shift + j] -= c * b.c_[j];
    }
    r.resize(db);
    return {UniPoly(f, std::move(q)), UniPoly(f, std::move(r))};
}

UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& a) {
    std::vector<std::pair<UniPoly, unsigned>> out;
    if (a.degree() <= 0) return out;
    UniPoly f = a.monic();
    UniPoly d = f.derivative();
    UniPoly g = gcd(f, d);
    UniPoly b = divmod(f, g).first;
    UniPoly c = divmod(d, g).first;
    UniPoly e = c - b.derivative();
    unsigned i = 1;
    while (b.degree() > 0) {
        UniPoly h = gcd(b, e);
        if (h.degree() > 0) out.emplace_back(h, i);
        b = divmod(b, h).first;
        c = divmod(e, h).first;
        e = c - b.derivative();
        ++i;
    }
    return out;
}

}  // namespace hopf
