#include "hopf/cyclofield.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace hopf {

std::string to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    auto digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char ch : s)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        return true;
    };
    std::string_view num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    std::string_view unsigned_num = num;
    if (!unsigned_num.empty() && (unsigned_num[0] == '-' || unsigned_num[0] == '+'))
        unsigned_num.remove_prefix(1);
    if (!digits(unsigned_num) || !digits(den))
        throw ParseError("malformed rational '" + std::string(text) + "'");
    mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// exact division of a by a monic b; both low degree first
std::vector<Rational> divide_monic(std::vector<Rational> a, const std::vector<Rational>& b) {
    std::size_t db = b.size() - 1;
    std::vector<Rational> q(a.size() - db);
    for (std::size_t i = a.size(); i-- > db;) {
        Rational c = a[i];
        q[i - db] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    return q;
}

std::mutex& cyclo_mutex() {
    static std::mutex m;
    return m;
}

std::vector<Rational> cyclotomic_locked(unsigned n, std::map<unsigned, std::vector<Rational>>& cache) {
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    std::vector<Rational> p(n + 1);
    p[0] = -1;
    p[n] = 1;
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) p = divide_monic(p, cyclotomic_locked(d, cache));
    cache[n] = p;
    return p;
}

void trim_vec(std::vector<Rational>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

void reduce_mod(std::vector<Rational>& c, const std::vector<Rational>& mod) {
    std::size_t deg = mod.size() - 1;
    for (std::size_t i = c.size(); i-- > deg;) {
        if (c[i] == 0) continue;
        Rational lead = c[i];
        for (std::size_t j = 0; j < deg; ++j)
            if (mod[j] != 0) c[i - deg + j] -= lead * mod[j];
        c[i] = 0;
    }
    if (c.size() > deg) c.resize(deg);
    trim_vec(c);
}

const CycloField* pick_field(const FieldElement& a, const FieldElement& b) {
    if (a.field() && b.field() && a.field()->order() != b.field()->order())
        throw FieldMismatch("elements of Q(zeta_" + std::to_string(a.field()->order()) +
                            ") and Q(zeta_" + std::to_string(b.field()->order()) + ")");
    return a.field() ? a.field() : b.field();
}

}  // namespace

std::vector<Rational> cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw BadParams("cyclotomic polynomial of order 0");
    static std::map<unsigned, std::vector<Rational>> cache;
    std::lock_guard lock(cyclo_mutex());
    return cyclotomic_locked(n, cache);
}

CycloField::CycloField(unsigned n)
    : order_(n), degree_(euler_phi(n)), modulus_(cyclotomic_polynomial(n)) {}

const CycloField& make_field(unsigned n) {
    if (n == 0) throw BadParams("field order must be positive");
    static std::mutex m;
    static std::map<unsigned, std::unique_ptr<CycloField>> fields;
    std::lock_guard lock(m);
    auto& slot = fields[n];
    if (!slot) slot.reset(new CycloField(n));
    return *slot;
}

FieldElement CycloField::zero() const { return FieldElement(*this, Rational(0)); }
FieldElement CycloField::one() const { return FieldElement(*this, Rational(1)); }
FieldElement CycloField::from_rational(const Rational& r) const { return FieldElement(*this, r); }
FieldElement CycloField::zeta() const { return zeta_pow(1); }

FieldElement CycloField::zeta_pow(long long k) const {
    long long n = order_;
    long long e = ((k % n) + n) % n;
    std::vector<Rational> c(static_cast<std::size_t>(e) + 1);
    c[static_cast<std::size_t>(e)] = 1;
    return FieldElement(*this, std::move(c));
}

FieldElement::FieldElement(const CycloField& field, const Rational& value) : field_(&field) {
    if (value != 0) {
        c_.push_back(value);
        c_[0].canonicalize();
    }
}

FieldElement::FieldElement(const CycloField& field, std::vector<Rational> coeffs)
    : field_(&field), c_(std::move(coeffs)) {
    for (auto& c : c_) c.canonicalize();
    reduce();
}

void FieldElement::trim() { trim_vec(c_); }

void FieldElement::reduce() {
    if (field_) reduce_mod(c_, field_->modulus());
    else trim();
}

bool FieldElement::is_one() const { return c_.size() == 1 && c_[0] == 1; }

std::vector<Rational> FieldElement::coeffs() const {
    std::vector<Rational> out = c_;
    std::size_t deg = field_ ? field_->degree() : 1;
    if (out.size() < deg) out.resize(deg);
    return out;
}

void FieldElement::adopt_field(const FieldElement& other) { field_ = pick_field(*this, other); }

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
    adopt_field(rhs);
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    trim();
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
    adopt_field(rhs);
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    trim();
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
    *this = *this * rhs;
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
    *this = *this * rhs.inverse();
    return *this;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    const CycloField* f = pick_field(a, b);
    const auto& x = a.trimmed();
    const auto& y = b.trimmed();
    if (x.empty() || y.empty()) {
        FieldElement z;
        return f ? f->zero() : z;
    }
    if (x.size() == 1 && y.size() == 1) return FieldElement(*f, Rational(x[0] * y[0]));
    std::vector<Rational> prod(x.size() + y.size() - 1);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (y[j] != 0) prod[i + j] += x[i] * y[j];
    }
    return FieldElement(*f, std::move(prod));
}

FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div: return a / b;
    }
    return {};
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (c_.size() == 1) {
        FieldElement r = *this;
        r.c_[0] = 1 / c_[0];
        return r;
    }
    // extended Euclid: track s with s*a = r (mod modulus)
    using Poly = std::vector<Rational>;
    Poly r0 = field_->modulus(), r1 = c_;
    Poly s0, s1{Rational(1)};
    auto sub_mul = [](Poly& p, const Poly& q, const Rational& c, std::size_t shift) {
        if (p.size() < q.size() + shift) p.resize(q.size() + shift);
        for (std::size_t i = 0; i < q.size(); ++i) p[i + shift] -= c * q[i];
        trim_vec(p);
    };
    while (r1.size() > 1) {
        // r0 <- r0 mod r1, s0 updated alongside
        while (r0.size() >= r1.size()) {
            Rational c = r0.back() / r1.back();
            std::size_t shift = r0.size() - r1.size();
            sub_mul(r0, r1, c, shift);
            sub_mul(s0, s1, c, shift);
        }
        std::swap(r0, r1);
        std::swap(s0, s1);
    }
    // r1 is a nonzero constant (modulus is irreducible)
    Rational inv = 1 / r1[0];
    for (auto& x : s1) x *= inv;
    return FieldElement(*field_, std::move(s1));
}

FieldElement FieldElement::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement base = *this;
    FieldElement result = field_ ? field_->one() : FieldElement();
    if (!field_) {
        if (e == 0) throw DivisionByZero("power of a field-less element");
        return *this;
    }
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

std::string FieldElement::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Rational& c = c_[i];
        if (c == 0) continue;
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        first = false;
        if (i == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << "*";
        os << "z";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

std::strong_ordering compare(const FieldElement& a, const FieldElement& b) {
    const auto& x = a.trimmed();
    const auto& y = b.trimmed();
    std::size_t n = std::max(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
        Rational u = i < x.size() ? x[i] : Rational(0);
        Rational v = i < y.size() ? y[i] : Rational(0);
        if (u < v) return std::strong_ordering::less;
        if (u > v) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

FieldElement embed(const FieldElement& x, const CycloField& target) {
    if (!x.field() || x.is_zero()) return target.zero();
    unsigned n = x.field()->order(), m = target.order();
    if (m % n != 0)
        throw FieldMismatch("cannot embed Q(zeta_" + std::to_string(n) + ") into Q(zeta_" +
                            std::to_string(m) + ")");
    if (n == m) return x;
    std::size_t step = m / n;
    const auto& c = x.trimmed();
    std::vector<Rational> out((c.size() - 1) * step + 1);
    for (std::size_t i = 0; i < c.size(); ++i) out[i * step] = c[i];
    return FieldElement(target, std::move(out));
}

unsigned multiplicative_order(const FieldElement& x, unsigned cap) {
    if (x.is_zero() || !x.field()) return 0;
    FieldElement p = x;
    for (unsigned k = 1; k <= cap; ++k) {
        if (p.is_one()) return k;
        p *= x;
    }
    return 0;
}

void require_primitive_root(const FieldElement& tau, unsigned q) {
    if (q == 0 || multiplicative_order(tau, q) != q)
        throw NotPrimitiveRoot(tau.to_string() + " is not a primitive " + std::to_string(q) +
                               "-th root of unity");
}

}  // namespace hopf
