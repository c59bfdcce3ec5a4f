#pragma once

// Exact arithmetic in Q and in the cyclotomic fields Q(zeta_n).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hopf/errors.hpp"

namespace hopf {

/// Arbitrary precision rational, always kept canonical (gcd 1, positive denominator).
using Rational = mpq_class;

/// Canonical "num/den" form; zero is "0/1".
std::string to_string(const Rational& r);
/// Parses "num/den" or "num"; throws ParseError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

unsigned euler_phi(unsigned n);

/// Coefficients (low degree first) of the n-th cyclotomic polynomial.
std::vector<Rational> cyclotomic_polynomial(unsigned n);

class FieldElement;

/// Q(zeta_n) presented as Q[z]/(Phi_n(z)). Obtain instances through make_field;
/// they live for the whole program so elements may hold plain pointers.
class CycloField {
   public:
    unsigned order() const noexcept { return order_; }
    unsigned degree() const noexcept { return degree_; }
    /// Monic modulus Phi_n, low degree first, length degree()+1.
    const std::vector<Rational>& modulus() const noexcept { return modulus_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_rational(const Rational& r) const;
    FieldElement zeta() const;
    /// zeta^k for any integer k (negative allowed).
    FieldElement zeta_pow(long long k) const;

    /// True when this field contains Q(zeta_m) as zeta_n^(n/m), i.e. m | n.
    bool contains_roots_of_unity(unsigned m) const noexcept { return m != 0 && order_ % m == 0; }

   private:
    friend const CycloField& make_field(unsigned n);
    explicit CycloField(unsigned n);

    unsigned order_;
    unsigned degree_;
    std::vector<Rational> modulus_;
};

/// Q(zeta_n). n >= 1; n = 1 gives Q itself.
const CycloField& make_field(unsigned n);

inline bool same_field(const CycloField* a, const CycloField* b) noexcept {
    return a == b || (a && b && a->order() == b->order());
}

/// An element of a CycloField. The coefficient vector is stored with trailing zeros removed,
/// so the zero element has no coefficients. A default-constructed element is a field-less
/// zero that combines with elements of any field.
class FieldElement {
   public:
    FieldElement() = default;
    FieldElement(const CycloField& field, const Rational& value);
    FieldElement(const CycloField& field, std::vector<Rational> coeffs);

    const CycloField* field() const noexcept { return field_; }

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const;
    bool is_rational() const noexcept { return c_.size() <= 1; }
    /// Constant coefficient; meaningful as "the value" only when is_rational().
    Rational rational_part() const { return c_.empty() ? Rational(0) : c_[0]; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    /// Coefficient vector padded to the field degree.
    std::vector<Rational> coeffs() const;
    const std::vector<Rational>& trimmed() const noexcept { return c_; }

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& rhs);
    FieldElement& operator-=(const FieldElement& rhs);
    FieldElement& operator*=(const FieldElement& rhs);
    FieldElement& operator/=(const FieldElement& rhs);

    FieldElement inverse() const;
    FieldElement pow(long long e) const;

    /// Human-readable form in the generator z = zeta_n, e.g. "-z^3 + 1/2".
    std::string to_string() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.c_ == b.c_; }

   private:
    void reduce();
    void trim();
    void adopt_field(const FieldElement& other);

    const CycloField* field_ = nullptr;
    std::vector<Rational> c_;
};

FieldElement operator+(FieldElement a, const FieldElement& b);
FieldElement operator-(FieldElement a, const FieldElement& b);
FieldElement operator*(const FieldElement& a, const FieldElement& b);
FieldElement operator/(FieldElement a, const FieldElement& b);

enum class ArithOp { add, sub, mul, div };
FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op);

/// Total order used for deterministic sorting (not a field order).
std::strong_ordering compare(const FieldElement& a, const FieldElement& b);

/// Image of x under Q(zeta_n) -> Q(zeta_m), zeta_n -> zeta_m^(m/n). Requires n | m.
FieldElement embed(const FieldElement& x, const CycloField& target);

/// Smallest k >= 1 with x^k = 1, or 0 if none up to `cap`.
unsigned multiplicative_order(const FieldElement& x, unsigned cap);

/// Validates that tau is a primitive q-th root of unity; throws NotPrimitiveRoot otherwise.
void require_primitive_root(const FieldElement& tau, unsigned q);

}  // namespace hopf
