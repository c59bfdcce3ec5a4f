#pragma once

// Univariate polynomials over Q (QPoly) and over a CycloField (UniPoly).

#include <string>
#include <utility>
#include <vector>

#include "hopf/cyclofield.hpp"

namespace hopf {

/// Rational polynomial, low degree first, trailing zeros trimmed.
using QPoly = std::vector<Rational>;

void trim(QPoly& p);
int degree(const QPoly& p);
QPoly qp_add(const QPoly& a, const QPoly& b);
QPoly qp_sub(const QPoly& a, const QPoly& b);
QPoly qp_mul(const QPoly& a, const QPoly& b);
/// Quotient and remainder; throws DivisionByZero for b = 0.
std::pair<QPoly, QPoly> qp_divmod(const QPoly& a, const QPoly& b);
QPoly qp_monic(const QPoly& a);
/// Monic gcd (zero if both are zero).
QPoly qp_gcd(QPoly a, QPoly b);
QPoly qp_derivative(const QPoly& a);
Rational qp_eval(const QPoly& a, const Rational& x);
std::string qp_to_string(const QPoly& p);

/// Polynomial with coefficients in a single CycloField.
class UniPoly {
   public:
    UniPoly() = default;
    UniPoly(const CycloField& field, std::vector<FieldElement> coeffs);
    static UniPoly from_rational(const CycloField& field, const QPoly& p);
    static UniPoly constant(const FieldElement& c);
    /// x - root
    static UniPoly linear(const FieldElement& root);

    const CycloField* field() const noexcept { return field_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<FieldElement>& coeffs() const noexcept { return c_; }
    FieldElement coeff(std::size_t i) const;
    const FieldElement& lead() const { return c_.back(); }
    /// True when every coefficient lies in Q.
    bool is_rational() const;
    QPoly to_rational() const;

    FieldElement eval(const FieldElement& x) const;
    UniPoly monic() const;
    UniPoly derivative() const;
    /// p(x + a)
    UniPoly shift(const FieldElement& a) const;

    std::string to_string() const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

   private:
    void trim();
    friend UniPoly operator+(const UniPoly&, const UniPoly&);
    friend UniPoly operator-(const UniPoly&, const UniPoly&);
    friend UniPoly operator*(const UniPoly&, const UniPoly&);
    friend std::pair<UniPoly, UniPoly> divmod(const UniPoly&, const UniPoly&);

    const CycloField* field_ = nullptr;
    std::vector<FieldElement> c_;
};

UniPoly operator+(const UniPoly& a, const UniPoly& b);
UniPoly operator-(const UniPoly& a, const UniPoly& b);
UniPoly operator*(const UniPoly& a, const UniPoly& b);
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd.
UniPoly gcd(UniPoly a, UniPoly b);

/// Squarefree decomposition a = lc * prod f_i^i (Yun); entries (f_i, i) with deg f_i > 0.
std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& a);

}  // namespace hopf
