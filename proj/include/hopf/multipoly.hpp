#pragma once

// Sparse multivariate polynomials over a CycloField, graded-lex ordered.

#include <map>
#include <string>
#include <vector>

#include "hopf/cyclofield.hpp"

namespace hopf {

using Exponents = std::vector<unsigned>;

/// Graded lexicographic order by the declared variable order.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

class MultiPoly {
   public:
    static constexpr std::size_t max_variables = 12;

    MultiPoly(const CycloField& field, std::vector<std::string> vars);
    static MultiPoly constant(const CycloField& field, std::vector<std::string> vars, const FieldElement& c);
    static MultiPoly variable(const CycloField& field, std::vector<std::string> vars, const std::string& name);

    const CycloField& field() const noexcept { return *field_; }
    const std::vector<std::string>& variables() const noexcept { return vars_; }
    const std::map<Exponents, FieldElement, GrlexLess>& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (zero if absent).
    FieldElement constant_term() const;
    /// Coefficient of the given monomial.
    FieldElement coeff(const Exponents& e) const;
    unsigned degree_in(const std::string& var) const;
    /// True if some term involves var.
    bool involves(const std::string& var) const { return degree_in(var) > 0; }

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly scaled(const FieldElement& c) const;

    /// Replace var by value everywhere.
    MultiPoly substitute(const std::string& var, const MultiPoly& value) const;
    MultiPoly substitute(const std::string& var, const FieldElement& value) const;

    /// Deterministic text, highest term first, e.g. "2*alpha*beta - 1".
    std::string to_string() const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

   private:
    std::size_t index_of(const std::string& var) const;
    void add_term(const Exponents& e, const FieldElement& c);
    void check_vars(const MultiPoly& other) const;
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

    const CycloField* field_;
    std::vector<std::string> vars_;
    std::map<Exponents, FieldElement, GrlexLess> terms_;
};

MultiPoly operator+(MultiPoly a, const MultiPoly& b);
MultiPoly operator-(MultiPoly a, const MultiPoly& b);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

enum class PolyOp { add, sub, mul };
MultiPoly multipoly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op);

}  // namespace hopf
