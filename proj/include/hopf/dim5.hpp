#pragma once

// Symbolic five-dimensional candidate R = A + k e over H_4 (basis iota, u, v, uv, e) and the
// constraint chain ruling out a noncommutative braided Hopf algebra of that shape.

#include <array>

#include "hopf/multipoly.hpp"

namespace hopf {

enum class Dim5Case { A, B, C };

Dim5Case parse_dim5_case(const std::string& name);
std::string to_string(Dim5Case c);

/// Coordinates on iota, u, v, uv, e (or a flattened H_4 (x) R tensor, H_4 basis 1, x, g, gx).
using PolyVec = std::vector<MultiPoly>;

struct ParamAlgebra {
    static constexpr std::size_t dim = 5;
    static constexpr std::array<const char*, 5> names{"iota", "u", "v", "uv", "e"};
    static constexpr std::array<const char*, 4> base_names{"1", "x", "g", "gx"};

    Dim5Case which = Dim5Case::B;
    /// alpha, beta, gamma, eta, zeta1, ..., zeta7
    std::vector<std::string> vars;
    /// mult[i][j] = b_i b_j
    std::vector<std::vector<PolyVec>> mult;
    /// action[t][j] = t |> b_j for t in 1, x, g, gx
    std::vector<std::vector<PolyVec>> action;
    /// coaction[j] flattened as t * 5 + k: coefficient of t (x) b_k in rho(b_j)
    std::vector<PolyVec> coaction;
    /// S(b_j) with every zeta free
    std::vector<PolyVec> antipode_general;
    /// S(b_j) after zeta5 = zeta6 = 0, zeta1 = zeta7 = zeta2 = 1
    std::vector<PolyVec> antipode;

    const CycloField& field() const;
    MultiPoly var(const std::string& name) const;
    MultiPoly constant(const Rational& c) const;
    PolyVec zero() const;
    PolyVec basis(std::size_t i) const;
    PolyVec multiply(const PolyVec& a, const PolyVec& b) const;
    PolyVec act(std::size_t t, const PolyVec& v) const;
    /// rho(v), flattened t * 5 + k.
    PolyVec coact(const PolyVec& v) const;
    PolyVec apply(const std::vector<PolyVec>& map, const PolyVec& v) const;
    /// Substitute var := value everywhere.
    ParamAlgebra substitute(const std::string& var, const MultiPoly& value) const;
};

ParamAlgebra build_case(Dim5Case which);

/// One evaluated identity: difference of its two sides.
struct Residual {
    std::string name;
    PolyVec value;
    /// Printing labels; when empty they follow the size: R basis (5), H_4 (4), H_4 (x) R (20),
    /// H_4 (x) H_4 (x) R (80), scalar (1).
    std::vector<std::string> labels = {};
    std::string to_string() const;
    bool is_zero() const;
};

struct Dim5Report {
    Dim5Case which = Dim5Case::B;
    std::vector<Residual> residuals;
    /// Forced values and verdicts in the order derived, e.g. "gamma=1", "INCONSISTENT".
    std::vector<std::string> conclusions;
    bool inconsistent = false;

    const Residual* find(const std::string& name) const;
    std::string to_text() const;
};

/// H_4 relations on the action, module algebra, comodule coassociativity and counit,
/// comodule algebra, yd compatibility; plus rho(uv) and g |> uv as computed values.
Dim5Report check_module_comodule(const ParamAlgebra& pa);

/// lambda(iota) = lambda(u) = lambda(v) = 0 from lambda(t |> r) = eps(t) lambda(r);
/// lambda(vu); the antipode normalization; the dual-basis expansion; the contraction
/// gamma iota + e = 1_R; and for case A the residual of r_-1 lambda(r_0) = lambda(r) 1 at uv.
Dim5Report check_integral_constraints(const ParamAlgebra& pa);

/// S(rs) against (r_-1 |> S(s)) S(r_0) on (u,u), (v,u), (u,v) with gamma = 1.
/// Case A is rejected by check_integral_constraints; here it throws BadParams.
Dim5Report check_antipode_contradiction(Dim5Case which);

/// Full chain for one case: module/comodule, integral constraints, antipode.
Dim5Report dim5_check(Dim5Case which);

}  // namespace hopf
