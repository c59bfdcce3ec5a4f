#include "hopf/dim5.hpp"

#include <optional>
#include <sstream>

#include "hopf/constructors.hpp"
#include "hopf/errors.hpp"

namespace hopf {

namespace {

constexpr std::size_t D = ParamAlgebra::dim;
constexpr std::size_t iota = 0, u = 1, v = 2, uv = 3, e = 4;
constexpr std::size_t one = 0, x = 1, g = 2, gx = 3;

const HopfAlgebra& h4() {
    static const HopfAlgebra h = sweedler();
    return h;
}

std::vector<std::string> variable_names() {
    std::vector<std::string> out{"alpha", "beta", "gamma", "eta"};
    for (int i = 1; i <= 7; ++i) out.push_back("zeta" + std::to_string(i));
    return out;
}

// a constant field element of H_4's structure as a polynomial
MultiPoly lift(const ParamAlgebra& pa, const FieldElement& c) { return MultiPoly::constant(pa.field(), pa.vars, c); }

bool all_zero(const PolyVec& p) {
    for (const auto& c : p)
        if (!c.is_zero()) return false;
    return true;
}

PolyVec add(PolyVec a, const PolyVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

PolyVec sub(PolyVec a, const PolyVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

PolyVec times(const MultiPoly& c, PolyVec a) {
    for (auto& p : a) p = c * p;
    return a;
}

// product in H_4 (x) R of flattened elements t * 5 + k
PolyVec tensor_mult(const ParamAlgebra& pa, const PolyVec& a, const PolyVec& b) {
    const HopfAlgebra& H = h4();
    PolyVec out(4 * D, pa.constant(0));
    for (std::size_t s = 0; s < 4; ++s)
        for (std::size_t k = 0; k < D; ++k) {
            if (a[s * D + k].is_zero()) continue;
            for (std::size_t t = 0; t < 4; ++t)
                for (std::size_t l = 0; l < D; ++l) {
                    if (b[t * D + l].is_zero()) continue;
                    MultiPoly c = a[s * D + k] * b[t * D + l];
                    const PolyVec& rs = pa.mult[k][l];
                    for (const auto& [w, y] : H.algebra.mult.slot(s, t))
                        for (std::size_t m = 0; m < D; ++m)
                            if (!rs[m].is_zero()) out[w * D + m] += c * lift(pa, y) * rs[m];
                }
        }
    return out;
}

PolyVec simple(const ParamAlgebra& pa, std::size_t t, std::size_t k, const MultiPoly& c) {
    PolyVec out(4 * D, pa.constant(0));
    out[t * D + k] = c;
    return out;
}

std::string term(const MultiPoly& c, const std::string& label, bool first) {
    std::string t = c.to_string();
    bool single = c.terms().size() == 1;
    bool negative = single && !t.empty() && t[0] == '-';
    if (negative) t = t.substr(1);
    std::string body;
    if (label == "1")
        body = single ? t : "(" + t + ")";
    else if (single && t == "1")
        body = label;
    else
        body = (single ? t : "(" + t + ")") + "*" + label;
    if (first) return negative ? "-" + body : body;
    return (negative ? " - " : " + ") + body;
}

}  // namespace

Dim5Case parse_dim5_case(const std::string& name) {
    if (name == "A") return Dim5Case::A;
    if (name == "B") return Dim5Case::B;
    if (name == "C") return Dim5Case::C;
    throw BadParams("case must be A, B or C, got " + name);
}

std::string to_string(Dim5Case c) {
    switch (c) {
        case Dim5Case::A: return "A";
        case Dim5Case::B: return "B";
        case Dim5Case::C: return "C";
    }
    return "?";
}

const CycloField& ParamAlgebra::field() const { return make_field(1); }

MultiPoly ParamAlgebra::var(const std::string& name) const { return MultiPoly::variable(field(), vars, name); }

MultiPoly ParamAlgebra::constant(const Rational& c) const {
    return MultiPoly::constant(field(), vars, field().from_rational(c));
}

PolyVec ParamAlgebra::zero() const { return PolyVec(D, constant(0)); }

PolyVec ParamAlgebra::basis(std::size_t i) const {
    PolyVec out = zero();
    out[i] = constant(1);
    return out;
}

PolyVec ParamAlgebra::multiply(const PolyVec& a, const PolyVec& b) const {
    PolyVec out = zero();
    for (std::size_t i = 0; i < D; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < D; ++j)
            if (!b[j].is_zero()) out = add(out, times(a[i] * b[j], mult[i][j]));
    }
    return out;
}

PolyVec ParamAlgebra::act(std::size_t t, const PolyVec& w) const { return apply(action[t], w); }

PolyVec ParamAlgebra::apply(const std::vector<PolyVec>& map, const PolyVec& w) const {
    PolyVec out = zero();
    for (std::size_t j = 0; j < D; ++j)
        if (!w[j].is_zero()) out = add(out, times(w[j], map[j]));
    return out;
}

PolyVec ParamAlgebra::coact(const PolyVec& w) const {
    PolyVec out(4 * D, constant(0));
    for (std::size_t j = 0; j < D; ++j)
        if (!w[j].is_zero()) out = add(out, times(w[j], coaction[j]));
    return out;
}

ParamAlgebra ParamAlgebra::substitute(const std::string& name, const MultiPoly& value) const {
    ParamAlgebra out = *this;
    auto sub_vec = [&](PolyVec& p) {
        for (auto& c : p) c = c.substitute(name, value);
    };
    for (auto& row : out.mult)
        for (auto& p : row) sub_vec(p);
    for (auto& row : out.action)
        for (auto& p : row) sub_vec(p);
    for (auto& p : out.coaction) sub_vec(p);
    for (auto& p : out.antipode_general) sub_vec(p);
    for (auto& p : out.antipode) sub_vec(p);
    return out;
}

ParamAlgebra build_case(Dim5Case which) {
    ParamAlgebra pa;
    pa.which = which;
    pa.vars = variable_names();
    MultiPoly alpha = pa.var("alpha"), beta = pa.var("beta"), gamma = pa.var("gamma"), eta = pa.var("eta");
    MultiPoly c0 = pa.constant(0), c1 = pa.constant(1);
    auto vec = [&](std::initializer_list<std::pair<std::size_t, MultiPoly>> entries) {
        PolyVec out = pa.zero();
        for (const auto& [i, c] : entries) out[i] = c;
        return out;
    };

    // u^2 = alpha iota, v^2 = beta iota, uv + vu = gamma iota; e central idempotent orthogonal to A
    pa.mult.assign(D, std::vector<PolyVec>(D, pa.zero()));
    for (std::size_t i : {iota, u, v, uv}) {
        pa.mult[iota][i] = pa.basis(i);
        pa.mult[i][iota] = pa.basis(i);
    }
    pa.mult[u][u] = vec({{iota, alpha}});
    pa.mult[u][v] = vec({{uv, c1}});
    pa.mult[u][uv] = vec({{v, alpha}});
    pa.mult[v][u] = vec({{iota, gamma}, {uv, -c1}});
    pa.mult[v][v] = vec({{iota, beta}});
    pa.mult[v][uv] = vec({{v, gamma}, {u, -beta}});
    pa.mult[uv][u] = vec({{u, gamma}, {v, -alpha}});
    pa.mult[uv][v] = vec({{u, beta}});
    pa.mult[uv][uv] = vec({{uv, gamma}, {iota, -(alpha * beta)}});
    pa.mult[e][e] = pa.basis(e);

    // x |> u = 0, x |> v = iota, g |> u = -u, g |> v = -v; t |> e = eps(t) e
    pa.action.assign(4, std::vector<PolyVec>(D, pa.zero()));
    for (std::size_t j = 0; j < D; ++j) pa.action[one][j] = pa.basis(j);
    pa.action[g] = {pa.basis(iota), vec({{u, -c1}}), vec({{v, -c1}}), pa.basis(uv), pa.basis(e)};
    pa.action[x] = {pa.zero(), pa.zero(), pa.basis(iota), pa.basis(u), pa.zero()};
    pa.action[gx] = {pa.zero(), pa.zero(), pa.basis(iota), vec({{u, -c1}}), pa.zero()};

    // xg = -gx in the basis 1, x, g, gx
    pa.coaction.assign(D, PolyVec(4 * D, c0));
    pa.coaction[iota] = simple(pa, one, iota, c1);
    pa.coaction[e] = simple(pa, one, e, c1);
    switch (which) {
        case Dim5Case::A:
            pa.coaction[u] = add(simple(pa, one, u, c1), simple(pa, x, uv, pa.constant(2)));
            pa.coaction[v] = add(simple(pa, g, v, c1), simple(pa, gx, iota, pa.constant(2) * beta));
            break;
        case Dim5Case::B:
            pa.coaction[u] = simple(pa, g, u, c1);
            pa.coaction[v] = add(simple(pa, gx, iota, -eta), simple(pa, g, v, c1));
            break;
        case Dim5Case::C:
            pa.coaction[u] = add(simple(pa, gx, iota, -c1), simple(pa, g, u, c1));
            pa.coaction[v] = simple(pa, g, v, c1);
            break;
    }
    pa.coaction[uv] = tensor_mult(pa, pa.coaction[u], pa.coaction[v]);

    auto z = [&](int i) { return pa.var("zeta" + std::to_string(i)); };
    pa.antipode_general = {vec({{iota, z(1)}}), vec({{u, z(2)}}), vec({{u, z(3)}, {v, z(1)}}),
                           vec({{iota, z(4)}, {uv, z(2)}, {e, z(5)}}), vec({{iota, z(6)}, {e, z(7)}})};
    pa.antipode = pa.antipode_general;
    ParamAlgebra forced = pa;
    for (const auto& [name, value] : std::vector<std::pair<std::string, int>>{
             {"zeta5", 0}, {"zeta6", 0}, {"zeta1", 1}, {"zeta7", 1}, {"zeta2", 1}})
        for (auto& p : forced.antipode)
            for (auto& c : p) c = c.substitute(name, pa.constant(value));
    pa.antipode = forced.antipode;

    if (which == Dim5Case::A) pa = pa.substitute("gamma", c0);
    return pa;
}

std::string Residual::to_string() const {
    std::vector<std::string> labels = this->labels;
    if (!labels.empty()) {
    } else if (value.size() == 1) {
        labels.push_back("1");
    } else if (value.size() == D) {
        for (auto n : ParamAlgebra::names) labels.emplace_back(n);
    } else if (value.size() == 4) {
        for (auto n : ParamAlgebra::base_names) labels.emplace_back(n);
    } else if (value.size() == 4 * D) {
        for (auto t : ParamAlgebra::base_names)
            for (auto n : ParamAlgebra::names) labels.push_back(std::string(t) + "(x)" + n);
    } else if (value.size() == 16 * D) {
        for (auto s : ParamAlgebra::base_names)
            for (auto t : ParamAlgebra::base_names)
                for (auto n : ParamAlgebra::names) labels.push_back(std::string(s) + "(x)" + t + "(x)" + n);
    } else {
        for (std::size_t i = 0; i < value.size(); ++i) labels.push_back("c" + std::to_string(i));
    }
    std::vector<std::size_t> order;
    if (this->labels.empty() && value.size() == D)
        order = {uv, u, v, iota, e};
    else
        for (std::size_t i = 0; i < value.size(); ++i) order.push_back(i);
    std::string out;
    for (std::size_t i : order)
        if (!value[i].is_zero()) out += term(value[i], labels[i], out.empty());
    return out.empty() ? "0" : out;
}

bool Residual::is_zero() const { return all_zero(value); }

const Residual* Dim5Report::find(const std::string& name) const {
    for (const auto& r : residuals)
        if (r.name == name) return &r;
    return nullptr;
}

std::string Dim5Report::to_text() const {
    std::ostringstream os;
    os << "case " << to_string(which) << "\n";
    for (const auto& r : residuals) os << r.name << ": " << r.to_string() << "\n";
    for (const auto& c : conclusions) os << c << "\n";
    return os.str();
}

namespace {

PolyVec one_r(const ParamAlgebra& pa) { return add(pa.basis(iota), pa.basis(e)); }

FieldElement numeric(const MultiPoly& p) {
    if (!p.is_constant()) throw VerificationFailure("expected a numeric entry, got " + p.to_string());
    return p.constant_term();
}

// Sequential solving of residuals that are linear in a single parameter.
struct Solver {
    const ParamAlgebra& pa;
    std::vector<std::pair<std::string, MultiPoly>> known;

    MultiPoly reduce(MultiPoly p) const {
        for (const auto& [name, value] : known) p = p.substitute(name, value);
        return p;
    }

    // "name=value" if p is a x + b with a, b numbers and a != 0
    std::optional<std::string> solve(const MultiPoly& raw) {
        MultiPoly p = reduce(raw);
        std::string found;
        for (const auto& name : pa.vars)
            if (p.involves(name)) {
                if (!found.empty()) return std::nullopt;
                found = name;
            }
        if (found.empty() || p.degree_in(found) != 1) return std::nullopt;
        MultiPoly b = p.substitute(found, pa.constant(0));
        MultiPoly a = p.substitute(found, pa.constant(1)) - b;
        if (!a.is_constant() || !b.is_constant()) return std::nullopt;
        FieldElement value = -(b.constant_term() / a.constant_term());
        known.emplace_back(found, MultiPoly::constant(pa.field(), pa.vars, value));
        return found + "=" + value.to_string();
    }
};

void record(Dim5Report& rep, const std::string& law, std::vector<Residual> items, std::size_t size,
            const ParamAlgebra& pa) {
    bool any = false;
    for (auto& r : items)
        if (!r.is_zero()) {
            r.name = law + " " + r.name;
            rep.residuals.push_back(std::move(r));
            any = true;
        }
    if (!any) rep.residuals.push_back({law, PolyVec(size, pa.constant(0))});
}

std::string label(std::size_t i) { return ParamAlgebra::names[i]; }

// (r_-1 |> S(s)) S(r_0)
PolyVec braided_side(const ParamAlgebra& pa, std::size_t r, std::size_t s) {
    PolyVec out = pa.zero();
    PolyVec rho = pa.coaction[r];
    for (std::size_t t = 0; t < 4; ++t)
        for (std::size_t k = 0; k < D; ++k)
            if (!rho[t * D + k].is_zero())
                out = add(out, times(rho[t * D + k], pa.multiply(pa.act(t, pa.antipode[s]), pa.antipode[k])));
    return out;
}

}  // namespace

Dim5Report check_module_comodule(const ParamAlgebra& pa) {
    const HopfAlgebra& H = h4();
    Dim5Report rep;
    rep.which = pa.which;
    auto two = [&](std::size_t s, std::size_t t, std::size_t j) { return pa.act(s, pa.act(t, pa.basis(j))); };

    std::vector<Residual> g2, x2, anti, gxr, unit;
    for (std::size_t j = 0; j < D; ++j) {
        g2.push_back({"(" + label(j) + ")", sub(two(g, g, j), pa.basis(j))});
        x2.push_back({"(" + label(j) + ")", two(x, x, j)});
        anti.push_back({"(" + label(j) + ")", add(two(g, x, j), two(x, g, j))});
        gxr.push_back({"(" + label(j) + ")", sub(pa.action[gx][j], two(g, x, j))});
    }
    record(rep, "action g^2 = 1", g2, D, pa);
    record(rep, "action x^2 = 0", x2, D, pa);
    record(rep, "action gx = -xg", anti, D, pa);
    record(rep, "action of gx = g |> x |>", gxr, D, pa);
    for (std::size_t t = 0; t < 4; ++t)
        unit.push_back({"(" + std::string(ParamAlgebra::base_names[t]) + ")",
                        sub(pa.act(t, one_r(pa)), times(lift(pa, H.counit[t]), one_r(pa)))});
    record(rep, "module unit", unit, D, pa);

    std::vector<Residual> malg;
    for (std::size_t t = 1; t < 4; ++t)
        for (std::size_t i = 0; i < D; ++i)
            for (std::size_t j = 0; j < D; ++j) {
                PolyVec rhs = pa.zero();
                for (std::size_t a = 0; a < 4; ++a)
                    for (const auto& [b, c] : H.comult.slot(t, a))
                        rhs = add(rhs, times(lift(pa, c), pa.multiply(pa.act(a, pa.basis(i)), pa.act(b, pa.basis(j)))));
                malg.push_back({"(" + std::string(ParamAlgebra::base_names[t]) + "," + label(i) + "," + label(j) + ")",
                                sub(pa.act(t, pa.multiply(pa.basis(i), pa.basis(j))), rhs)});
            }
    record(rep, "module algebra", malg, D, pa);

    std::vector<Residual> counit, coassoc, calg, yd;
    for (std::size_t j = 0; j < D; ++j) {
        const PolyVec& rho = pa.coaction[j];
        PolyVec ec = pa.zero();
        for (std::size_t t = 0; t < 4; ++t)
            for (std::size_t k = 0; k < D; ++k) ec[k] += lift(pa, H.counit[t]) * rho[t * D + k];
        counit.push_back({"(" + label(j) + ")", sub(ec, pa.basis(j))});

        PolyVec lhs(16 * D, pa.constant(0)), rhs(16 * D, pa.constant(0));
        for (std::size_t t = 0; t < 4; ++t)
            for (std::size_t k = 0; k < D; ++k) {
                if (rho[t * D + k].is_zero()) continue;
                for (std::size_t a = 0; a < 4; ++a)
                    for (const auto& [b, c] : H.comult.slot(t, a)) lhs[(a * 4 + b) * D + k] += lift(pa, c) * rho[t * D + k];
                const PolyVec& inner = pa.coaction[k];
                for (std::size_t s = 0; s < 4; ++s)
                    for (std::size_t l = 0; l < D; ++l)
                        if (!inner[s * D + l].is_zero()) rhs[(t * 4 + s) * D + l] += rho[t * D + k] * inner[s * D + l];
            }
        coassoc.push_back({"(" + label(j) + ")", sub(lhs, rhs)});

        for (std::size_t i = 0; i < D; ++i)
            calg.push_back({"(" + label(j) + "," + label(i) + ")",
                            sub(pa.coact(pa.multiply(pa.basis(j), pa.basis(i))),
                                tensor_mult(pa, pa.coaction[j], pa.coaction[i]))});

        // rho(t |> r) = t1 r_-1 S(t3) (x) t2 |> r0
        for (std::size_t t = 1; t < 4; ++t) {
            PolyVec want(4 * D, pa.constant(0));
            for (std::size_t a = 0; a < 4; ++a)
                for (const auto& [m, c1] : H.comult.slot(t, a))
                    for (std::size_t b = 0; b < 4; ++b)
                        for (const auto& [cc, c2] : H.comult.slot(m, b))
                            for (std::size_t s = 0; s < 4; ++s)
                                for (std::size_t k = 0; k < D; ++k) {
                                    if (rho[s * D + k].is_zero()) continue;
                                    Vector left = H.multiply(H.multiply(H.basis(a), H.basis(s)), H.S().column(cc));
                                    PolyVec right = pa.act(b, pa.basis(k));
                                    MultiPoly coef = lift(pa, c1 * c2) * rho[s * D + k];
                                    for (std::size_t p = 0; p < 4; ++p) {
                                        if (left[p].is_zero()) continue;
                                        for (std::size_t q = 0; q < D; ++q)
                                            if (!right[q].is_zero()) want[p * D + q] += coef * lift(pa, left[p]) * right[q];
                                    }
                                }
            yd.push_back({"(" + std::string(ParamAlgebra::base_names[t]) + "," + label(j) + ")",
                          sub(pa.coact(pa.act(t, pa.basis(j))), want)});
        }
    }
    record(rep, "comodule counit", counit, D, pa);
    record(rep, "comodule coassociativity", coassoc, 16 * D, pa);
    record(rep, "comodule unit", {{"", sub(pa.coact(one_r(pa)), add(simple(pa, one, iota, pa.constant(1)), simple(pa, one, e, pa.constant(1))))}}, 4 * D, pa);
    record(rep, "comodule algebra", calg, 4 * D, pa);
    record(rep, "yd compatibility", yd, 4 * D, pa);
    rep.residuals.push_back({"rho(uv)", pa.coaction[uv]});
    rep.residuals.push_back({"g |> uv", pa.act(g, pa.basis(uv))});
    return rep;
}

Dim5Report check_integral_constraints(const ParamAlgebra& pa) {
    const HopfAlgebra& H = h4();
    const CycloField& f = pa.field();
    Dim5Report rep;
    rep.which = pa.which;
    std::vector<std::string> lambda_labels;
    for (auto n : ParamAlgebra::names) lambda_labels.push_back("lambda(" + std::string(n) + ")");

    // lambda(t |> r) - eps(t) lambda(r) as linear forms in lambda(iota), ..., lambda(e)
    std::vector<Vector> rows;
    for (std::size_t t = 1; t < 4; ++t)
        for (std::size_t j = 0; j < D; ++j) {
            PolyVec form = sub(pa.act(t, pa.basis(j)), times(lift(pa, H.counit[t]), pa.basis(j)));
            if (all_zero(form)) continue;
            rep.residuals.push_back({"lambda(" + std::string(ParamAlgebra::base_names[t]) + " |> " + label(j) +
                                         ") - eps(" + ParamAlgebra::base_names[t] + ") lambda(" + label(j) + ")",
                                     form, lambda_labels});
            Vector row;
            for (const auto& c : form) row.push_back(numeric(c));
            rows.push_back(row);
        }
    auto free = kernel(Matrix::from_rows(f, rows, D));
    for (std::size_t k : {iota, u, v}) {
        bool forced = true;
        for (const auto& w : free) forced = forced && w[k].is_zero();
        if (forced) rep.conclusions.push_back("lambda(" + label(k) + ")=0");
    }
    if (free.size() != 2) throw VerificationFailure("integral constraints leave an unexpected solution space");
    // normalized lambda(uv) = lambda(e) = 1
    PolyVec lambda = pa.zero();
    lambda[uv] = pa.constant(1);
    lambda[e] = pa.constant(1);
    auto lam = [&](const PolyVec& w) {
        MultiPoly out = pa.constant(0);
        for (std::size_t k = 0; k < D; ++k) out += lambda[k] * w[k];
        return out;
    };

    // r_-1 lambda(r_0) = lambda(r) 1, starting at uv
    for (std::size_t j : {uv, iota, u, v, e}) {
        PolyVec res(4, pa.constant(0));
        for (std::size_t t = 0; t < 4; ++t)
            for (std::size_t k = 0; k < D; ++k) res[t] += pa.coaction[j][t * D + k] * lambda[k];
        for (std::size_t t = 0; t < 4; ++t) res[t] -= lift(pa, H.unit()[t]) * lambda[j];
        if (j == uv || !all_zero(res))
            rep.residuals.push_back({"r_-1 lambda(r_0) - lambda(r) 1 at r = " + label(j), res});
        if (!all_zero(res) && !rep.inconsistent) {
            rep.inconsistent = true;
            rep.conclusions.push_back("rho(" + label(j) + ") contradicts r_-1 lambda(r_0) = lambda(r) 1: g=1");
        }
    }

    PolyVec vu = pa.multiply(pa.basis(v), pa.basis(u));
    rep.residuals.push_back({"lambda(vu)", vu, lambda_labels});
    rep.residuals.push_back({"lambda(vu) at the normalization", {lam(vu)}});
    rep.conclusions.push_back("lambda(vu)=" + lam(vu).to_string());

    // antipode normalization: S(1_R) = 1_R, eps o S = eps, S(e) = e
    Solver solver{pa, {}};
    const auto& S = pa.antipode_general;
    PolyVec eps_res = pa.zero();
    for (std::size_t j = 0; j < D; ++j) eps_res[j] = pa.apply(S, pa.basis(j))[e] - (j == e ? pa.constant(1) : pa.constant(0));
    rep.residuals.push_back({"eps(S(r)) - eps(r) by r", eps_res});
    PolyVec se = sub(pa.apply(S, pa.basis(e)), pa.basis(e));
    rep.residuals.push_back({"S(e) - e", se});
    PolyVec s1 = sub(pa.apply(S, one_r(pa)), one_r(pa));
    rep.residuals.push_back({"S(1_R) - 1_R", s1});
    for (const MultiPoly& p : {eps_res[uv], eps_res[e], se[iota], s1[iota]})
        if (auto c = solver.solve(p)) rep.conclusions.push_back(*c);

    // dual bases {iota, u, v, uv, e} and {uv, -v, u, iota, e}
    const std::vector<PolyVec> xs{pa.basis(iota), pa.basis(u), pa.basis(v), pa.basis(uv), pa.basis(e)};
    const std::vector<PolyVec> ys{pa.basis(uv), times(pa.constant(-1), pa.basis(v)), pa.basis(u), pa.basis(iota),
                                  pa.basis(e)};

    PolyVec z2 = pa.zero();
    for (std::size_t i = 0; i < D; ++i) z2 = add(z2, times(lam(pa.apply(S, xs[i])), ys[i]));
    z2 = sub(z2, one_r(pa));
    for (auto& c : z2) c = solver.reduce(c);
    rep.residuals.push_back({"(lambda (x) id)(sum S(x_i) (x) y_i) - 1_R", z2});
    if (auto c = solver.solve(z2[iota])) rep.conclusions.push_back(*c);

    std::vector<Residual> expansion;
    for (std::size_t j = 0; j < D; ++j) {
        PolyVec r = pa.basis(j), acc = pa.zero();
        for (std::size_t i = 0; i < D; ++i) acc = add(acc, times(lam(pa.multiply(ys[i], r)), xs[i]));
        expansion.push_back({"at " + label(j), sub(acc, r)});
    }
    record(rep, "dual basis expansion", expansion, D, pa);

    PolyVec contraction = pa.zero();
    for (std::size_t i = 0; i < D; ++i) contraction = add(contraction, pa.multiply(xs[i], ys[i]));
    rep.residuals.push_back({"sum x_i y_i - 1_R", sub(contraction, one_r(pa))});
    if (auto c = solver.solve(sub(contraction, one_r(pa))[iota])) rep.conclusions.push_back(*c);

    if (rep.inconsistent) rep.conclusions.push_back("INCONSISTENT");
    return rep;
}

Dim5Report check_antipode_contradiction(Dim5Case which) {
    if (which == Dim5Case::A) throw BadParams("case A is excluded by the integral constraints");
    ParamAlgebra pa = build_case(which).substitute("gamma", build_case(which).constant(1));
    Dim5Report rep;
    rep.which = which;
    Solver solver{pa, {}};
    auto pair_name = [](std::size_t r, std::size_t s) {
        return "(" + label(r) + "_-1 |> S(" + label(s) + ")) S(" + label(r) + "_0)";
    };

    PolyVec suu = pa.apply(pa.antipode, pa.multiply(pa.basis(u), pa.basis(u)));
    PolyVec buu = braided_side(pa, u, u);
    rep.residuals.push_back({"S(uu)", suu});
    rep.residuals.push_back({pair_name(u, u), buu});
    PolyVec ruu = sub(suu, buu);
    rep.residuals.push_back({"S(uu) - " + pair_name(u, u), ruu});
    if (auto c = solver.solve(ruu[iota])) rep.conclusions.push_back(*c);

    PolyVec svu = pa.apply(pa.antipode, pa.multiply(pa.basis(v), pa.basis(u)));
    PolyVec bvu = braided_side(pa, v, u);
    rep.residuals.push_back({"S(vu)", svu});
    rep.residuals.push_back({pair_name(v, u), bvu});
    PolyVec rvu = sub(svu, bvu);
    for (auto& c : rvu) c = solver.reduce(c);
    rep.residuals.push_back({"S(vu) - " + pair_name(v, u) + " after alpha", rvu});
    if (auto c = solver.solve(rvu[iota])) rep.conclusions.push_back(*c);

    for (const auto& [name, value] : solver.known) pa = pa.substitute(name, value);
    PolyVec required = pa.apply(pa.antipode, pa.multiply(pa.basis(u), pa.basis(v)));
    PolyVec computed = braided_side(pa, u, v);
    rep.residuals.push_back({"S(uv)", required});
    rep.residuals.push_back({pair_name(u, v), computed});
    Residual mismatch{pair_name(u, v) + " - S(uv)", sub(computed, required)};
    rep.residuals.push_back(mismatch);
    if (!mismatch.is_zero()) {
        rep.inconsistent = true;
        rep.conclusions.push_back("mismatch " + Residual{"", computed}.to_string() + " vs " +
                                  Residual{"", required}.to_string());
        rep.conclusions.push_back("INCONSISTENT");
    }
    return rep;
}

Dim5Report dim5_check(Dim5Case which) {
    ParamAlgebra pa = build_case(which);
    Dim5Report out = check_module_comodule(pa);
    Dim5Report integral = check_integral_constraints(pa);
    auto append = [&out](const Dim5Report& r) {
        out.residuals.insert(out.residuals.end(), r.residuals.begin(), r.residuals.end());
        out.conclusions.insert(out.conclusions.end(), r.conclusions.begin(), r.conclusions.end());
        out.inconsistent = out.inconsistent || r.inconsistent;
    };
    append(integral);
    if (!integral.inconsistent) append(check_antipode_contradiction(which));
    return out;
}

}  // namespace hopf
