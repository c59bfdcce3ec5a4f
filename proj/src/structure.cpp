#include <algorithm>
#include <numeric>
#include <sstream>

#include "hopf/hopf.hpp"

namespace hopf {

std::size_t GroupLikes::inverse_of(std::size_t i) const {
    for (std::size_t j = 0; j < table[i].size(); ++j)
        if (table[i][j] == 0) return j;
    throw NotGroupLike("element has no inverse in the group table");
}

namespace {

bool is_group_like(const HopfAlgebra& h, const Vector& g) {
    if (!h.counit_of(g).is_one()) return false;
    Matrix dg = h.comultiply(g);
    for (std::size_t j = 0; j < h.dim(); ++j)
        for (std::size_t k = 0; k < h.dim(); ++k)
            if (dg.at(j, k) != g[j] * g[k]) return false;
    return true;
}

std::size_t find_index(const std::vector<Vector>& xs, const Vector& v) {
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (xs[i] == v) return i;
    throw NotGroupLike("product of group-likes left the computed set");
}

unsigned matrix_order(const Matrix& m, unsigned cap) {
    Matrix p = m;
    for (unsigned k = 1; k <= cap; ++k) {
        if (p.is_identity()) return k;
        p = p * m;
    }
    return 0;
}

}  // namespace

GroupLikes group_likes(const HopfAlgebra& h) {
    GroupLikes out;
    HopfAlgebra d = dual(h);
    CharacterResult chars = characters(d.algebra);
    out.unsplit = chars.unsplit;
    for (auto& g : chars.characters) {
        if (!is_group_like(h, g)) throw VerificationFailure("character of the dual is not group-like");
        out.elements.push_back(g);
    }
    auto one = std::find(out.elements.begin(), out.elements.end(), h.unit());
    if (one == out.elements.end()) throw VerificationFailure("identity missing from group-likes");
    std::rotate(out.elements.begin(), one, one + 1);
    std::sort(out.elements.begin() + 1, out.elements.end(), vector_less);

    const std::size_t n = out.elements.size();
    out.table.assign(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.table[i][j] = find_index(out.elements, h.multiply(out.elements[i], out.elements[j]));
    for (std::size_t i = 0; i < n; ++i) {
        unsigned k = 1;
        std::size_t p = i;
        while (p != 0) {
            p = out.table[p][i];
            ++k;
        }
        out.orders.push_back(k);
        for (std::size_t j = 0; j < n; ++j)
            if (out.table[i][j] != out.table[j][i]) out.abelian = false;
    }
    out.cyclic = std::find(out.orders.begin(), out.orders.end(), static_cast<unsigned>(n)) != out.orders.end();
    return out;
}

std::vector<Vector> skew_primitives(const HopfAlgebra& H, const Vector& g, const Vector& h) {
    if (!is_group_like(H, g) || !is_group_like(H, h)) throw NotGroupLike("skew primitives need group-like g and h");
    const std::size_t d = H.dim();
    const CycloField& f = H.field();
    // (id (x) e_q) of Delta(x) - x (x) g - h (x) x
    auto P = joint_kernel(f, d, d, [&](std::size_t q) {
        Matrix m(f, d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (const auto& [k, x] : H.comult.slot(i, j))
                    if (k == q) m.at(j, i) += x;
        for (std::size_t i = 0; i < d; ++i) m.at(i, i) -= g[q];
        for (std::size_t j = 0; j < d; ++j) m.at(j, q) -= h[j];
        return m;
    });
    SubspaceBuilder trivial(f, d);
    Vector gh = sub(g, h);
    if (!is_zero(gh)) trivial.add(gh);
    std::vector<Vector> out;
    for (auto& p : P)
        if (trivial.add(p)) out.push_back(p);
    return out;
}

std::vector<Vector> coradical(const HopfAlgebra& h) {
    HopfAlgebra d = dual(h);
    auto rad = radical(d.algebra);
    if (rad.empty()) {
        std::vector<Vector> all;
        for (std::size_t i = 0; i < h.dim(); ++i) all.push_back(h.basis(i));
        return all;
    }
    return kernel(Matrix::from_rows(h.field(), rad, h.dim()));
}

bool is_pointed(const HopfAlgebra& h) { return coradical(h).size() == group_likes(h).size(); }

namespace {

// order of conjugation by G on the nontrivial (1, k)-skew primitives
unsigned conjugation_order(const HopfAlgebra& h, const GroupLikes& G, std::size_t k,
                           const std::vector<Vector>& prims) {
    if (!G.abelian) return 0;
    const CycloField& f = h.field();
    std::vector<Vector> cols = prims;
    Vector triv = sub(h.unit(), G.elements[k]);
    bool has_triv = !is_zero(triv);
    if (has_triv) cols.push_back(triv);
    Matrix basis = Matrix::from_columns(f, cols, h.dim());
    const std::size_t n = prims.size();
    unsigned result = 1;
    for (std::size_t g = 1; g < G.size(); ++g) {
        const Vector& x = G.elements[g];
        const Vector& xinv = G.elements[G.inverse_of(g)];
        Matrix m(f, n, n);
        for (std::size_t t = 0; t < n; ++t) {
            Vector y = h.multiply(h.multiply(x, prims[t]), xinv);
            auto sol = solve(basis, y);
            if (!sol) return 0;
            for (std::size_t r = 0; r < n; ++r) m.at(r, t) = sol->particular[r];
        }
        unsigned o = matrix_order(m, 64);
        if (o == 0) return 0;
        result = std::lcm(result, o);
    }
    return result;
}

}  // namespace

Fingerprint fingerprint(const HopfAlgebra& h) {
    Fingerprint fp;
    fp.dim = h.dim();
    GroupLikes G = group_likes(h);
    HopfAlgebra hd = dual(h);
    GroupLikes GD = group_likes(hd);
    fp.group_order = G.size();
    fp.element_orders = G.orders;
    std::sort(fp.element_orders.begin(), fp.element_orders.end());
    fp.dual_group_order = GD.size();
    fp.trace_s2 = trace_s2(h);
    const Matrix& S = h.S();
    fp.antipode_order = matrix_order(S, 32);
    if (fp.antipode_order == 0) throw AntipodeOrderOverflow("antipode order exceeds 32");
    fp.pointed = coradical(h).size() == G.size();
    fp.dual_pointed = coradical(hd).size() == GD.size();

    // P_{g,h} = g . P_{1, g^-1 h}, so one solve per group-like suffices
    std::vector<std::size_t> dims(G.size());
    std::vector<unsigned> conj(G.size());
    for (std::size_t k = 0; k < G.size(); ++k) {
        auto prims = skew_primitives(h, h.unit(), G.elements[k]);
        dims[k] = prims.size();
        conj[k] = prims.empty() ? 0 : conjugation_order(h, G, k, prims);
    }
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = 0; j < G.size(); ++j) {
            std::size_t k = G.table[G.inverse_of(i)][j];
            if (dims[k]) fp.skew_profile[{G.orders[i], G.orders[j], conj[k]}] += dims[k];
        }
    return fp;
}

std::string Fingerprint::to_text() const {
    std::ostringstream os;
    os << "dim: " << dim << "\n";
    os << "group_order: " << group_order << "\n";
    os << "element_orders:";
    for (auto o : element_orders) os << " " << o;
    os << "\n";
    os << "dual_group_order: " << dual_group_order << "\n";
    os << "trace_s2: " << trace_s2.to_string() << "\n";
    os << "antipode_order: " << antipode_order << "\n";
    os << "pointed: " << (pointed ? "yes" : "no") << "\n";
    os << "dual_pointed: " << (dual_pointed ? "yes" : "no") << "\n";
    os << "skew_profile:";
    if (skew_profile.empty()) os << " none";
    for (const auto& [key, n] : skew_profile)
        os << " (" << std::get<0>(key) << "," << std::get<1>(key) << "," << std::get<2>(key) << ")=" << n;
    os << "\n";
    return os.str();
}

bool operator==(const Fingerprint& a, const Fingerprint& b) {
    if (a.dim != b.dim || a.group_order != b.group_order || a.element_orders != b.element_orders ||
        a.dual_group_order != b.dual_group_order || a.antipode_order != b.antipode_order ||
        a.pointed != b.pointed || a.dual_pointed != b.dual_pointed || a.skew_profile != b.skew_profile)
        return false;
    const CycloField* fa = a.trace_s2.field();
    const CycloField* fb = b.trace_s2.field();
    if (!fa || !fb || same_field(fa, fb)) return a.trace_s2 == b.trace_s2;
    const CycloField& common = make_field(std::lcm(fa->order(), fb->order()));
    return embed(a.trace_s2, common) == embed(b.trace_s2, common);
}

}  // namespace hopf
