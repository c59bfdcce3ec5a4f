#include "hopf/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>

namespace hopf {

namespace {

// ---- polynomials over Z/p, p an odd prime below 2^31 ----

using ZpPoly = std::vector<std::uint64_t>;

void zp_trim(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

ZpPoly zp_sub(const ZpPoly& a, const ZpPoly& b, std::uint64_t p) {
    ZpPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = (x + p - y) % p;
    }
    zp_trim(r);
    return r;
}

ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    ZpPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    zp_trim(r);
    return r;
}

// quotient and remainder; b nonzero
std::pair<ZpPoly, ZpPoly> zp_divmod(ZpPoly a, const ZpPoly& b, std::uint64_t p) {
    zp_trim(a);
    if (a.size() < b.size()) return {{}, a};
    std::size_t db = b.size() - 1;
    ZpPoly q(a.size() - db);
    std::uint64_t inv = inv_mod(b.back(), p);
    for (std::size_t i = a.size(); i-- > db;) {
        if (!a[i]) continue;
        std::uint64_t c = a[i] * inv % p;
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] = (a[i - db + j] + (p - c) * b[j]) % p;
    }
    a.resize(db);
    zp_trim(a);
    zp_trim(q);
    return {q, a};
}

ZpPoly zp_rem(const ZpPoly& a, const ZpPoly& b, std::uint64_t p) { return zp_divmod(a, b, p).second; }

ZpPoly zp_monic(ZpPoly a, std::uint64_t p) {
    if (a.empty()) return a;
    std::uint64_t inv = inv_mod(a.back(), p);
    for (auto& x : a) x = x * inv % p;
    return a;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, std::uint64_t p) {
    zp_trim(a);
    zp_trim(b);
    while (!b.empty()) {
        ZpPoly r = zp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return zp_monic(a, p);
}

// s*a + t*b = 1 for coprime a, b
void zp_xgcd(const ZpPoly& a, const ZpPoly& b, std::uint64_t p, ZpPoly& s, ZpPoly& t) {
    ZpPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
    while (!r1.empty()) {
        auto [q, r] = zp_divmod(r0, r1, p);
        ZpPoly s2 = zp_sub(s0, zp_mul(q, s1, p), p);
        ZpPoly t2 = zp_sub(t0, zp_mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    std::uint64_t inv = inv_mod(r0.back(), p);
    for (auto& x : s0) x = x * inv % p;
    for (auto& x : t0) x = x * inv % p;
    s = s0;
    t = t0;
}

ZpPoly zp_powmod(ZpPoly base, const mpz_class& e, const ZpPoly& f, std::uint64_t p) {
    ZpPoly r{1};
    base = zp_rem(base, f, p);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = zp_rem(zp_mul(r, r, p), f, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = zp_rem(zp_mul(r, base, p), f, p);
    }
    return r;
}

ZpPoly zp_derivative(const ZpPoly& a, std::uint64_t p) {
    ZpPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * (i % p) % p);
    zp_trim(r);
    return r;
}

// distinct-degree factorization of a monic squarefree f
std::vector<std::pair<ZpPoly, unsigned>> zp_ddf(ZpPoly f, std::uint64_t p) {
    std::vector<std::pair<ZpPoly, unsigned>> out;
    ZpPoly x{0, 1};
    ZpPoly h = x;
    mpz_class pz(static_cast<unsigned long>(p));
    for (unsigned d = 1; 2 * d <= f.size() - 1; ++d) {
        h = zp_powmod(h, pz, f, p);
        ZpPoly g = zp_gcd(f, zp_sub(h, x, p), p);
        if (g.size() > 1) {
            out.emplace_back(g, d);
            f = zp_divmod(f, g, p).first;
            h = zp_rem(h, f, p);
        }
    }
    if (f.size() > 1) out.emplace_back(f, static_cast<unsigned>(f.size() - 1));
    return out;
}

// equal-degree splitting (Cantor-Zassenhaus, p odd)
void zp_edf(const ZpPoly& g, unsigned d, std::uint64_t p, std::mt19937_64& rng,
            std::vector<ZpPoly>& out) {
    std::size_t n = g.size() - 1;
    if (n == d) {
        out.push_back(g);
        return;
    }
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), p, d);
    e = (e - 1) / 2;
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    for (;;) {
        ZpPoly a(n);
        for (auto& c : a) c = dist(rng);
        zp_trim(a);
        if (a.size() <= 1) continue;
        ZpPoly b = zp_powmod(a, e, g, p);
        b = zp_sub(b, ZpPoly{1}, p);
        ZpPoly c = zp_gcd(g, b, p);
        if (c.size() > 1 && c.size() < g.size()) {
            zp_edf(c, d, p, rng, out);
            zp_edf(zp_divmod(g, c, p).first, d, p, rng, out);
            return;
        }
    }
}

// ---- integer polynomials ----

using ZPoly = std::vector<mpz_class>;

void z_trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    z_trim(r);
    return r;
}

mpz_class mod_pos(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

ZPoly z_mod(const ZPoly& a, const mpz_class& m) {
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_pos(a[i], m);
    z_trim(r);
    return r;
}

ZpPoly to_zp(const ZPoly& a, std::uint64_t p) {
    ZpPoly r(a.size());
    mpz_class pz(static_cast<unsigned long>(p));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_pos(a[i], pz).get_ui();
    zp_trim(r);
    return r;
}

ZPoly from_zp(const ZpPoly& a) {
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<unsigned long>(a[i]);
    return r;
}

// exact division of a by a monic b; returns false if b does not divide a
bool z_divide_monic(const ZPoly& a, const ZPoly& b, ZPoly& q) {
    ZPoly r = a;
    if (r.size() < b.size()) return false;
    std::size_t db = b.size() - 1;
    q.assign(r.size() - db, 0);
    for (std::size_t i = r.size(); i-- > db;) {
        if (r[i] == 0) continue;
        mpz_class c = r[i];
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= c * b[j];
    }
    for (std::size_t i = 0; i < db; ++i)
        if (r[i] != 0) return false;
    return true;
}

// lift F = g*h (mod p) to F = G*H (mod p^k); g monic
void hensel_pair(const ZPoly& F, const ZpPoly& g, const ZpPoly& h, std::uint64_t p, unsigned k,
                 ZPoly& G, ZPoly& H) {
    ZpPoly s, t;
    zp_xgcd(g, h, p, s, t);
    G = from_zp(g);
    H = from_zp(h);
    mpz_class pm(static_cast<unsigned long>(p));
    for (unsigned m = 1; m < k; ++m) {
        ZPoly diff = F;
        ZPoly gh = z_mul(G, H);
        if (diff.size() < gh.size()) diff.resize(gh.size());
        for (std::size_t i = 0; i < gh.size(); ++i) diff[i] -= gh[i];
        z_trim(diff);
        ZPoly e(diff.size());
        for (std::size_t i = 0; i < diff.size(); ++i) mpz_divexact(e[i].get_mpz_t(), diff[i].get_mpz_t(), pm.get_mpz_t());
        ZpPoly ep = to_zp(e, p);
        ZpPoly dg = zp_rem(zp_mul(ep, t, p), g, p);
        ZpPoly dh = zp_rem(zp_mul(ep, s, p), h, p);
        for (std::size_t i = 0; i < dg.size(); ++i) G[i] += pm * static_cast<unsigned long>(dg[i]);
        for (std::size_t i = 0; i < dh.size(); ++i) H[i] += pm * static_cast<unsigned long>(dh[i]);
        pm *= static_cast<unsigned long>(p);
    }
    G = z_mod(G, pm);
    H = z_mod(H, pm);
}

ZpPoly zp_product(const std::vector<ZpPoly>& fs, std::size_t lo, std::size_t hi, std::uint64_t p) {
    ZpPoly r{1};
    for (std::size_t i = lo; i < hi; ++i) r = zp_mul(r, fs[i], p);
    return r;
}

void hensel_all(const ZPoly& F, const std::vector<ZpPoly>& fs, std::size_t lo, std::size_t hi,
                std::uint64_t p, unsigned k, const mpz_class& pk, std::vector<ZPoly>& out) {
    if (hi - lo == 1) {
        out.push_back(z_mod(F, pk));
        return;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    ZPoly G, H;
    hensel_pair(F, zp_product(fs, lo, mid, p), zp_product(fs, mid, hi, p), p, k, G, H);
    hensel_all(G, fs, lo, mid, p, k, pk, out);
    hensel_all(H, fs, mid, hi, p, k, pk, out);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

ZPoly symmetric(const ZPoly& a, const mpz_class& m) {
    mpz_class half = m / 2;
    ZPoly r = a;
    for (auto& c : r) {
        c = mod_pos(c, m);
        if (c > half) c -= m;
    }
    z_trim(r);
    return r;
}

std::vector<ZpPoly> factor_mod_p(const ZPoly& F, std::uint64_t p) {
    std::mt19937_64 rng(0x5eed + p);
    std::vector<ZpPoly> out;
    for (auto& [g, d] : zp_ddf(to_zp(F, p), p)) zp_edf(g, d, p, rng, out);
    std::sort(out.begin(), out.end());
    return out;
}

// irreducible factors over Z of a monic squarefree F
std::vector<ZPoly> factor_monic_z(ZPoly F) {
    std::size_t n = F.size() - 1;
    if (n <= 1) return {F};
    // choose the prime among a few good ones that gives the fewest modular factors
    std::uint64_t best_p = 0;
    std::size_t best_count = 0;
    int good = 0;
    for (std::uint64_t p = 3; good < 6; p += 2) {
        if (!is_prime(p)) continue;
        ZpPoly fp = to_zp(F, p);
        if (zp_gcd(fp, zp_derivative(fp, p), p).size() != 1) continue;
        ++good;
        std::size_t count = 0;
        for (auto& [g, d] : zp_ddf(fp, p)) count += (g.size() - 1) / d;
        if (!best_p || count < best_count) {
            best_p = p;
            best_count = count;
        }
        if (count == 1) break;
    }
    if (best_count == 1) return {F};
    std::uint64_t p = best_p;
    std::vector<ZpPoly> modular = factor_mod_p(F, p);

    // Mignotte bound for factor coefficients: 2^n * ||F||_2
    mpz_class sq = 0;
    for (const auto& c : F) sq += c * c;
    mpz_class norm2 = sqrt(sq) + 1;
    mpz_class bound = norm2 << static_cast<mp_bitcnt_t>(n);
    mpz_class pk(static_cast<unsigned long>(p));
    unsigned k = 1;
    while (pk <= 2 * bound) {
        pk *= static_cast<unsigned long>(p);
        ++k;
    }
    std::vector<ZPoly> lifted;
    hensel_all(F, modular, 0, modular.size(), p, k, pk, lifted);

    // exhaustive recombination
    std::vector<ZPoly> result;
    std::size_t s = 1;
    while (2 * s <= lifted.size()) {
        bool found = false;
        std::vector<std::size_t> idx(s);
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            ZPoly prod{1};
            for (auto i : idx) prod = z_mod(z_mul(prod, lifted[i]), pk);
            prod = symmetric(prod, pk);
            ZPoly q;
            bool constant_ok = F[0] == 0 || (prod[0] != 0 && mpz_divisible_p(F[0].get_mpz_t(), prod[0].get_mpz_t()));
            if (constant_ok && z_divide_monic(F, prod, q)) {
                result.push_back(prod);
                F = q;
                for (std::size_t j = idx.size(); j-- > 0;) lifted.erase(lifted.begin() + static_cast<long>(idx[j]));
                found = true;
                break;
            }
            // next combination
            std::size_t m = lifted.size();
            std::size_t i = s;
            while (i > 0 && idx[i - 1] == m - s + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (F.size() > 1) result.push_back(F);
    return result;
}

mpz_class content(const ZPoly& a) {
    mpz_class g = 0;
    for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZPoly primitive_part(ZPoly a) {
    mpz_class g = content(a);
    if (g == 0) return a;
    if (a.back() < 0) g = -g;
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return a;
}

// irreducible factors over Z of a primitive squarefree f with positive leading coefficient
std::vector<ZPoly> factor_squarefree_z(const ZPoly& f) {
    std::size_t n = f.size() - 1;
    if (n <= 1) return {f};
    mpz_class lc = f.back();
    if (lc == 1) return factor_monic_z(f);
    // F(x) = lc^(n-1) f(x/lc) is monic
    ZPoly F(n + 1);
    mpz_class pw = 1;
    for (std::size_t i = n; i-- > 0;) {
        F[i] = f[i] * pw;
        pw *= lc;
    }
    F[n] = 1;
    std::vector<ZPoly> out;
    for (auto& G : factor_monic_z(F)) {
        ZPoly g(G.size());
        mpz_class q = 1;
        for (std::size_t i = 0; i < G.size(); ++i) {
            g[i] = G[i] * q;
            q *= lc;
        }
        out.push_back(primitive_part(g));
    }
    return out;
}

QPoly yun_rational(const QPoly& a, std::vector<std::pair<QPoly, unsigned>>& parts) {
    QPoly f = qp_monic(a);
    QPoly d = qp_derivative(f);
    QPoly g = qp_gcd(f, d);
    QPoly b = qp_divmod(f, g).first;
    QPoly c = qp_divmod(d, g).first;
    QPoly e = qp_sub(c, qp_derivative(b));
    unsigned i = 1;
    while (degree(b) > 0) {
        QPoly h = qp_gcd(b, e);
        if (degree(h) > 0) parts.emplace_back(h, i);
        b = qp_divmod(b, h).first;
        c = qp_divmod(e, h).first;
        e = qp_sub(c, qp_derivative(b));
        ++i;
    }
    return f;
}

bool qpoly_less(const QPoly& a, const QPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

}  // namespace

std::vector<std::pair<QPoly, unsigned>> factor_rational(const QPoly& input) {
    QPoly p = input;
    trim(p);
    if (p.empty()) throw DivisionByZero("factoring the zero polynomial");
    std::vector<std::pair<QPoly, unsigned>> out;
    if (degree(p) == 0) return out;
    std::vector<std::pair<QPoly, unsigned>> parts;
    yun_rational(p, parts);
    for (auto& [f, mult] : parts) {
        mpz_class l = 1;
        for (const auto& c : f) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
        ZPoly z(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) z[i] = f[i].get_num() * (l / f[i].get_den());
        for (auto& g : factor_squarefree_z(primitive_part(z))) {
            QPoly q(g.size());
            for (std::size_t i = 0; i < g.size(); ++i) q[i] = Rational(g[i]);
            out.emplace_back(qp_monic(q), mult);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return qpoly_less(a.first, b.first);
        return a.second < b.second;
    });
    return out;
}

Rational norm(const FieldElement& x) {
    if (x.is_zero()) return 0;
    const CycloField* f = x.field();
    if (!f || f->degree() == 1) return x.rational_part();
    std::size_t n = f->degree();
    // multiplication-by-x matrix, column j = x * z^j
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t j = 0; j < n; ++j) {
        FieldElement col = x * f->zeta_pow(static_cast<long long>(j));
        for (std::size_t i = 0; i < n; ++i) m[i][j] = col.coeff(i);
    }
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rational fct = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= fct * m[c][k];
        }
    }
    return det;
}

namespace {

// Newton interpolation through (i, values[i]), i = 0..N
QPoly interpolate(const std::vector<Rational>& values) {
    std::size_t n = values.size();
    std::vector<Rational> dd = values;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / static_cast<long>(j);
    QPoly result{dd[n - 1]};
    for (std::size_t k = n - 1; k-- > 0;) {
        // result = result * (x - k) + dd[k]
        QPoly shifted(result.size() + 1);
        for (std::size_t i = 0; i < result.size(); ++i) {
            shifted[i + 1] += result[i];
            shifted[i] -= result[i] * static_cast<long>(k);
        }
        shifted[0] += dd[k];
        result = shifted;
    }
    trim(result);
    return result;
}

unsigned roots_of_unity_order(const CycloField& k) { return k.order() % 2 ? 2 * k.order() : k.order(); }

// primitive root of unity of order roots_of_unity_order(k)
FieldElement full_root(const CycloField& k) {
    if (k.order() % 2 == 0) return k.zeta();
    return -k.zeta_pow((k.order() + 1) / 2);
}

bool sort_key_less(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        auto c = compare(a.coeffs()[i], b.coeffs()[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

// irreducible factors over K of monic squarefree g via norms
std::vector<UniPoly> trager(const UniPoly& g) {
    const CycloField& k = *g.field();
    std::size_t deg_n = static_cast<std::size_t>(g.degree()) * k.degree();
    for (long s_abs = 0;; ++s_abs) {
        for (long sign : {1L, -1L}) {
            if (s_abs == 0 && sign < 0) continue;
            long s = sign * s_abs;
            FieldElement shift_by = k.zeta() * k.from_rational(Rational(s));
            UniPoly gs = g.shift(-shift_by);
            std::vector<Rational> values;
            for (std::size_t t = 0; t <= deg_n; ++t)
                values.push_back(norm(gs.eval(k.from_rational(Rational(static_cast<long>(t))))));
            QPoly N = interpolate(values);
            if (degree(qp_gcd(N, qp_derivative(N))) > 0) continue;
            auto nf = factor_rational(N);
            if (nf.size() == 1) return {g};
            std::vector<UniPoly> out;
            for (auto& [q, m] : nf) {
                UniPoly h = gcd(gs, UniPoly::from_rational(k, q));
                if (h.degree() > 0) out.push_back(h.shift(shift_by).monic());
            }
            return out;
        }
    }
}

std::vector<UniPoly> factor_squarefree_k(const UniPoly& g) {
    const CycloField& k = *g.field();
    if (g.degree() <= 1) return {g.monic()};
    if (!g.is_rational()) return trager(g);
    std::vector<UniPoly> out;
    unsigned n2 = roots_of_unity_order(k);
    for (auto& [q, m] : factor_rational(g.to_rational())) {
        if (degree(q) == 1) {
            out.push_back(UniPoly::from_rational(k, q));
            continue;
        }
        bool split = false;
        for (unsigned d = 1; d <= n2 && !split; ++d) {
            if (n2 % d || euler_phi(d) != static_cast<unsigned>(degree(q))) continue;
            if (cyclotomic_polynomial(d) != q) continue;
            FieldElement w = full_root(k).pow(n2 / d);
            for (unsigned j = 1; j <= d; ++j)
                if (std::gcd(j, d) == 1) out.push_back(UniPoly::linear(w.pow(j)));
            split = true;
        }
        if (!split) {
            auto parts = trager(UniPoly::from_rational(k, q));
            out.insert(out.end(), parts.begin(), parts.end());
        }
    }
    return out;
}

}  // namespace

std::vector<std::pair<UniPoly, unsigned>> factor_unipoly(const UniPoly& p) {
    if (p.is_zero()) throw DivisionByZero("factoring the zero polynomial");
    std::vector<std::pair<UniPoly, unsigned>> out;
    if (p.degree() == 0) return out;
    const CycloField& k = *p.field();
    if (k.degree() == 1) {
        for (auto& [q, m] : factor_rational(p.to_rational())) out.emplace_back(UniPoly::from_rational(k, q), m);
        return out;
    }
    for (auto& [f, m] : squarefree_decomposition(p))
        for (auto& h : factor_squarefree_k(f)) out.emplace_back(h, m);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (sort_key_less(a.first, b.first)) return true;
        if (sort_key_less(b.first, a.first)) return false;
        return a.second < b.second;
    });
    return out;
}

std::vector<FieldElement> roots_in_field(const UniPoly& p) {
    std::vector<FieldElement> roots;
    for (auto& [f, m] : factor_unipoly(p))
        if (f.degree() == 1)
            for (unsigned i = 0; i < m; ++i) roots.push_back(-f.coeff(0));
    return roots;
}

}  // namespace hopf
