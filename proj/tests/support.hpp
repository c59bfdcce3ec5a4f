#pragma once

// Shared helpers for the test binaries.

#include <random>

#include "hopf/constructors.hpp"

namespace testing {

using namespace hopf;

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20240611);
    return g;
}

inline Rational small_rational(int range = 5) {
    std::uniform_int_distribution<int> num(-range, range), den(1, range);
    return Rational(num(rng()), den(rng()));
}

inline FieldElement random_element(const CycloField& f, int range = 5) {
    std::vector<Rational> c;
    for (unsigned i = 0; i < f.degree(); ++i) c.push_back(small_rational(range));
    return FieldElement(f, c);
}

inline FieldElement q(const CycloField& f, long num, long den = 1) { return f.from_rational(Rational(num, den)); }

inline Vector vec(const CycloField& f, std::initializer_list<long> xs) {
    Vector v;
    for (long x : xs) v.push_back(f.from_rational(Rational(x)));
    return v;
}

/// Sum of c * b_i over (i, c) pairs.
inline Vector combo(const CycloField& f, std::size_t n, std::initializer_list<std::pair<std::size_t, long>> terms) {
    Vector v = zero_vector(f, n);
    for (auto [i, c] : terms) v[i] += f.from_rational(Rational(c));
    return v;
}

/// Delta(v) as a matrix, from the raw tensor.
inline Matrix raw_comult(const HopfAlgebra& h, const Vector& v) {
    Matrix m(h.field(), h.dim(), h.dim());
    for (std::size_t i = 0; i < h.dim(); ++i)
        if (!v[i].is_zero())
            for (std::size_t j = 0; j < h.dim(); ++j)
                for (std::size_t k = 0; k < h.dim(); ++k) m.at(j, k) += v[i] * h.comult.get(i, j, k);
    return m;
}

/// Outer product a (x) b as a matrix.
inline Matrix outer(const CycloField& f, const Vector& a, const Vector& b) {
    Matrix m(f, a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) m.at(i, j) = a[i] * b[j];
    return m;
}

}  // namespace testing
