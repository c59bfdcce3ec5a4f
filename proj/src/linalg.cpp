#include "hopf/linalg.hpp"

#include <algorithm>

namespace hopf {

Vector zero_vector(const CycloField& f, std::size_t n) { return Vector(n, f.zero()); }

Vector unit_vector(const CycloField& f, std::size_t n, std::size_t i) {
    Vector v = zero_vector(f, n);
    v.at(i) = f.one();
    return v;
}

bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const FieldElement& x) { return x.is_zero(); });
}

Vector add(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw ShapeMismatch("vector lengths differ");
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vector sub(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw ShapeMismatch("vector lengths differ");
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vector scale(const Vector& a, const FieldElement& c) {
    Vector r = a;
    for (auto& x : r) x *= c;
    return r;
}

void axpy(Vector& y, const FieldElement& c, const Vector& x) {
    if (y.size() != x.size()) throw ShapeMismatch("vector lengths differ");
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (!x[i].is_zero()) y[i] += c * x[i];
}

FieldElement dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw ShapeMismatch("vector lengths differ");
    FieldElement r;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) r += a[i] * b[i];
    return r;
}

Vector embed(const Vector& v, const CycloField& target) {
    Vector r;
    r.reserve(v.size());
    for (const auto& x : v) r.push_back(embed(x, target));
    return r;
}

Matrix::Matrix(const CycloField& field, std::size_t rows, std::size_t cols)
    : field_(&field), rows_(rows), cols_(cols), e_(rows * cols, field.zero()) {}

Matrix Matrix::identity(const CycloField& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
}

Matrix Matrix::from_rows(const CycloField& field, const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw ShapeMismatch("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(const CycloField& field, const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(field, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
    return m;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(e_.begin() + static_cast<long>(r * cols_), e_.begin() + static_cast<long>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
    if (v.size() != rows_) throw ShapeMismatch("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw ShapeMismatch("matrix-vector shape mismatch");
    Vector out = zero_vector(*field_, rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c].is_zero()) continue;
        for (std::size_t r = 0; r < rows_; ++r)
            if (!at(r, c).is_zero()) out[r] += at(r, c) * v[c];
    }
    return out;
}

bool Matrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const FieldElement& x) { return x.is_zero(); });
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (r == c ? !at(r, c).is_one() : !at(r, c).is_zero()) return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw ShapeMismatch("matrix product shape mismatch");
    Matrix out(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const FieldElement& x = a.at(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b.at(k, j).is_zero()) out.at(i, j) += x * b.at(k, j);
        }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("matrix sum shape mismatch");
    Matrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) += b.at(r, c);
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("matrix difference shape mismatch");
    Matrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) -= b.at(r, c);
    return out;
}

Matrix scale(const Matrix& a, const FieldElement& c) {
    Matrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) out.at(r, k) *= c;
    return out;
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.field(), m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) t.at(c, r) = m.at(r, c);
    return t;
}

FieldElement trace(const Matrix& m) {
    if (m.rows() != m.cols()) throw ShapeMismatch("trace of a non-square matrix");
    FieldElement t = m.field().zero();
    for (std::size_t i = 0; i < m.rows(); ++i) t += m.at(i, i);
    return t;
}

Matrix pow(const Matrix& m, unsigned k) {
    if (m.rows() != m.cols()) throw ShapeMismatch("power of a non-square matrix");
    Matrix result = Matrix::identity(m.field(), m.rows());
    Matrix base = m;
    while (k) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (!b.at(k, l).is_zero()) out.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return out;
}

Matrix embed(const Matrix& m, const CycloField& target) {
    Matrix out(target, m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = embed(m.at(r, c), target);
    return out;
}

RrefResult rref(const Matrix& m) {
    RrefResult res{m, 0, {}};
    Matrix& a = res.reduced;
    std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a.at(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t k = 0; k < cols; ++k) std::swap(a.at(piv, k), a.at(r, k));
        FieldElement inv = a.at(r, c).inverse();
        for (std::size_t k = c; k < cols; ++k)
            if (!a.at(r, k).is_zero()) a.at(r, k) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a.at(i, c).is_zero()) continue;
            FieldElement f = a.at(i, c);
            for (std::size_t k = c; k < cols; ++k)
                if (!a.at(r, k).is_zero()) a.at(i, k) -= f * a.at(r, k);
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<Vector> kernel(const Matrix& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v = zero_vector(m.field(), m.cols());
        v[free] = m.field().one();
        for (std::size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = -rr.reduced.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

FieldElement det(const Matrix& m) {
    if (m.rows() != m.cols()) throw ShapeMismatch("determinant of a non-square matrix");
    Matrix a = m;
    std::size_t n = a.rows();
    FieldElement d = m.field().one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a.at(piv, c).is_zero()) ++piv;
        if (piv == n) return m.field().zero();
        if (piv != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(a.at(piv, k), a.at(c, k));
            d = -d;
        }
        d *= a.at(c, c);
        FieldElement inv = a.at(c, c).inverse();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a.at(r, c).is_zero()) continue;
            FieldElement f = a.at(r, c) * inv;
            for (std::size_t k = c; k < n; ++k)
                if (!a.at(c, k).is_zero()) a.at(r, k) -= f * a.at(c, k);
        }
    }
    return d;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw ShapeMismatch("inverse of a non-square matrix");
    std::size_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = m.field().one();
    }
    RrefResult rr = rref(aug);
    if (rr.rank < n || rr.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(m.field(), n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = rr.reduced.at(r, n + c);
    return inv;
}

std::optional<Solution> solve(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw ShapeMismatch("right-hand side length mismatch");
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    RrefResult rr = rref(aug);
    if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return std::nullopt;
    Solution s;
    s.particular = zero_vector(m.field(), m.cols());
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) s.particular[rr.pivots[i]] = rr.reduced.at(i, m.cols());
    s.kernel = kernel(m);
    return s;
}

Vector SubspaceBuilder::reduce(const Vector& v) const {
    if (v.size() != n_) throw ShapeMismatch("vector length does not match subspace");
    Vector r = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const FieldElement c = r[pivots_[i]];
        if (!c.is_zero()) axpy(r, -c, basis_[i]);
    }
    return r;
}

bool SubspaceBuilder::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool SubspaceBuilder::add(const Vector& v) {
    Vector r = reduce(v);
    std::size_t p = 0;
    while (p < n_ && r[p].is_zero()) ++p;
    if (p == n_) return false;
    r = scale(r, r[p].inverse());
    // keep the basis fully reduced
    for (auto& b : basis_)
        if (!b[p].is_zero()) axpy(b, -b[p], r);
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    basis_.insert(basis_.begin() + pos, std::move(r));
    return true;
}

std::vector<FieldElement> SubspaceBuilder::coordinates(const Vector& v) const {
    std::vector<FieldElement> c;
    for (std::size_t i = 0; i < basis_.size(); ++i) c.push_back(v[pivots_[i]]);
    return c;
}

Tensor3::Tensor3(const CycloField& field, std::size_t d1, std::size_t d2, std::size_t d3)
    : field_(&field), d1_(d1), d2_(d2), d3_(d3), slots_(d1 * d2) {}

void Tensor3::check(std::size_t i, std::size_t j, std::size_t k) const {
    if (i >= d1_ || j >= d2_ || k >= d3_) throw ShapeMismatch("tensor index out of range");
}

FieldElement Tensor3::get(std::size_t i, std::size_t j, std::size_t k) const {
    check(i, j, k);
    const Slot& s = slots_[i * d2_ + j];
    auto it = std::lower_bound(s.begin(), s.end(), k, [](const auto& e, std::size_t key) { return e.first < key; });
    if (it != s.end() && it->first == k) return it->second;
    return field_->zero();
}

void Tensor3::set(std::size_t i, std::size_t j, std::size_t k, const FieldElement& v) {
    check(i, j, k);
    Slot& s = slots_[i * d2_ + j];
    auto it = std::lower_bound(s.begin(), s.end(), k, [](const auto& e, std::size_t key) { return e.first < key; });
    bool present = it != s.end() && it->first == k;
    if (v.is_zero()) {
        if (present) s.erase(it);
    } else if (present) {
        it->second = v;
    } else {
        s.insert(it, {k, v});
    }
}

void Tensor3::add(std::size_t i, std::size_t j, std::size_t k, const FieldElement& v) {
    if (v.is_zero()) return;
    set(i, j, k, get(i, j, k) + v);
}

Vector Tensor3::fiber(std::size_t i, std::size_t j) const {
    check(i, j, 0);
    Vector v = zero_vector(*field_, d3_);
    for (const auto& [k, x] : slot(i, j)) v[k] = x;
    return v;
}

void Tensor3::set_fiber(std::size_t i, std::size_t j, const Vector& v) {
    if (v.size() != d3_) throw ShapeMismatch("fiber length mismatch");
    check(i, j, 0);
    Slot& s = slots_[i * d2_ + j];
    s.clear();
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) s.emplace_back(k, v[k]);
}

std::size_t Tensor3::nnz() const {
    std::size_t n = 0;
    for (const auto& s : slots_) n += s.size();
    return n;
}

std::vector<std::tuple<std::size_t, std::size_t, std::size_t, FieldElement>> Tensor3::entries() const {
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, FieldElement>> out;
    for (std::size_t i = 0; i < d1_; ++i)
        for (std::size_t j = 0; j < d2_; ++j)
            for (const auto& [k, v] : slot(i, j)) out.emplace_back(i, j, k, v);
    return out;
}

Tensor3 embed(const Tensor3& t, const CycloField& target) {
    auto [d1, d2, d3] = t.dims();
    Tensor3 out(target, d1, d2, d3);
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j = 0; j < d2; ++j)
            for (const auto& [k, v] : t.slot(i, j)) out.set(i, j, k, embed(v, target));
    return out;
}

Matrix contract(const Tensor3& t, ContractMode mode, const Vector& v) {
    auto [d1, d2, d3] = t.dims();
    switch (mode) {
        case ContractMode::left_mult: {
            if (v.size() != d1) throw ShapeMismatch("contraction vector length mismatch");
            Matrix m(t.field(), d3, d2);
            for (std::size_t i = 0; i < d1; ++i) {
                if (v[i].is_zero()) continue;
                for (std::size_t j = 0; j < d2; ++j)
                    for (const auto& [k, x] : t.slot(i, j)) m.at(k, j) += v[i] * x;
            }
            return m;
        }
        case ContractMode::right_mult:
        case ContractMode::comult_left: {
            if (v.size() != d2) throw ShapeMismatch("contraction vector length mismatch");
            Matrix m(t.field(), d3, d1);
            for (std::size_t i = 0; i < d1; ++i)
                for (std::size_t j = 0; j < d2; ++j) {
                    if (v[j].is_zero()) continue;
                    for (const auto& [k, x] : t.slot(i, j)) m.at(k, i) += v[j] * x;
                }
            return m;
        }
        case ContractMode::comult_right: {
            if (v.size() != d3) throw ShapeMismatch("contraction vector length mismatch");
            Matrix m(t.field(), d2, d1);
            for (std::size_t i = 0; i < d1; ++i)
                for (std::size_t j = 0; j < d2; ++j)
                    for (const auto& [k, x] : t.slot(i, j))
                        if (!v[k].is_zero()) m.at(j, i) += v[k] * x;
            return m;
        }
    }
    throw ShapeMismatch("unknown contraction mode");
}

Vector tensor_product_apply(const Tensor3& t, const Vector& x, const Vector& y) {
    auto [d1, d2, d3] = t.dims();
    if (x.size() != d1 || y.size() != d2) throw ShapeMismatch("product operand length mismatch");
    Vector out = zero_vector(t.field(), d3);
    for (std::size_t i = 0; i < d1; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < d2; ++j) {
            if (y[j].is_zero()) continue;
            const auto& s = t.slot(i, j);
            if (s.empty()) continue;
            FieldElement c = x[i] * y[j];
            for (const auto& [k, v] : s) out[k] += c * v;
        }
    }
    return out;
}

}  // namespace hopf

namespace hopf {

std::vector<Vector> joint_kernel(const CycloField& f, std::size_t n, std::size_t count,
                                 const std::function<Matrix(std::size_t)>& block) {
    Matrix basis = Matrix::identity(f, n);
    for (std::size_t b = 0; b < count && basis.cols() > 0; ++b) {
        Matrix img = block(b) * basis;
        if (img.is_zero()) continue;
        std::vector<Vector> k = kernel(img);
        if (k.size() == basis.cols()) continue;
        Matrix sub = Matrix::from_columns(f, k, basis.cols());
        basis = basis * sub;
    }
    std::vector<Vector> out;
    for (std::size_t c = 0; c < basis.cols(); ++c) out.push_back(basis.column(c));
    return out;
}

}  // namespace hopf
