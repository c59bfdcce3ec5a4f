#pragma once

// Dense exact matrices over a CycloField and sparse 3-tensors of structure constants.

#include <array>
#include <functional>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "hopf/cyclofield.hpp"

namespace hopf {

using Vector = std::vector<FieldElement>;

Vector zero_vector(const CycloField& f, std::size_t n);
Vector unit_vector(const CycloField& f, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Vector& a, const FieldElement& c);
/// y += c * x
void axpy(Vector& y, const FieldElement& c, const Vector& x);
FieldElement dot(const Vector& a, const Vector& b);
/// Enlarge every entry into the target field.
Vector embed(const Vector& v, const CycloField& target);

class Matrix {
   public:
    Matrix() = default;
    Matrix(const CycloField& field, std::size_t rows, std::size_t cols);
    static Matrix identity(const CycloField& field, std::size_t n);
    static Matrix from_rows(const CycloField& field, const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(const CycloField& field, const std::vector<Vector>& cols, std::size_t rows);

    const CycloField& field() const { return *field_; }
    const CycloField* field_ptr() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    FieldElement& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const FieldElement& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    void set_column(std::size_t c, const Vector& v);
    const std::vector<FieldElement>& entries() const noexcept { return e_; }

    Vector apply(const Vector& v) const;
    bool is_zero() const;
    bool is_identity() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

   private:
    const CycloField* field_ = nullptr;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<FieldElement> e_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, const FieldElement& c);
Matrix transpose(const Matrix& m);
FieldElement trace(const Matrix& m);
Matrix pow(const Matrix& m, unsigned k);
/// Kronecker product; basis of the result is (i, j) -> i * b.dim + j.
Matrix kron(const Matrix& a, const Matrix& b);
Matrix embed(const Matrix& m, const CycloField& target);

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of the right null space.
std::vector<Vector> kernel(const Matrix& m);
FieldElement det(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

struct Solution {
    Vector particular;
    std::vector<Vector> kernel;
};
/// Solution set of m x = b, or nullopt when b is not in the column space.
std::optional<Solution> solve(const Matrix& m, const Vector& b);

/// Common kernel of count blocks, each a matrix with n columns, intersected one block at a time.
std::vector<Vector> joint_kernel(const CycloField& f, std::size_t n, std::size_t count,
                                 const std::function<Matrix(std::size_t)>& block);

/// Incrementally built subspace of K^n with a fully reduced echelon basis.
class SubspaceBuilder {
   public:
    SubspaceBuilder(const CycloField& field, std::size_t n) : field_(&field), n_(n) {}
    /// Adds v; returns false if v was already in the span.
    bool add(const Vector& v);
    bool contains(const Vector& v) const;
    /// v minus its projection along the pivot coordinates.
    Vector reduce(const Vector& v) const;
    /// Coordinates of v (which must lie in the span) in terms of echelon_basis().
    std::vector<FieldElement> coordinates(const Vector& v) const;
    std::size_t dim() const noexcept { return basis_.size(); }
    std::size_t ambient() const noexcept { return n_; }
    const std::vector<Vector>& echelon_basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

   private:
    const CycloField* field_;
    std::size_t n_;
    std::vector<Vector> basis_;
    std::vector<std::size_t> pivots_;
};

/// Sparse T[i][j][k]. For a multiplication tensor T[i][j][k] is the coefficient of b_k in b_i b_j;
/// for a comultiplication tensor it is the coefficient of b_j (x) b_k in Delta(b_i).
class Tensor3 {
   public:
    using Slot = std::vector<std::pair<std::size_t, FieldElement>>;

    Tensor3() = default;
    Tensor3(const CycloField& field, std::size_t d1, std::size_t d2, std::size_t d3);

    const CycloField& field() const { return *field_; }
    const CycloField* field_ptr() const noexcept { return field_; }
    std::array<std::size_t, 3> dims() const noexcept { return {d1_, d2_, d3_}; }

    FieldElement get(std::size_t i, std::size_t j, std::size_t k) const;
    void set(std::size_t i, std::size_t j, std::size_t k, const FieldElement& v);
    void add(std::size_t i, std::size_t j, std::size_t k, const FieldElement& v);
    /// Nonzero (k, value) pairs for fixed (i, j), sorted by k.
    const Slot& slot(std::size_t i, std::size_t j) const { return slots_[i * d2_ + j]; }
    /// Vector over the third index for fixed (i, j).
    Vector fiber(std::size_t i, std::size_t j) const;
    void set_fiber(std::size_t i, std::size_t j, const Vector& v);
    std::size_t nnz() const;
    /// All nonzero entries in (i, j, k) order.
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, FieldElement>> entries() const;

    friend bool operator==(const Tensor3& a, const Tensor3& b) {
        return a.d1_ == b.d1_ && a.d2_ == b.d2_ && a.d3_ == b.d3_ && a.slots_ == b.slots_;
    }

   private:
    void check(std::size_t i, std::size_t j, std::size_t k) const;

    const CycloField* field_ = nullptr;
    std::size_t d1_ = 0, d2_ = 0, d3_ = 0;
    std::vector<Slot> slots_;
};

Tensor3 embed(const Tensor3& t, const CycloField& target);

enum class ContractMode {
    left_mult,     // M[k][j] = sum_i v_i T[i][j][k]   (x -> v x)
    right_mult,    // M[k][i] = sum_j v_j T[i][j][k]   (x -> x v)
    comult_left,   // same contraction as right_mult; on a comultiplication x -> v(x_1) x_2
    comult_right,  // M[j][i] = sum_k v_k T[i][j][k]; on a comultiplication x -> x_1 v(x_2)
};

Matrix contract(const Tensor3& t, ContractMode mode, const Vector& v);

/// Product of two elements through a multiplication tensor: (x y)_k = sum x_i y_j T[i][j][k].
Vector tensor_product_apply(const Tensor3& t, const Vector& x, const Vector& y);

}  // namespace hopf
