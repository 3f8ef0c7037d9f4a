#pragma once

#include <cstddef>
#include <vector>

#include "invcert/field.hpp"

namespace invcert {

class Vector {
public:
    Vector(FieldSpec spec, std::vector<FieldElement> entries)
        : spec_(spec), entries_(std::move(entries)) {}

    static Vector zeros(const FieldSpec& spec, std::size_t dim);
    /// Standard basis vector with a 1 at `index` (0-based).
    static Vector unit(const FieldSpec& spec, std::size_t dim, std::size_t index);

    const FieldSpec& spec() const { return spec_; }
    std::size_t dim() const { return entries_.size(); }
    const FieldElement& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<FieldElement>& entries() const { return entries_; }
    bool is_zero() const;

    friend bool operator==(const Vector& a, const Vector& b) {
        return a.spec_ == b.spec_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const Vector& a, const Vector& b) { return !(a == b); }

private:
    FieldSpec spec_;
    std::vector<FieldElement> entries_;
};

/// Dense row-major matrix over one field. Immutable after construction;
/// use MatrixBuilder for in-place assembly.
class Matrix {
public:
    Matrix(FieldSpec spec, std::size_t rows, std::size_t cols, std::vector<FieldElement> entries);

    static Matrix zeros(const FieldSpec& spec, std::size_t rows, std::size_t cols);
    static Matrix identity(const FieldSpec& spec, std::size_t n);

    const FieldSpec& spec() const { return spec_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    /// 0-based access.
    const FieldElement& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    const std::vector<FieldElement>& entries() const { return entries_; }

    Vector row(std::size_t i) const;
    Vector col(std::size_t j) const;

    bool is_identity() const;
    bool is_zero() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.spec_ == b.spec_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
               a.entries_ == b.entries_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    FieldSpec spec_;
    std::size_t rows_, cols_;
    std::vector<FieldElement> entries_;
};

/// Mutable staging area for building matrices; the only mutation path in
/// the library. Row operations live here so that both the elementary
/// module and the reduction routines share one implementation.
class MatrixBuilder {
public:
    MatrixBuilder(FieldSpec spec, std::size_t rows, std::size_t cols);
    explicit MatrixBuilder(const Matrix& m);

    const FieldSpec& spec() const { return spec_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElement& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const FieldElement& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    // 0-based row operations, O(cols) each
    void swap_rows(std::size_t i, std::size_t j);
    void scale_row(std::size_t i, const FieldElement& c);
    /// row_i += c * row_j
    void add_row_multiple(std::size_t i, std::size_t j, const FieldElement& c);

    Matrix build() const { return Matrix(spec_, rows_, cols_, entries_); }

private:
    FieldSpec spec_;
    std::size_t rows_, cols_;
    std::vector<FieldElement> entries_;
};

/// 1 + (n-1) block decomposition of a square matrix:
///   [ corner   row_tail^t ]
///   [ col_tail tail       ]
struct BlockParts {
    FieldElement corner;
    Vector row_tail;
    Vector col_tail;
    Matrix tail;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Vector mat_apply(const Matrix& a, const Vector& x);
Matrix mat_add(const Matrix& a, const Matrix& b);

/// Splits a square matrix (n >= 1) into its block parts.
BlockParts block_split(const Matrix& a);
/// Inverse of block_split.
Matrix block_join(const BlockParts& parts);

FieldElement dot(const Vector& a, const Vector& b);
Vector vec_add(const Vector& a, const Vector& b);
Vector vec_scale(const FieldElement& c, const Vector& v);
/// Row vector times matrix: (v^t M)^t.
Vector vec_times_mat(const Vector& v, const Matrix& m);
/// u w^t as a dense u.dim x w.dim matrix.
Matrix outer_product(const Vector& u, const Vector& w);

} // namespace invcert
