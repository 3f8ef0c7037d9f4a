#include "invcert/matrix.hpp"

namespace invcert {

namespace {

void require_same_spec(const FieldSpec& a, const FieldSpec& b, const char* what) {
    if (a != b)
        fail(Errc::FieldMismatch, std::string(what) + ": operands over different fields (" +
                                      a.name() + " vs " + b.name() + ")");
}

} // namespace

Vector Vector::zeros(const FieldSpec& spec, std::size_t dim) {
    return Vector(spec, std::vector<FieldElement>(dim, spec.zero()));
}

Vector Vector::unit(const FieldSpec& spec, std::size_t dim, std::size_t index) {
    if (index >= dim)
        fail(Errc::IndexOutOfRange, "unit vector index out of range");
    std::vector<FieldElement> e(dim, spec.zero());
    e[index] = spec.one();
    return Vector(spec, std::move(e));
}

bool Vector::is_zero() const {
    for (const auto& x : entries_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix::Matrix(FieldSpec spec, std::size_t rows, std::size_t cols, std::vector<FieldElement> entries)
    : spec_(spec), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        fail(Errc::DimensionMismatch, "entry count does not match rows*cols");
}

Matrix Matrix::zeros(const FieldSpec& spec, std::size_t rows, std::size_t cols) {
    return Matrix(spec, rows, cols, std::vector<FieldElement>(rows * cols, spec.zero()));
}

Matrix Matrix::identity(const FieldSpec& spec, std::size_t n) {
    MatrixBuilder b(spec, n, n);
    for (std::size_t i = 0; i < n; ++i) b.at(i, i) = spec.one();
    return b.build();
}

Vector Matrix::row(std::size_t i) const {
    std::vector<FieldElement> e(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    return Vector(spec_, std::move(e));
}

Vector Matrix::col(std::size_t j) const {
    std::vector<FieldElement> e;
    e.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) e.push_back(at(i, j));
    return Vector(spec_, std::move(e));
}

bool Matrix::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const FieldElement& x = at(i, j);
            if (i == j ? !x.is_one() : !x.is_zero()) return false;
        }
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& x : entries_)
        if (!x.is_zero()) return false;
    return true;
}

MatrixBuilder::MatrixBuilder(FieldSpec spec, std::size_t rows, std::size_t cols)
    : spec_(spec), rows_(rows), cols_(cols), entries_(rows * cols, spec.zero()) {}

MatrixBuilder::MatrixBuilder(const Matrix& m)
    : spec_(m.spec()), rows_(m.rows()), cols_(m.cols()), entries_(m.entries()) {}

void MatrixBuilder::swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void MatrixBuilder::scale_row(std::size_t i, const FieldElement& c) {
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) = spec_.mul(c, at(i, k));
}

void MatrixBuilder::add_row_multiple(std::size_t i, std::size_t j, const FieldElement& c) {
    for (std::size_t k = 0; k < cols_; ++k)
        at(i, k) = spec_.add(at(i, k), spec_.mul(c, at(j, k)));
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    require_same_spec(a.spec(), b.spec(), "mat_mul");
    if (a.cols() != b.rows())
        fail(Errc::DimensionMismatch, "mat_mul: " + std::to_string(a.rows()) + "x" +
                                          std::to_string(a.cols()) + " times " +
                                          std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    const FieldSpec& spec = a.spec();
    MatrixBuilder out(spec, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const FieldElement& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.at(i, j) = spec.add(out.at(i, j), spec.mul(aik, b.at(k, j)));
        }
    return out.build();
}

Vector mat_apply(const Matrix& a, const Vector& x) {
    require_same_spec(a.spec(), x.spec(), "mat_apply");
    if (a.cols() != x.dim())
        fail(Errc::DimensionMismatch, "mat_apply: matrix has " + std::to_string(a.cols()) +
                                          " cols, vector has dim " + std::to_string(x.dim()));
    const FieldSpec& spec = a.spec();
    std::vector<FieldElement> out;
    out.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        FieldElement s = spec.zero();
        for (std::size_t j = 0; j < a.cols(); ++j) s = spec.add(s, spec.mul(a.at(i, j), x[j]));
        out.push_back(s);
    }
    return Vector(spec, std::move(out));
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
    require_same_spec(a.spec(), b.spec(), "mat_add");
    if (a.rows() != b.rows() || a.cols() != b.cols())
        fail(Errc::DimensionMismatch, "mat_add: shape mismatch");
    const FieldSpec& spec = a.spec();
    std::vector<FieldElement> out;
    out.reserve(a.entries().size());
    for (std::size_t k = 0; k < a.entries().size(); ++k)
        out.push_back(spec.add(a.entries()[k], b.entries()[k]));
    return Matrix(spec, a.rows(), a.cols(), std::move(out));
}

BlockParts block_split(const Matrix& a) {
    if (!a.is_square())
        fail(Errc::DimensionMismatch, "block_split: matrix must be square");
    if (a.rows() == 0)
        fail(Errc::EmptyMatrix, "block_split: block form undefined for a 0x0 matrix");
    const std::size_t n = a.rows();
    const FieldSpec& spec = a.spec();

    std::vector<FieldElement> row_tail(a.entries().begin() + 1,
                                       a.entries().begin() + static_cast<std::ptrdiff_t>(n));
    std::vector<FieldElement> col_tail;
    col_tail.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) col_tail.push_back(a.at(i, 0));

    MatrixBuilder tail(spec, n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j) tail.at(i - 1, j - 1) = a.at(i, j);

    return BlockParts{a.at(0, 0), Vector(spec, std::move(row_tail)),
                      Vector(spec, std::move(col_tail)), tail.build()};
}

Matrix block_join(const BlockParts& parts) {
    const FieldSpec& spec = parts.tail.spec();
    require_same_spec(spec, parts.row_tail.spec(), "block_join");
    require_same_spec(spec, parts.col_tail.spec(), "block_join");
    const std::size_t m = parts.tail.rows();
    if (!parts.tail.is_square() || parts.row_tail.dim() != m || parts.col_tail.dim() != m)
        fail(Errc::DimensionMismatch, "block_join: inconsistent block dimensions");

    const std::size_t n = m + 1;
    MatrixBuilder b(spec, n, n);
    b.at(0, 0) = parts.corner;
    for (std::size_t j = 0; j < m; ++j) b.at(0, j + 1) = parts.row_tail[j];
    for (std::size_t i = 0; i < m; ++i) b.at(i + 1, 0) = parts.col_tail[i];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) b.at(i + 1, j + 1) = parts.tail.at(i, j);
    return b.build();
}

FieldElement dot(const Vector& a, const Vector& b) {
    require_same_spec(a.spec(), b.spec(), "dot");
    if (a.dim() != b.dim())
        fail(Errc::DimensionMismatch, "dot: dimension mismatch");
    const FieldSpec& spec = a.spec();
    FieldElement s = spec.zero();
    for (std::size_t i = 0; i < a.dim(); ++i) s = spec.add(s, spec.mul(a[i], b[i]));
    return s;
}

Vector vec_add(const Vector& a, const Vector& b) {
    require_same_spec(a.spec(), b.spec(), "vec_add");
    if (a.dim() != b.dim())
        fail(Errc::DimensionMismatch, "vec_add: dimension mismatch");
    const FieldSpec& spec = a.spec();
    std::vector<FieldElement> e;
    e.reserve(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) e.push_back(spec.add(a[i], b[i]));
    return Vector(spec, std::move(e));
}

Vector vec_scale(const FieldElement& c, const Vector& v) {
    const FieldSpec& spec = v.spec();
    std::vector<FieldElement> e;
    e.reserve(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) e.push_back(spec.mul(c, v[i]));
    return Vector(spec, std::move(e));
}

Vector vec_times_mat(const Vector& v, const Matrix& m) {
    require_same_spec(v.spec(), m.spec(), "vec_times_mat");
    if (v.dim() != m.rows())
        fail(Errc::DimensionMismatch, "vec_times_mat: dimension mismatch");
    const FieldSpec& spec = v.spec();
    std::vector<FieldElement> out(m.cols(), spec.zero());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[j] = spec.add(out[j], spec.mul(v[i], m.at(i, j)));
    }
    return Vector(spec, std::move(out));
}

Matrix outer_product(const Vector& u, const Vector& w) {
    require_same_spec(u.spec(), w.spec(), "outer_product");
    const FieldSpec& spec = u.spec();
    MatrixBuilder b(spec, u.dim(), w.dim());
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t j = 0; j < w.dim(); ++j) b.at(i, j) = spec.mul(u[i], w[j]);
    return b.build();
}

} // namespace invcert
