#include "invcert/certify.hpp"

#include <algorithm>

namespace invcert {

namespace {

void require_compatible_pair(const Matrix& a, const Matrix& b) {
    if (a.spec() != b.spec())
        fail(Errc::FieldMismatch, "matrices are over different fields");
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        fail(Errc::DimensionMismatch, "expected two square matrices of equal size");
}

struct Rref {
    Matrix mat;
    std::vector<std::size_t> pivot_cols;
};

// Full Gauss-Jordan, pivoting only over the first `pivot_limit` columns.
Rref row_reduce(const Matrix& a, std::size_t pivot_limit) {
    const FieldSpec& spec = a.spec();
    MatrixBuilder b(a);
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < pivot_limit && row < b.rows(); ++col) {
        std::size_t pivot_row = row;
        while (pivot_row < b.rows() && b.at(pivot_row, col).is_zero()) ++pivot_row;
        if (pivot_row == b.rows()) continue;
        if (pivot_row != row) b.swap_rows(pivot_row, row);
        if (!b.at(row, col).is_one()) b.scale_row(row, spec.inv(b.at(row, col)));
        for (std::size_t r = 0; r < b.rows(); ++r) {
            if (r == row || b.at(r, col).is_zero()) continue;
            b.add_row_multiple(r, row, spec.neg(b.at(r, col)));
        }
        pivots.push_back(col);
        ++row;
    }
    return Rref{b.build(), std::move(pivots)};
}

// Kernel basis from a reduced form: one vector per free column, with a 1
// in the free coordinate and the negated pivot-row entries above it.
std::vector<Vector> kernel_basis(const Rref& r, std::size_t cols) {
    const FieldSpec& spec = r.mat.spec();
    std::vector<Vector> basis;
    std::size_t next_pivot = 0;
    for (std::size_t col = 0; col < cols; ++col) {
        if (next_pivot < r.pivot_cols.size() && r.pivot_cols[next_pivot] == col) {
            ++next_pivot;
            continue;
        }
        std::vector<FieldElement> x(cols, spec.zero());
        x[col] = spec.one();
        for (std::size_t k = 0; k < r.pivot_cols.size(); ++k)
            x[r.pivot_cols[k]] = spec.neg(r.mat.at(k, col));
        basis.emplace_back(spec, std::move(x));
    }
    return basis;
}

Matrix apply_inverse_ops_right(const Matrix& b, const std::vector<ElementaryOp>& ops) {
    const FieldSpec& spec = b.spec();
    Matrix cur = b;
    for (const auto& op : ops)
        cur = mat_mul(cur, elem_to_matrix(elem_inverse(spec, op), spec, b.rows()));
    return cur;
}

[[noreturn]] void not_left_inverse(const FieldSpec& spec, const Matrix& ab) {
    for (std::size_t i = 0; i < ab.rows(); ++i)
        for (std::size_t j = 0; j < ab.cols(); ++j) {
            const FieldElement& x = ab.at(i, j);
            bool ok = (i == j) ? x.is_one() : x.is_zero();
            if (!ok)
                fail(Errc::NotLeftInverse,
                     "A*B differs from the identity first at entry (" + std::to_string(i + 1) +
                         "," + std::to_string(j + 1) + "): got " + spec.format(x) + ", expected " +
                         (i == j ? "1" : "0"));
        }
    fail(Errc::InternalContradiction, "A*B is the identity after all");
}

} // namespace

ReductionResult reduce_first_column(const Matrix& a) {
    if (!a.is_square())
        fail(Errc::DimensionMismatch, "reduce_first_column: matrix must be square");
    const std::size_t n = a.rows();
    if (n == 0)
        fail(Errc::DimensionMismatch, "reduce_first_column: matrix must have size >= 1");
    const FieldSpec& spec = a.spec();

    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (!a.at(i, 0).is_zero()) {
            pivot = i;
            break;
        }
    }
    if (pivot == n)
        fail(Errc::ZeroFirstColumn, "first column is identically zero");

    std::vector<ElementaryOp> ops;
    Matrix cur = a;
    if (pivot != 0) {
        ops.push_back(ElementaryOp::swap(1, pivot + 1));
        cur = elem_apply_left(ops.back(), cur);
    }
    if (!cur.at(0, 0).is_one()) {
        ops.push_back(ElementaryOp::scale(1, spec.inv(cur.at(0, 0))));
        cur = elem_apply_left(ops.back(), cur);
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (cur.at(i, 0).is_zero()) continue;
        ops.push_back(ElementaryOp::add_multiple(i + 1, 1, spec.neg(cur.at(i, 0))));
        cur = elem_apply_left(ops.back(), cur);
    }
    return ReductionResult{std::move(ops), std::move(cur)};
}

std::vector<Vector> solve_homogeneous(const Matrix& a) {
    return kernel_basis(row_reduce(a, a.cols()), a.cols());
}

std::size_t rank(const Matrix& a) {
    return row_reduce(a, a.cols()).pivot_cols.size();
}

std::variant<Matrix, SingularReport> left_inverse(const Matrix& a) {
    if (!a.is_square())
        fail(Errc::DimensionMismatch, "left_inverse: matrix must be square");
    const std::size_t n = a.rows();
    const FieldSpec& spec = a.spec();
    if (n == 0) return Matrix::identity(spec, 0);

    // Reduce [A | I]; the left block becomes rref(A) and, at full rank,
    // the right block is the inverse.
    MatrixBuilder aug(spec, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = spec.one();
    }
    Rref r = row_reduce(aug.build(), n);

    if (r.pivot_cols.size() < n) {
        MatrixBuilder left(spec, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) left.at(i, j) = r.mat.at(i, j);
        auto basis = kernel_basis(Rref{left.build(), r.pivot_cols}, n);
        if (basis.empty())
            fail(Errc::InternalContradiction, "rank-deficient matrix with trivial kernel");
        Vector witness = basis.front();
        if (witness.is_zero() || !mat_apply(a, witness).is_zero())
            fail(Errc::InternalContradiction, "kernel witness does not annihilate");
        return SingularReport{std::move(witness)};
    }

    MatrixBuilder inv(spec, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
    Matrix b = inv.build();
    if (!mat_mul(a, b).is_identity() || !mat_mul(b, a).is_identity())
        fail(Errc::InternalContradiction, "computed inverse fails a round-trip check");
    return b;
}

Certificate prove_two_sided(const Matrix& a, const Matrix& b) {
    require_compatible_pair(a, b);
    const FieldSpec& spec = a.spec();
    const std::size_t n = a.rows();

    {
        Matrix ab = mat_mul(a, b);
        if (!ab.is_identity()) not_left_inverse(spec, ab);
    }

    Certificate cert{spec, n, {}, std::nullopt};
    Matrix cur_a = a;
    Matrix cur_b = b;
    for (std::size_t size = n; size >= 1; --size) {
        // Re-check the stage invariant instead of trusting the algebra;
        // any failure past this point is an implementation bug.
        if (size < n && !mat_mul(cur_a, cur_b).is_identity())
            fail(Errc::InternalContradiction,
                 "stage " + std::to_string(size) + ": A*B = I lost during descent");

        ReductionResult red = [&] {
            try {
                return reduce_first_column(cur_a);
            } catch (const Error& e) {
                if (e.code() == Errc::ZeroFirstColumn)
                    fail(Errc::InternalContradiction,
                         "stage " + std::to_string(size) +
                             ": zero first column although A*B = I holds");
                throw;
            }
        }();

        BlockParts a_parts = block_split(red.reduced);
        if (!a_parts.corner.is_one() || !a_parts.col_tail.is_zero())
            fail(Errc::InternalContradiction,
                 "stage " + std::to_string(size) + ": reduction left a dirty first column");

        Matrix b_star = apply_inverse_ops_right(cur_b, red.ops);
        BlockParts b_parts = block_split(b_star);

        if (!b_parts.col_tail.is_zero())
            fail(Errc::InternalContradiction,
                 "stage " + std::to_string(size) + ": h* is nonzero");
        if (!b_parts.corner.is_one())
            fail(Errc::InternalContradiction,
                 "stage " + std::to_string(size) + ": beta* is not 1");
        if (!vec_add(b_parts.row_tail, vec_times_mat(a_parts.row_tail, b_parts.tail)).is_zero())
            fail(Errc::InternalContradiction,
                 "stage " + std::to_string(size) + ": w*^t + v*^t B-tail is nonzero");

        cert.levels.push_back(CertLevel{size, std::move(red.ops), a_parts.row_tail,
                                        b_parts.corner, b_parts.row_tail, b_parts.col_tail,
                                        b_parts.tail});

        if (size == 1) {
            cert.base = std::make_pair(cur_a.at(0, 0), cur_b.at(0, 0));
            break;
        }
        cur_a = std::move(a_parts.tail);
        cur_b = std::move(b_parts.tail);
    }

    if (!mat_mul(b, a).is_identity())
        fail(Errc::InternalContradiction, "certificate complete but B*A != I");
    return cert;
}

bool verify_certificate(const Certificate& cert, const Matrix& a, const Matrix& b) {
    if (a.spec() != b.spec())
        fail(Errc::FieldMismatch, "matrices are over different fields");

    // Structural well-formedness of the certificate itself.
    if (cert.levels.size() != cert.n)
        fail(Errc::MalformedCertificate, "expected " + std::to_string(cert.n) + " levels, found " +
                                             std::to_string(cert.levels.size()));
    if (cert.base.has_value() != (cert.n >= 1))
        fail(Errc::MalformedCertificate, "base pair present iff n >= 1");
    for (std::size_t k = 0; k < cert.levels.size(); ++k) {
        const CertLevel& lvl = cert.levels[k];
        if (lvl.n != cert.n - k)
            fail(Errc::MalformedCertificate, "level size chain broken at level " +
                                                 std::to_string(k + 1));
        const std::size_t m = lvl.n - 1;
        if (lvl.v_star.dim() != m || lvl.w_star.dim() != m || lvl.h_star.dim() != m ||
            lvl.b_tail.rows() != m || lvl.b_tail.cols() != m)
            fail(Errc::MalformedCertificate,
                 "level " + std::to_string(k + 1) + ": block dimensions do not match size " +
                     std::to_string(lvl.n));
        if (lvl.v_star.spec() != cert.spec || lvl.w_star.spec() != cert.spec ||
            lvl.h_star.spec() != cert.spec || lvl.b_tail.spec() != cert.spec)
            fail(Errc::MalformedCertificate,
                 "level " + std::to_string(k + 1) + ": blocks over the wrong field");
        for (const auto& op : lvl.ops)
            if (op.max_index() > lvl.n)
                fail(Errc::MalformedCertificate,
                     "level " + std::to_string(k + 1) + ": op index exceeds stage size");
    }

    // From here on, any disagreement is a verdict, not an error.
    if (cert.spec != a.spec()) return false;
    if (!a.is_square() || !b.is_square() || a.rows() != cert.n || b.rows() != cert.n)
        return false;

    Matrix cur_a = a;
    Matrix cur_b = b;
    for (const CertLevel& lvl : cert.levels) {
        if (lvl.n == 1) {
            const auto& base = *cert.base;
            if (cur_a.at(0, 0) != base.first || cur_b.at(0, 0) != base.second) return false;
            if (!cert.spec.mul(base.first, base.second).is_one()) return false;
        }

        Matrix a_star = apply_ops_left(lvl.ops, cur_a);
        BlockParts a_parts = block_split(a_star);
        if (!a_parts.corner.is_one() || !a_parts.col_tail.is_zero()) return false;
        if (a_parts.row_tail != lvl.v_star) return false;

        Matrix b_star = apply_inverse_ops_right(cur_b, lvl.ops);
        BlockParts b_parts = block_split(b_star);
        if (b_parts.corner != lvl.beta_star || b_parts.row_tail != lvl.w_star ||
            b_parts.col_tail != lvl.h_star || b_parts.tail != lvl.b_tail)
            return false;

        if (!lvl.beta_star.is_one() || !lvl.h_star.is_zero()) return false;
        if (!vec_add(lvl.w_star, vec_times_mat(lvl.v_star, lvl.b_tail)).is_zero()) return false;

        cur_a = std::move(a_parts.tail);
        cur_b = std::move(b_parts.tail);
    }

    return mat_mul(b, a).is_identity();
}

} // namespace invcert
