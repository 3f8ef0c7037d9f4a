#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "invcert/matrix.hpp"

namespace invcert {

/// One of the three elementary row operations. Row indices are 1-based,
/// matching the serialized form (`swap i j`, `scale i c`, `addmul i j c`).
///   Swap        exchanges rows i and j            (i != j)
///   Scale       multiplies row i by c             (c != 0)
///   AddMultiple adds c * (row j) to row i         (i != j)
class ElementaryOp {
public:
    enum class Kind { Swap, Scale, AddMultiple };

    static ElementaryOp swap(std::size_t i, std::size_t j);
    static ElementaryOp scale(std::size_t i, FieldElement c);
    static ElementaryOp add_multiple(std::size_t i, std::size_t j, FieldElement c);

    Kind kind() const { return kind_; }
    std::size_t i() const { return i_; }
    std::size_t j() const { return j_; }
    const FieldElement& scalar() const { return c_; }

    /// Largest row index the op touches.
    std::size_t max_index() const;

    std::string to_string(const FieldSpec& spec) const;
    static ElementaryOp parse(const FieldSpec& spec, std::string_view text);

    friend bool operator==(const ElementaryOp& a, const ElementaryOp& b) {
        return a.kind_ == b.kind_ && a.i_ == b.i_ && a.j_ == b.j_ && a.c_ == b.c_;
    }
    friend bool operator!=(const ElementaryOp& a, const ElementaryOp& b) { return !(a == b); }

private:
    ElementaryOp(Kind kind, std::size_t i, std::size_t j, FieldElement c)
        : kind_(kind), i_(i), j_(j), c_(std::move(c)) {}

    Kind kind_;
    std::size_t i_, j_;
    FieldElement c_; // Scale / AddMultiple only
};

/// The op applied to I_n.
Matrix elem_to_matrix(const ElementaryOp& op, const FieldSpec& spec, std::size_t n);

/// The op undoing `op`; its matrix is the inverse of elem_to_matrix(op).
ElementaryOp elem_inverse(const FieldSpec& spec, const ElementaryOp& op);

/// Row-operates on a copy of `a` in O(cols); equals
/// mat_mul(elem_to_matrix(op, a.rows()), a) without forming the product.
Matrix elem_apply_left(const ElementaryOp& op, const Matrix& a);

/// Replays ops on `a` in sequence order (front of the list first).
Matrix apply_ops_left(const std::vector<ElementaryOp>& ops, const Matrix& a);

} // namespace invcert
