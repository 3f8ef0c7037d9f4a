#include "invcert/elementary.hpp"

#include <sstream>

namespace invcert {

ElementaryOp ElementaryOp::swap(std::size_t i, std::size_t j) {
    if (i == j || i == 0 || j == 0)
        fail(Errc::InvalidArgument, "swap requires two distinct 1-based row indices");
    return ElementaryOp(Kind::Swap, i, j, FieldElement());
}

ElementaryOp ElementaryOp::scale(std::size_t i, FieldElement c) {
    if (i == 0)
        fail(Errc::InvalidArgument, "scale requires a 1-based row index");
    if (c.is_zero())
        fail(Errc::InvalidArgument, "scale factor must be nonzero");
    return ElementaryOp(Kind::Scale, i, 0, std::move(c));
}

ElementaryOp ElementaryOp::add_multiple(std::size_t i, std::size_t j, FieldElement c) {
    if (i == j || i == 0 || j == 0)
        fail(Errc::InvalidArgument, "addmul requires two distinct 1-based row indices");
    return ElementaryOp(Kind::AddMultiple, i, j, std::move(c));
}

std::size_t ElementaryOp::max_index() const {
    return kind_ == Kind::Scale ? i_ : std::max(i_, j_);
}

std::string ElementaryOp::to_string(const FieldSpec& spec) const {
    switch (kind_) {
    case Kind::Swap:
        return "swap " + std::to_string(i_) + " " + std::to_string(j_);
    case Kind::Scale:
        return "scale " + std::to_string(i_) + " " + spec.format(c_);
    case Kind::AddMultiple:
        return "addmul " + std::to_string(i_) + " " + std::to_string(j_) + " " + spec.format(c_);
    }
    fail(Errc::InternalContradiction, "unreachable op kind");
}

namespace {

std::size_t parse_index(const std::string& word, std::string_view whole) {
    std::size_t value = 0;
    if (word.empty())
        fail(Errc::ParseError, "bad op '" + std::string(whole) + "': missing row index");
    for (char c : word) {
        if (c < '0' || c > '9')
            fail(Errc::ParseError, "bad op '" + std::string(whole) + "': bad row index '" + word + "'");
        value = value * 10 + static_cast<std::size_t>(c - '0');
    }
    return value;
}

} // namespace

ElementaryOp ElementaryOp::parse(const FieldSpec& spec, std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string kind, w1, w2, w3, extra;
    in >> kind >> w1 >> w2;
    try {
        if (kind == "swap") {
            if (!in || (in >> extra, !extra.empty()))
                fail(Errc::ParseError, "bad op '" + std::string(text) + "'");
            return swap(parse_index(w1, text), parse_index(w2, text));
        }
        if (kind == "scale") {
            if (!in || (in >> extra, !extra.empty()))
                fail(Errc::ParseError, "bad op '" + std::string(text) + "'");
            return scale(parse_index(w1, text), spec.parse_literal(w2));
        }
        if (kind == "addmul") {
            in >> w3;
            if (!in || (in >> extra, !extra.empty()))
                fail(Errc::ParseError, "bad op '" + std::string(text) + "'");
            return add_multiple(parse_index(w1, text), parse_index(w2, text),
                                spec.parse_literal(w3));
        }
    } catch (const Error& e) {
        if (e.code() == Errc::ParseError) throw;
        fail(Errc::ParseError, "bad op '" + std::string(text) + "': " + e.what());
    }
    fail(Errc::ParseError, "bad op '" + std::string(text) + "': unknown kind '" + kind + "'");
}

Matrix elem_to_matrix(const ElementaryOp& op, const FieldSpec& spec, std::size_t n) {
    return elem_apply_left(op, Matrix::identity(spec, n));
}

ElementaryOp elem_inverse(const FieldSpec& spec, const ElementaryOp& op) {
    switch (op.kind()) {
    case ElementaryOp::Kind::Swap:
        return op; // involution
    case ElementaryOp::Kind::Scale:
        return ElementaryOp::scale(op.i(), spec.inv(op.scalar()));
    case ElementaryOp::Kind::AddMultiple:
        return ElementaryOp::add_multiple(op.i(), op.j(), spec.neg(op.scalar()));
    }
    fail(Errc::InternalContradiction, "unreachable op kind");
}

Matrix elem_apply_left(const ElementaryOp& op, const Matrix& a) {
    if (op.max_index() > a.rows())
        fail(Errc::IndexOutOfRange, "op row index " + std::to_string(op.max_index()) +
                                        " exceeds matrix with " + std::to_string(a.rows()) +
                                        " rows");
    MatrixBuilder b(a);
    switch (op.kind()) {
    case ElementaryOp::Kind::Swap:
        b.swap_rows(op.i() - 1, op.j() - 1);
        break;
    case ElementaryOp::Kind::Scale:
        b.scale_row(op.i() - 1, op.scalar());
        break;
    case ElementaryOp::Kind::AddMultiple:
        b.add_row_multiple(op.i() - 1, op.j() - 1, op.scalar());
        break;
    }
    return b.build();
}

Matrix apply_ops_left(const std::vector<ElementaryOp>& ops, const Matrix& a) {
    Matrix cur = a;
    for (const auto& op : ops) cur = elem_apply_left(op, cur);
    return cur;
}

} // namespace invcert
