#include "invcert/matrix_io.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

namespace invcert {

namespace {

struct Token {
    std::string text;
    std::size_t line; // 1-based
    std::size_t col;  // 1-based
};

class Scanner {
public:
    Scanner(std::string_view text, std::string_view name) : text_(text), name_(name) {}

    std::optional<Token> next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            advance();
        if (pos_ >= text_.size()) return std::nullopt;
        Token t{{}, line_, col_};
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            t.text += text_[pos_];
            advance();
        }
        return t;
    }

    Token expect(const char* what) {
        auto t = next();
        if (!t)
            fail(Errc::ParseError, std::string(name_) + ":" + std::to_string(line_) + ":" +
                                       std::to_string(col_) + ": expected " + what +
                                       ", got end of input");
        return *t;
    }

    [[noreturn]] void bad(const Token& t, const std::string& what) {
        fail(Errc::ParseError, std::string(name_) + ":" + std::to_string(t.line) + ":" +
                                   std::to_string(t.col) + ": " + what + " (got '" + t.text + "')");
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::string_view name_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

std::size_t parse_count(Scanner& sc, const Token& t) {
    if (t.text.empty()) sc.bad(t, "expected a nonnegative integer");
    std::size_t value = 0;
    for (char c : t.text) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            sc.bad(t, "expected a nonnegative integer");
        value = value * 10 + static_cast<std::size_t>(c - '0');
    }
    return value;
}

} // namespace

Matrix parse_matrix_text(std::string_view text, std::string_view name) {
    Scanner sc(text, name);

    Token t = sc.expect("'field'");
    if (t.text != "field") sc.bad(t, "expected 'field'");

    t = sc.expect("field kind ('gf' or 'rational')");
    FieldSpec spec = FieldSpec::rationals();
    if (t.text == "gf") {
        Token tp = sc.expect("prime modulus");
        std::size_t p = parse_count(sc, tp);
        try {
            spec = FieldSpec::gf(p);
        } catch (const Error& e) {
            sc.bad(tp, e.what());
        }
    } else if (t.text != "rational") {
        sc.bad(t, "expected 'gf' or 'rational'");
    }

    t = sc.expect("'rows'");
    if (t.text != "rows") sc.bad(t, "expected 'rows'");
    std::size_t rows = parse_count(sc, sc.expect("row count"));
    t = sc.expect("'cols'");
    if (t.text != "cols") sc.bad(t, "expected 'cols'");
    Token tc = sc.expect("column count");
    std::size_t cols = parse_count(sc, tc);
    if (cols != 0 && rows > (std::size_t{1} << 26) / cols)
        sc.bad(tc, "matrix dimensions too large");

    std::vector<FieldElement> entries;
    entries.reserve(rows * cols);
    for (std::size_t k = 0; k < rows * cols; ++k) {
        Token te = sc.expect("entry literal");
        try {
            entries.push_back(spec.parse_literal(te.text));
        } catch (const Error& e) {
            sc.bad(te, e.what());
        }
    }

    if (auto extra = sc.next())
        sc.bad(*extra, "unexpected trailing token");

    return Matrix(spec, rows, cols, std::move(entries));
}

Matrix read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        fail(Errc::ParseError, path.string() + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix_text(buf.str(), path.string());
}

std::string matrix_to_text(const Matrix& m) {
    const FieldSpec& spec = m.spec();
    std::string out;
    if (spec.kind() == FieldKind::PrimeField)
        out = "field gf " + std::to_string(spec.modulus()) + "\n";
    else
        out = "field rational\n";
    out += "rows " + std::to_string(m.rows()) + " cols " + std::to_string(m.cols()) + "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += spec.format(m.at(i, j));
        }
        out += '\n';
    }
    return out;
}

void write_matrix_file(const Matrix& m, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        fail(Errc::ParseError, path.string() + ": cannot open file for writing");
    out << matrix_to_text(m);
    if (!out)
        fail(Errc::ParseError, path.string() + ": write failed");
}

} // namespace invcert
