#include "invcert/field.hpp"

#include <cctype>

namespace invcert {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::NonPrimeModulus: return "NonPrimeModulus";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::EmptyMatrix: return "EmptyMatrix";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ZeroFirstColumn: return "ZeroFirstColumn";
    case Errc::NotLeftInverse: return "NotLeftInverse";
    case Errc::InternalContradiction: return "InternalContradiction";
    case Errc::MalformedCertificate: return "MalformedCertificate";
    case Errc::TooLarge: return "TooLarge";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
    }
    return "UnknownError";
}

namespace {

using u128 = unsigned __int128;

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    if (p % 3 == 0) return p == 3;
    for (std::uint64_t d = 5; d * d <= p; d += 6) {
        if (p % d == 0 || p % (d + 2) == 0) return false;
    }
    return true;
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((u128(a) + b) % p);
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + (p - b);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(u128(a) * b % p);
}

// Extended Euclid; a must be in [1, p).
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    __int128 t = 0, new_t = 1;
    __int128 r = p, new_r = a;
    while (new_r != 0) {
        __int128 q = r / new_r;
        __int128 tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p;
    return static_cast<std::uint64_t>(t);
}

BigRat make_canonical_rat(const BigInt& num, const BigInt& den) {
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

} // namespace

FieldSpec FieldSpec::gf(std::uint64_t p) {
    if (!is_prime(p))
        fail(Errc::NonPrimeModulus, "modulus " + std::to_string(p) + " is not a prime >= 2");
    return FieldSpec(FieldKind::PrimeField, p);
}

FieldSpec FieldSpec::rationals() { return FieldSpec(FieldKind::Rational, 0); }

std::uint64_t FieldSpec::modulus() const {
    if (kind_ != FieldKind::PrimeField)
        fail(Errc::InvalidArgument, "rationals have no modulus");
    return p_;
}

FieldElement FieldSpec::zero() const {
    return kind_ == FieldKind::PrimeField ? FieldElement::from_residue(0)
                                          : FieldElement::from_rational(BigRat(0));
}

FieldElement FieldSpec::one() const {
    return kind_ == FieldKind::PrimeField ? FieldElement::from_residue(1)
                                          : FieldElement::from_rational(BigRat(1));
}

FieldElement FieldSpec::from_integer(const BigInt& n) const {
    if (kind_ == FieldKind::PrimeField) {
        // floor division remainder is in [0, p) for any sign of n
        return FieldElement::from_residue(mpz_fdiv_ui(n.get_mpz_t(), p_));
    }
    return FieldElement::from_rational(BigRat(n));
}

FieldElement FieldSpec::from_fraction(const BigInt& num, const BigInt& den) const {
    if (den == 0)
        fail(Errc::ZeroDenominator, "fraction with denominator 0");
    if (kind_ == FieldKind::PrimeField)
        return mul(from_integer(num), inv(from_integer(den)));
    return FieldElement::from_rational(make_canonical_rat(num, den));
}

FieldElement FieldSpec::canonicalize(const FieldElement& x) const {
    if (kind_ == FieldKind::PrimeField)
        return FieldElement::from_residue(x.residue() % p_);
    return from_fraction(x.rational().get_num(), x.rational().get_den());
}

bool FieldSpec::is_canonical(const FieldElement& x) const {
    if (kind_ == FieldKind::PrimeField)
        return x.is_residue() && x.residue() < p_;
    if (x.is_residue()) return false;
    const BigRat& q = x.rational();
    if (q.get_den() <= 0) return false;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return g == 1;
}

FieldElement FieldSpec::add(const FieldElement& a, const FieldElement& b) const {
    if (kind_ == FieldKind::PrimeField)
        return FieldElement::from_residue(add_mod(a.residue(), b.residue(), p_));
    return FieldElement::from_rational(a.rational() + b.rational());
}

FieldElement FieldSpec::sub(const FieldElement& a, const FieldElement& b) const {
    if (kind_ == FieldKind::PrimeField)
        return FieldElement::from_residue(sub_mod(a.residue(), b.residue(), p_));
    return FieldElement::from_rational(a.rational() - b.rational());
}

FieldElement FieldSpec::mul(const FieldElement& a, const FieldElement& b) const {
    if (kind_ == FieldKind::PrimeField)
        return FieldElement::from_residue(mul_mod(a.residue(), b.residue(), p_));
    return FieldElement::from_rational(a.rational() * b.rational());
}

FieldElement FieldSpec::neg(const FieldElement& a) const {
    if (kind_ == FieldKind::PrimeField)
        return FieldElement::from_residue(a.residue() == 0 ? 0 : p_ - a.residue());
    return FieldElement::from_rational(-a.rational());
}

FieldElement FieldSpec::inv(const FieldElement& a) const {
    if (a.is_zero())
        fail(Errc::DivisionByZero, "inverse of zero");
    if (kind_ == FieldKind::PrimeField)
        return FieldElement::from_residue(inv_mod(a.residue(), p_));
    return FieldElement::from_rational(1 / a.rational());
}

FieldElement FieldSpec::parse_literal(std::string_view text) const {
    auto bad = [&]() { fail(Errc::ParseError, "invalid literal '" + std::string(text) + "'"); };

    std::size_t pos = 0;
    auto scan_integer = [&]() -> std::string {
        std::size_t start = pos;
        if (pos < text.size() && text[pos] == '-') ++pos;
        std::size_t digits = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            ++digits;
        }
        if (digits == 0) bad();
        return std::string(text.substr(start, pos - start));
    };

    std::string num = scan_integer();
    if (pos == text.size()) {
        return from_integer(BigInt(num));
    }
    if (text[pos] != '/') bad();
    ++pos;
    if (pos < text.size() && text[pos] == '-') bad(); // denominator carries no sign
    std::string den = scan_integer();
    if (pos != text.size()) bad();
    if (kind_ == FieldKind::PrimeField)
        fail(Errc::ParseError, "fraction literal '" + std::string(text) + "' not valid over " + name());
    return from_fraction(BigInt(num), BigInt(den));
}

std::string FieldSpec::format(const FieldElement& x) const {
    if (kind_ == FieldKind::PrimeField)
        return std::to_string(x.residue());
    const BigRat& q = x.rational();
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) {
        s += '/';
        s += q.get_den().get_str();
    }
    return s;
}

std::string FieldSpec::name() const {
    return kind_ == FieldKind::PrimeField ? "gf" + std::to_string(p_) : "rational";
}

FieldSpec FieldSpec::from_name(std::string_view name) {
    if (name == "rational") return rationals();
    if (name.size() > 2 && name.substr(0, 2) == "gf") {
        std::uint64_t p = 0;
        for (char c : name.substr(2)) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                fail(Errc::ParseError, "bad field name '" + std::string(name) + "'");
            std::uint64_t d = static_cast<std::uint64_t>(c - '0');
            if (p > (UINT64_MAX - d) / 10)
                fail(Errc::ParseError, "field modulus out of range in '" + std::string(name) + "'");
            p = p * 10 + d;
        }
        return gf(p);
    }
    fail(Errc::ParseError, "bad field name '" + std::string(name) + "' (expected gf<p> or rational)");
}

} // namespace invcert
