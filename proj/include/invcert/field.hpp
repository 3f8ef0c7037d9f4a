#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "invcert/errors.hpp"

namespace invcert {

using BigInt = mpz_class;
using BigRat = mpq_class;

enum class FieldKind { PrimeField, Rational };

/// Exact scalar value. For a prime field this is the canonical residue in
/// [0, p); for the rationals it is a fully reduced fraction with positive
/// denominator (zero stored as 0/1). Values are immutable; which
/// alternative is active is fixed by the FieldSpec they belong to.
class FieldElement {
public:
    FieldElement() : v_(std::uint64_t{0}) {}

    static FieldElement from_residue(std::uint64_t r) { return FieldElement(r); }
    /// `q` must already be canonical (mpq_class arithmetic keeps it so).
    static FieldElement from_rational(BigRat q) { return FieldElement(std::move(q)); }

    bool is_residue() const { return std::holds_alternative<std::uint64_t>(v_); }
    std::uint64_t residue() const { return std::get<std::uint64_t>(v_); }
    const BigRat& rational() const { return std::get<BigRat>(v_); }

    bool is_zero() const {
        return is_residue() ? residue() == 0 : rational() == 0;
    }
    bool is_one() const {
        return is_residue() ? residue() == 1 : rational() == 1;
    }

    friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.v_ == b.v_; }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

private:
    explicit FieldElement(std::uint64_t r) : v_(r) {}
    explicit FieldElement(BigRat q) : v_(std::move(q)) {}

    std::variant<std::uint64_t, BigRat> v_;
};

/// Arithmetic context: GF(p) for a prime p, or arbitrary-precision
/// rationals. Every operation is a pure function of its arguments, so
/// specs and elements can be shared across threads freely.
class FieldSpec {
public:
    /// GF(p). Primality is checked by trial division up to sqrt(p).
    static FieldSpec gf(std::uint64_t p);
    static FieldSpec rationals();

    FieldKind kind() const { return kind_; }
    std::uint64_t modulus() const;

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.kind_ == b.kind_ && a.p_ == b.p_;
    }
    friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }

    FieldElement zero() const;
    FieldElement one() const;

    FieldElement from_integer(const BigInt& n) const;
    FieldElement from_integer(long n) const { return from_integer(BigInt(n)); }
    FieldElement from_fraction(const BigInt& num, const BigInt& den) const;

    /// Recomputes the canonical representative of x; a no-op on values
    /// produced by this spec (canonical-form idempotence).
    FieldElement canonicalize(const FieldElement& x) const;
    bool is_canonical(const FieldElement& x) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    /// Multiplicative inverse; GF(p) uses the extended Euclidean algorithm.
    FieldElement inv(const FieldElement& a) const;

    /// Literal grammar: integer `-?[0-9]+`, rational `-?[0-9]+(/[0-9]+)?`.
    /// GF(p) accepts any integer literal and canonicalizes it.
    FieldElement parse_literal(std::string_view text) const;
    std::string format(const FieldElement& x) const;

    /// Short name used in JSON reports and CLI flags: "gf<p>" or "rational".
    std::string name() const;
    static FieldSpec from_name(std::string_view name);

private:
    FieldSpec(FieldKind kind, std::uint64_t p) : kind_(kind), p_(p) {}

    FieldKind kind_;
    std::uint64_t p_; // 0 for rationals
};

} // namespace invcert
