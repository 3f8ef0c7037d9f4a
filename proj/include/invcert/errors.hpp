#pragma once

#include <stdexcept>
#include <string>

namespace invcert {

enum class Errc {
    ZeroDenominator,
    NonPrimeModulus,
    DivisionByZero,
    DimensionMismatch,
    FieldMismatch,
    EmptyMatrix,
    IndexOutOfRange,
    ZeroFirstColumn,
    NotLeftInverse,
    InternalContradiction,
    MalformedCertificate,
    TooLarge,
    InvalidArgument,
    ParseError,
};

const char* errc_name(Errc code);

/// Single exception type for the whole library; the code tells callers
/// (and the CLI exit-code map) what went wrong.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace invcert
