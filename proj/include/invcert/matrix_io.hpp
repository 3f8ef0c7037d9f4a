#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "invcert/matrix.hpp"

namespace invcert {

/// Matrix text format:
///   field gf <p>        (or: field rational)
///   rows <r> cols <c>
///   r lines of c whitespace-separated entry literals
///
/// Parse errors carry "<name>:<line>:<col>" of the first bad token.
Matrix parse_matrix_text(std::string_view text, std::string_view name);
Matrix read_matrix_file(const std::filesystem::path& path);

/// Serialization is canonical and byte-stable: residues in [0, p),
/// reduced fractions, single spaces, one row per line, trailing newline.
std::string matrix_to_text(const Matrix& m);
void write_matrix_file(const Matrix& m, const std::filesystem::path& path);

} // namespace invcert
