#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "invcert/elementary.hpp"
#include "invcert/matrix.hpp"

namespace invcert {

/// Result of clearing the first column of a square matrix down to
/// (1, 0, ..., 0)^t with elementary row operations.
struct ReductionResult {
    std::vector<ElementaryOp> ops; // in application order: front applied first
    Matrix reduced;
};

/// Deterministic pivot strategy: take the smallest row index i with a
/// nonzero first-column entry; swap it up if i != 1; rescale row 1 to make
/// the pivot 1; clear the remaining first-column entries top to bottom.
/// Replaying `ops` on the input (front first) reproduces `reduced` exactly.
/// Throws ZeroFirstColumn when column 1 is identically zero.
ReductionResult reduce_first_column(const Matrix& a);

/// Basis of { x : Ax = 0 }, computed by full row reduction. One basis
/// vector per free column, in ascending column order; empty iff the kernel
/// is trivial.
std::vector<Vector> solve_homogeneous(const Matrix& a);

/// Pivot count after row reduction; rank + kernel dimension = cols.
std::size_t rank(const Matrix& a);

/// Singularity is a structured result, never an exception. The witness is
/// a nonzero kernel vector, so the claim is independently checkable via
/// mat_apply.
struct SingularReport {
    Vector witness;
};

/// Gauss-Jordan inverse of a square matrix: returns B with A*B = B*A = I
/// (both products asserted before returning), or a SingularReport.
std::variant<Matrix, SingularReport> left_inverse(const Matrix& a);

/// One recursion stage of the two-sided-inverse proof, operating at size
/// `n`. `ops` clear the first column of the stage's left matrix A, giving
///   A* = [ 1  v_star^t ]        B* = B * inv(ops) = [ beta_star  w_star^t ]
///        [ 0  A-tail   ]                            [ h_star     b_tail   ]
/// The proof forces beta_star = 1 and h_star = 0; both are recorded anyway
/// so a verifier can localize the first divergent stage.
struct CertLevel {
    std::size_t n;
    std::vector<ElementaryOp> ops;
    Vector v_star;
    FieldElement beta_star;
    Vector w_star;
    Vector h_star;
    Matrix b_tail;
};

/// Replayable trace witnessing that a right inverse is two-sided. An n x n
/// input yields n levels of sizes n, n-1, ..., 1 plus the 1x1 scalar pair
/// the recursion bottoms out on; a 0 x 0 input yields no levels and no
/// base pair.
struct Certificate {
    FieldSpec spec;
    std::size_t n;
    std::vector<CertLevel> levels;
    std::optional<std::pair<FieldElement, FieldElement>> base;
};

/// Checks A*B = I, then builds the certificate stage by stage: clear A's
/// first column, transfer the inverted ops onto B from the right, check
/// the forced block identities (h* = 0, beta* = 1, w*^t + v*^t b_tail = 0),
/// and recurse on the trailing blocks. B*A = I is asserted before
/// returning.
///
/// Throws NotLeftInverse (with the first differing entry of AB) when
/// A*B != I. Any proof-state violation while A*B = I holds — a zero first
/// column, a failed block identity — is impossible and raises
/// InternalContradiction.
Certificate prove_two_sided(const Matrix& a, const Matrix& b);

/// Replays a certificate against (a, b) using only elementary-op and
/// matrix arithmetic; it never re-runs the prover. True iff every stage's
/// recorded blocks match the replay, the block identities hold, the
/// recursion bottoms out on a scalar pair with product 1, and b*a = I.
/// Structurally broken certificates (size chain, dimension bookkeeping)
/// raise MalformedCertificate; any replay mismatch just returns false.
bool verify_certificate(const Certificate& cert, const Matrix& a, const Matrix& b);

/// Deterministic JSON serialization (fixed key order, canonical literals).
std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(std::string_view text);

} // namespace invcert
