#ifndef RBTLU_GALLERY_HPP
#define RBTLU_GALLERY_HPP

#include <string>
#include <vector>

#include "rbtlu/matrix.hpp"
#include "rbtlu/rng.hpp"

namespace rbtlu {

/// The deterministic test-matrix generators exercised by the accuracy
/// harness. Random kinds draw from the seeded platform-independent stream in
/// column-major order; the structured kinds ignore the seed.
enum class MatrixKind {
    rand,      // iid uniform(0, 1)
    rand_nI,   // rand plus n on the diagonal (diagonally dominant)
    rands,     // iid uniform(-1, 1)
    randn,     // iid standard normal
    randb,     // iid uniform over {0, 1}
    randr,     // iid uniform over {-1, 0, 1}
    chebspec,  // Chebyshev spectral differentiation, first row/col deleted
    circul,    // circulant of (1, 2, ..., n)
    fiedler,   // A(i,j) = |i - j|
    gfpp,      // growth-factor worst case: unit diag, -1 below, last col 1
    orthog,    // discrete sine transform, sqrt(2/(n+1)) sin(ij pi/(n+1))
    ris,       // Hankel anti-diagonal, A(i,j) = 0.5 / (n - i - j + 1.5)
    riemann,   // divisibility matrix on indices 2..n+1
    zielkeNS,  // Zielke nonsymmetric inverse-test family, parameter 1
};

/// All kinds in the fixed harness order.
const std::vector<MatrixKind>& all_matrix_kinds();

/// Name as spelled in reports and on the command line ("rand+nI" etc.).
std::string kind_name(MatrixKind kind);

/// Inverse of kind_name; throws std::invalid_argument on an unknown name.
MatrixKind parse_kind(const std::string& name);

/// Deterministic per (kind, n, seed).
DenseMatrix generate_matrix(MatrixKind kind, std::size_t n, RngSeed seed);

/// Numerical-rank probe of a leading principal region: the block x block
/// corner of A is split into a 4 x 4 grid of subblocks (the 2^(2d) pieces a
/// depth-2 two-sided transform combines into its own leading block), their
/// singular values are concatenated, and the count of values above
/// threshold * max|A| is returned. block must be a positive multiple of 4
/// and at most min(n, 4096) with block/4 <= 1024 for the oracle.
std::size_t rank_probe(const DenseMatrix& A, std::size_t block, double threshold);

/// Convenience overload that generates the matrix first.
std::size_t rank_probe(MatrixKind kind, std::size_t n, std::size_t block,
                       double threshold, RngSeed seed = RngSeed{});

}  // namespace rbtlu

#endif
