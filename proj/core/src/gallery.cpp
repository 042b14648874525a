#include "rbtlu/gallery.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

#include "rbtlu/svd.hpp"

namespace rbtlu {

namespace {

void fill_random(DenseMatrix& A, RngSeed seed, double (*draw)(Rng&)) {
    Rng rng(seed, rng_salt::matrix);
    for (std::size_t j = 0; j < A.cols(); ++j) {
        double* cj = A.col(j);
        for (std::size_t i = 0; i < A.rows(); ++i) cj[i] = draw(rng);
    }
}

// (n+1)-point Chebyshev spectral differentiation matrix with the first row
// and column deleted; the classical nonsingular variant. Off-diagonal entries
// are (c_i / c_j) (-1)^(i+j) / (x_i - x_j); diagonals are the negated row
// sums, which is the numerically preferred form.
DenseMatrix chebspec(std::size_t n) {
    const std::size_t N = n;  // grid order; matrix is (N+1)x(N+1) before deletion
    std::vector<double> x(N + 1), c(N + 1);
    for (std::size_t i = 0; i <= N; ++i) {
        x[i] = std::cos(std::numbers::pi * static_cast<double>(i) / static_cast<double>(N));
        c[i] = (i == 0 || i == N) ? 2.0 : 1.0;
    }
    DenseMatrix D(N + 1, N + 1);
    for (std::size_t i = 0; i <= N; ++i) {
        double row_sum = 0.0;
        for (std::size_t j = 0; j <= N; ++j) {
            if (i == j) continue;
            const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
            D(i, j) = (c[i] / c[j]) * sign / (x[i] - x[j]);
            row_sum += D(i, j);
        }
        D(i, i) = -row_sum;
    }
    DenseMatrix A(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) A(i, j) = D(i + 1, j + 1);
    return A;
}

}  // namespace

const std::vector<MatrixKind>& all_matrix_kinds() {
    static const std::vector<MatrixKind> kinds = {
        MatrixKind::rand,     MatrixKind::rand_nI, MatrixKind::rands,
        MatrixKind::randn,    MatrixKind::randb,   MatrixKind::randr,
        MatrixKind::chebspec, MatrixKind::circul,  MatrixKind::fiedler,
        MatrixKind::gfpp,     MatrixKind::orthog,  MatrixKind::ris,
        MatrixKind::riemann,  MatrixKind::zielkeNS,
    };
    return kinds;
}

std::string kind_name(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::rand: return "rand";
        case MatrixKind::rand_nI: return "rand+nI";
        case MatrixKind::rands: return "rands";
        case MatrixKind::randn: return "randn";
        case MatrixKind::randb: return "randb";
        case MatrixKind::randr: return "randr";
        case MatrixKind::chebspec: return "chebspec";
        case MatrixKind::circul: return "circul";
        case MatrixKind::fiedler: return "fiedler";
        case MatrixKind::gfpp: return "gfpp";
        case MatrixKind::orthog: return "orthog";
        case MatrixKind::ris: return "ris";
        case MatrixKind::riemann: return "riemann";
        case MatrixKind::zielkeNS: return "zielkeNS";
    }
    throw std::invalid_argument("unknown matrix kind");
}

MatrixKind parse_kind(const std::string& name) {
    static const std::unordered_map<std::string, MatrixKind> table = [] {
        std::unordered_map<std::string, MatrixKind> t;
        for (MatrixKind k : all_matrix_kinds()) t.emplace(kind_name(k), k);
        return t;
    }();
    const auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown matrix kind '" + name + "'");
    return it->second;
}

DenseMatrix generate_matrix(MatrixKind kind, std::size_t n, RngSeed seed) {
    if (n == 0) throw std::invalid_argument("empty operand");
    DenseMatrix A(n, n);
    const double dn = static_cast<double>(n);
    switch (kind) {
        case MatrixKind::rand:
            fill_random(A, seed, [](Rng& r) { return r.uniform01(); });
            break;
        case MatrixKind::rand_nI:
            fill_random(A, seed, [](Rng& r) { return r.uniform01(); });
            for (std::size_t i = 0; i < n; ++i) A(i, i) += dn;
            break;
        case MatrixKind::rands:
            fill_random(A, seed, [](Rng& r) { return r.uniform_pm1(); });
            break;
        case MatrixKind::randn:
            fill_random(A, seed, [](Rng& r) { return r.normal(); });
            break;
        case MatrixKind::randb:
            fill_random(A, seed, [](Rng& r) { return static_cast<double>(r.below(2)); });
            break;
        case MatrixKind::randr:
            fill_random(A, seed,
                        [](Rng& r) { return static_cast<double>(r.below(3)) - 1.0; });
            break;
        case MatrixKind::chebspec:
            A = chebspec(n);
            break;
        case MatrixKind::circul:
            // First row is (1, 2, ..., n); every row a cyclic right shift.
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t i = 0; i < n; ++i)
                    A(i, j) = static_cast<double>((j + n - i) % n + 1);
            break;
        case MatrixKind::fiedler:
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t i = 0; i < n; ++i)
                    A(i, j) = std::abs(static_cast<double>(i) - static_cast<double>(j));
            break;
        case MatrixKind::gfpp:
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t i = 0; i < n; ++i) {
                    if (i == j) A(i, j) = 1.0;
                    else if (j == n - 1) A(i, j) = 1.0;
                    else if (i > j) A(i, j) = -1.0;
                }
            break;
        case MatrixKind::orthog:
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t i = 0; i < n; ++i)
                    A(i, j) = std::sqrt(2.0 / (dn + 1.0)) *
                              std::sin(static_cast<double>(i + 1) *
                                       static_cast<double>(j + 1) * std::numbers::pi /
                                       (dn + 1.0));
            break;
        case MatrixKind::ris:
            // 1-based formula 0.5 / (n - i - j + 1.5).
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t i = 0; i < n; ++i)
                    A(i, j) = 0.5 / (dn - static_cast<double>(i + 1) -
                                     static_cast<double>(j + 1) + 1.5);
            break;
        case MatrixKind::riemann:
            // Indices run 2..n+1: A(i,j) = i-1 when i divides j, else -1.
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t i = 0; i < n; ++i) {
                    const std::size_t ii = i + 2, jj = j + 2;
                    A(i, j) = (jj % ii == 0) ? static_cast<double>(ii - 1) : -1.0;
                }
            break;
        case MatrixKind::zielkeNS:
            // Zielke's nonsymmetric known-inverse family with parameter a = 1:
            // a+1 on and above the diagonal, a below.
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t i = 0; i < n; ++i) A(i, j) = (j >= i) ? 2.0 : 1.0;
            break;
    }
    return A;
}

std::size_t rank_probe(const DenseMatrix& A, std::size_t block, double threshold) {
    const std::size_t n = A.rows();
    if (A.cols() != n) throw std::invalid_argument("dimension mismatch");
    if (block == 0 || block % 4 != 0 || block > n)
        throw std::invalid_argument("block must be a positive multiple of 4, at most n");
    const std::size_t sub = block / 4;

    double scale = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(A(i, j)));

    std::size_t count = 0;
    DenseMatrix S(sub, sub);
    for (std::size_t br = 0; br < 4; ++br)
        for (std::size_t bc = 0; bc < 4; ++bc) {
            for (std::size_t j = 0; j < sub; ++j)
                for (std::size_t i = 0; i < sub; ++i)
                    S(i, j) = A(br * sub + i, bc * sub + j);
            for (double sigma : singular_values(S))
                if (sigma > threshold * scale) ++count;
        }
    return count;
}

std::size_t rank_probe(MatrixKind kind, std::size_t n, std::size_t block,
                       double threshold, RngSeed seed) {
    return rank_probe(generate_matrix(kind, n, seed), block, threshold);
}

}  // namespace rbtlu
