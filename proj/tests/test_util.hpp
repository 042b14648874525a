#ifndef RBTLU_TEST_UTIL_HPP
#define RBTLU_TEST_UTIL_HPP

#include <cmath>
#include <cstdint>

#include "rbtlu/matrix.hpp"
#include "rbtlu/rng.hpp"

namespace test_util {

inline rbtlu::DenseMatrix random_matrix(std::size_t rows, std::size_t cols,
                                        std::uint64_t seed, double lo = -1.0,
                                        double hi = 1.0) {
    rbtlu::Rng rng(rbtlu::RngSeed{seed}, 0x7465);
    rbtlu::DenseMatrix A(rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i)
            A(i, j) = lo + (hi - lo) * rng.uniform01();
    return A;
}

inline rbtlu::DenseVector random_vector(std::size_t n, std::uint64_t seed) {
    rbtlu::Rng rng(rbtlu::RngSeed{seed}, 0x7476);
    rbtlu::DenseVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = 2.0 * rng.uniform01() - 1.0;
    return v;
}

inline rbtlu::DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const std::size_t m = rows.size();
    const std::size_t n = rows.begin()->size();
    rbtlu::DenseMatrix A(m, n);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (double v : row) A(i, j++) = v;
        ++i;
    }
    return A;
}

inline double max_abs_diff(const rbtlu::DenseMatrix& A, const rbtlu::DenseMatrix& B) {
    double m = 0.0;
    for (std::size_t j = 0; j < A.cols(); ++j)
        for (std::size_t i = 0; i < A.rows(); ++i)
            m = std::max(m, std::abs(A(i, j) - B(i, j)));
    return m;
}

/// Orthonormalizes the columns of a seeded random square matrix by modified
/// Gram-Schmidt; test-side source of orthogonal matrices.
inline rbtlu::DenseMatrix random_orthogonal(std::size_t n, std::uint64_t seed) {
    rbtlu::DenseMatrix Q = random_matrix(n, n, seed);
    for (std::size_t j = 0; j < n; ++j) {
        double* qj = Q.col(j);
        for (std::size_t k = 0; k < j; ++k) {
            const double* qk = Q.col(k);
            double dot = 0.0;
            for (std::size_t i = 0; i < n; ++i) dot += qk[i] * qj[i];
            for (std::size_t i = 0; i < n; ++i) qj[i] -= dot * qk[i];
        }
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) norm += qj[i] * qj[i];
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < n; ++i) qj[i] /= norm;
    }
    return Q;
}

}  // namespace test_util

#endif
