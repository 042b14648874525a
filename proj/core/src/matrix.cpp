#include "rbtlu/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace rbtlu {

double inf_norm(const DenseMatrix& A) {
    if (A.empty()) throw std::invalid_argument("empty operand");
    double norm = 0.0;
    std::vector<double> row_sums(A.rows(), 0.0);
    for (std::size_t j = 0; j < A.cols(); ++j) {
        const double* aj = A.col(j);
        for (std::size_t i = 0; i < A.rows(); ++i) row_sums[i] += std::abs(aj[i]);
    }
    for (double s : row_sums) norm = std::max(norm, s);
    return norm;
}

double inf_norm(const DenseVector& v) {
    if (v.empty()) throw std::invalid_argument("empty operand");
    double norm = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) norm = std::max(norm, std::abs(v[i]));
    return norm;
}

DenseVector residual(const DenseMatrix& A, const DenseVector& x, const DenseVector& b) {
    const std::size_t n = A.rows();
    if (A.cols() != n || x.size() != n || b.size() != n)
        throw std::invalid_argument("dimension mismatch");
    DenseVector r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = b[i];
    for (std::size_t j = 0; j < n; ++j) {
        const double* aj = A.col(j);
        const double xj = x[j];
        for (std::size_t i = 0; i < n; ++i) r[i] -= aj[i] * xj;
    }
    return r;
}

DenseVector matvec(const DenseMatrix& A, const DenseVector& x, bool transpose) {
    const std::size_t m = transpose ? A.cols() : A.rows();
    const std::size_t k = transpose ? A.rows() : A.cols();
    if (x.size() != k) throw std::invalid_argument("dimension mismatch");
    DenseVector y(m);
    if (transpose) {
        for (std::size_t j = 0; j < A.cols(); ++j) {
            const double* aj = A.col(j);
            double s = 0.0;
            for (std::size_t i = 0; i < A.rows(); ++i) s += aj[i] * x[i];
            y[j] = s;
        }
    } else {
        for (std::size_t j = 0; j < A.cols(); ++j) {
            const double* aj = A.col(j);
            const double xj = x[j];
            for (std::size_t i = 0; i < A.rows(); ++i) y[i] += aj[i] * xj;
        }
    }
    return y;
}

DenseMatrix matmul(const DenseMatrix& A, const DenseMatrix& B) {
    if (A.cols() != B.rows()) throw std::invalid_argument("dimension mismatch");
    DenseMatrix C(A.rows(), B.cols());
    for (std::size_t j = 0; j < B.cols(); ++j) {
        for (std::size_t k = 0; k < A.cols(); ++k) {
            const double bkj = B(k, j);
            if (bkj == 0.0) continue;
            const double* ak = A.col(k);
            double* cj = C.col(j);
            for (std::size_t i = 0; i < A.rows(); ++i) cj[i] += ak[i] * bkj;
        }
    }
    return C;
}

DenseMatrix transpose(const DenseMatrix& A) {
    DenseMatrix T(A.cols(), A.rows());
    for (std::size_t j = 0; j < A.cols(); ++j)
        for (std::size_t i = 0; i < A.rows(); ++i) T(j, i) = A(i, j);
    return T;
}

std::vector<double> leading_minor_determinants(const DenseMatrix& A, std::size_t k_max) {
    const std::size_t n = A.rows();
    if (A.cols() != n) throw std::invalid_argument("dimension mismatch");
    if (k_max > n) throw std::invalid_argument("k_max exceeds dimension");
    std::vector<double> dets;
    dets.reserve(k_max);
    for (std::size_t k = 1; k <= k_max; ++k) {
        DenseMatrix M(k, k);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < k; ++i) M(i, j) = A(i, j);
        double det = 1.0;
        for (std::size_t step = 0; step < k && det != 0.0; ++step) {
            std::size_t piv = step;
            for (std::size_t i = step + 1; i < k; ++i)
                if (std::abs(M(i, step)) > std::abs(M(piv, step))) piv = i;
            if (M(piv, step) == 0.0) {
                det = 0.0;
                break;
            }
            if (piv != step) {
                for (std::size_t j = 0; j < k; ++j) std::swap(M(step, j), M(piv, j));
                det = -det;
            }
            det *= M(step, step);
            for (std::size_t i = step + 1; i < k; ++i) {
                const double l = M(i, step) / M(step, step);
                for (std::size_t j = step + 1; j < k; ++j) M(i, j) -= l * M(step, j);
            }
        }
        dets.push_back(det);
    }
    return dets;
}

}  // namespace rbtlu
