#include "rbtlu/svd.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rbtlu {

namespace {
constexpr int kMaxSweeps = 64;
constexpr double kOrthTol = 1e-15;
}  // namespace

std::vector<double> singular_values(const DenseMatrix& A) {
    if (A.empty()) throw std::invalid_argument("empty operand");
    if (std::min(A.rows(), A.cols()) > 1024)
        throw std::invalid_argument("svd oracle limited to min dimension 1024");

    // Work on a tall copy; one-sided Jacobi orthogonalizes columns, so the
    // short side must be the column count.
    DenseMatrix W = A.rows() >= A.cols() ? A : transpose(A);
    const std::size_t m = W.rows();
    const std::size_t n = W.cols();

    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        converged = true;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double* cp = W.col(p);
                double* cq = W.col(q);
                double app = 0.0, aqq = 0.0, apq = 0.0;
                for (std::size_t i = 0; i < m; ++i) {
                    app += cp[i] * cp[i];
                    aqq += cq[i] * cq[i];
                    apq += cp[i] * cq[i];
                }
                if (std::abs(apq) <= kOrthTol * std::sqrt(app * aqq)) continue;
                converged = false;
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t i = 0; i < m; ++i) {
                    const double vp = cp[i];
                    const double vq = cq[i];
                    cp[i] = c * vp - s * vq;
                    cq[i] = s * vp + c * vq;
                }
            }
        }
    }
    if (!converged) throw std::runtime_error("svd did not converge");

    std::vector<double> sigma(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double* cj = W.col(j);
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += cj[i] * cj[i];
        sigma[j] = std::sqrt(s);
    }
    std::sort(sigma.begin(), sigma.end(), std::greater<>());
    return sigma;
}

}  // namespace rbtlu
