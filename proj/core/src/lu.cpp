#include "rbtlu/lu.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "rbtlu/svd.hpp"

namespace rbtlu {

namespace {

double max_abs(const DenseMatrix& A) {
    double m = 0.0;
    for (std::size_t j = 0; j < A.cols(); ++j) {
        const double* cj = A.col(j);
        for (std::size_t i = 0; i < A.rows(); ++i) m = std::max(m, std::abs(cj[i]));
    }
    return m;
}

}  // namespace

LUFactors lu_factor(DenseMatrix A, PivotPolicy policy, std::size_t block) {
    const std::size_t n = A.rows();
    if (A.cols() != n) throw std::invalid_argument("dimension mismatch");
    if (n == 0) throw std::invalid_argument("empty operand");
    if (block == 0) block = 1;

    const double initial_max = max_abs(A);
    const double genp_tol =
        static_cast<double>(n) * std::numeric_limits<double>::epsilon() * inf_norm(A);
    double running_max = initial_max;
    std::uint64_t flops = 0;

    LUFactors f;
    if (policy == PivotPolicy::partial)
        f.pivots.emplace(n, 0);

    for (std::size_t k0 = 0; k0 < n; k0 += block) {
        const std::size_t kb = std::min(block, n - k0);

        // Panel: unblocked elimination on columns [k0, k0+kb), full rows.
        for (std::size_t j = k0; j < k0 + kb; ++j) {
            if (policy == PivotPolicy::partial) {
                std::size_t piv = j;
                double best = std::abs(A(j, j));
                for (std::size_t i = j + 1; i < n; ++i) {
                    const double cand = std::abs(A(i, j));
                    if (cand > best) {
                        best = cand;
                        piv = i;
                    }
                }
                if (best == 0.0)
                    throw FactorError(
                        "singular to working precision at step " + std::to_string(j + 1),
                        j + 1);
                (*f.pivots)[j] = piv;
                if (piv != j)
                    for (std::size_t c = 0; c < n; ++c) std::swap(A(j, c), A(piv, c));
            } else {
                if (std::abs(A(j, j)) < genp_tol)
                    throw FactorError("zero pivot at step " + std::to_string(j + 1), j + 1);
            }
            const double pivot = A(j, j);
            double* cj = A.col(j);
            for (std::size_t i = j + 1; i < n; ++i) cj[i] /= pivot;
            flops += n - j - 1;
            for (std::size_t c = j + 1; c < k0 + kb; ++c) {
                double* cc = A.col(c);
                const double ujc = cc[j];
                for (std::size_t i = j + 1; i < n; ++i) cc[i] -= cj[i] * ujc;
                flops += 2 * (n - j - 1);
            }
        }

        // Block row of U: solve L11 * U12 = A12 column by column.
        for (std::size_t c = k0 + kb; c < n; ++c) {
            double* cc = A.col(c);
            for (std::size_t j = k0; j < k0 + kb; ++j) {
                const double* cj = A.col(j);
                const double v = cc[j];
                for (std::size_t i = j + 1; i < k0 + kb; ++i) cc[i] -= cj[i] * v;
            }
            flops += kb * (kb - 1);
        }

        // Trailing update A22 -= L21 * U12, rank-kb, column at a time.
        for (std::size_t c = k0 + kb; c < n; ++c) {
            double* cc = A.col(c);
            for (std::size_t j = k0; j < k0 + kb; ++j) {
                const double* cj = A.col(j);
                const double ujc = cc[j];
                for (std::size_t i = k0 + kb; i < n; ++i) cc[i] -= cj[i] * ujc;
            }
            flops += 2 * kb * (n - k0 - kb);
        }

        // Growth scan: the panel's finished U rows plus the updated trailing
        // matrix. Multipliers are excluded, matching the usual growth factor.
        for (std::size_t c = k0; c < n; ++c) {
            const double* cc = A.col(c);
            const std::size_t top = std::min(c + 1, k0 + kb);
            for (std::size_t i = k0; i < top; ++i)
                running_max = std::max(running_max, std::abs(cc[i]));
        }
        for (std::size_t c = k0 + kb; c < n; ++c) {
            const double* cc = A.col(c);
            for (std::size_t i = k0 + kb; i < n; ++i)
                running_max = std::max(running_max, std::abs(cc[i]));
        }
    }

    f.packed = std::move(A);
    f.growth = initial_max > 0.0 ? running_max / initial_max : 1.0;
    f.flops = flops;
    return f;
}

DenseVector lu_solve(const LUFactors& f, const DenseVector& b) {
    const std::size_t n = f.packed.rows();
    if (b.size() != n) throw std::invalid_argument("dimension mismatch");
    DenseVector x = b;
    if (f.pivots)
        for (std::size_t j = 0; j < n; ++j)
            if ((*f.pivots)[j] != j) std::swap(x[j], x[(*f.pivots)[j]]);
    // L y = x, unit diagonal.
    for (std::size_t j = 0; j < n; ++j) {
        const double* cj = f.packed.col(j);
        const double xj = x[j];
        for (std::size_t i = j + 1; i < n; ++i) x[i] -= cj[i] * xj;
    }
    // U x = y.
    for (std::size_t j = n; j-- > 0;) {
        const double* cj = f.packed.col(j);
        if (cj[j] == 0.0) throw std::runtime_error("zero diagonal in U");
        const double xj = x[j] / cj[j];
        x[j] = xj;
        for (std::size_t i = 0; i < j; ++i) x[i] -= cj[i] * xj;
    }
    return x;
}

GrowthBound growth_bound_check(const DenseMatrix& A_tilde, std::size_t k) {
    const std::size_t n = A_tilde.rows();
    if (A_tilde.cols() != n) throw std::invalid_argument("dimension mismatch");
    if (n > 512) throw std::invalid_argument("growth bound check limited to n <= 512");
    if (k == 0 || k > n) throw std::invalid_argument("k out of range");

    DenseMatrix leading(k, k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < k; ++i) leading(i, j) = A_tilde(i, j);
    const double sigma_k = singular_values(leading).back();
    if (sigma_k == 0.0) throw std::runtime_error("bound undefined");

    const double norm2 = singular_values(A_tilde).front();
    const double rhs = std::sqrt(static_cast<double>(n)) * norm2 / sigma_k * max_abs(A_tilde);

    // k unpivoted elimination steps; the intermediate keeps the finished U
    // rows and zeros where multipliers would sit, as in the textbook A^(k).
    DenseMatrix W = A_tilde;
    for (std::size_t step = 0; step < k; ++step) {
        const double pivot = W(step, step);
        for (std::size_t i = step + 1; i < n; ++i) {
            const double l = W(i, step) / pivot;
            W(i, step) = 0.0;
            for (std::size_t j = step + 1; j < n; ++j) W(i, j) -= l * W(step, j);
        }
    }
    return GrowthBound{max_abs(W), rhs};
}

}  // namespace rbtlu
