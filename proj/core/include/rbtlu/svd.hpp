#ifndef RBTLU_SVD_HPP
#define RBTLU_SVD_HPP

#include <vector>

#include "rbtlu/matrix.hpp"

namespace rbtlu {

/// Singular values of A in descending order, computed by one-sided Jacobi
/// rotations. Desk-scale oracle for diagnostics and tests: min(rows, cols)
/// must not exceed 1024 and the cost is a few n^3 sweeps. Accuracy is well
/// inside 1e-10 * sigma_1 relative.
///
/// Throws std::runtime_error("svd did not converge") if the sweep budget is
/// exhausted, std::invalid_argument for empty or oversized input.
std::vector<double> singular_values(const DenseMatrix& A);

}  // namespace rbtlu

#endif
