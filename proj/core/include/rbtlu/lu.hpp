#ifndef RBTLU_LU_HPP
#define RBTLU_LU_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rbtlu/matrix.hpp"

namespace rbtlu {

enum class PivotPolicy { none, partial };

/// Thrown when a factorization cannot continue; `step` is the 1-based
/// elimination step that failed.
class FactorError : public std::runtime_error {
public:
    FactorError(std::string msg, std::size_t step)
        : std::runtime_error(std::move(msg)), step_(step) {}
    std::size_t step() const { return step_; }

private:
    std::size_t step_;
};

/// In-place LU factors: L (unit lower) and U share `packed`. `pivots` is
/// absent for an unpivoted factorization; otherwise pivots[j] = i means rows
/// j and i were swapped at step j (0-based). `growth` is the largest entry
/// magnitude seen in any intermediate state divided by the largest initial
/// magnitude, >= 1 whenever the factorization completes.
struct LUFactors {
    DenseMatrix packed;
    std::optional<std::vector<std::size_t>> pivots;
    double growth = 1.0;
    std::uint64_t flops = 0;
};

/// Right-looking blocked elimination with panel width `block`.
///
/// policy none aborts with FactorError("zero pivot at step k") when a pivot
/// magnitude falls below n * eps * ||A||_inf; that threshold separates
/// structural zero pivots from benign smallness and triggers the pipeline
/// fallback. policy partial aborts only on an exactly zero pivot column
/// ("singular to working precision at step k"). Growth is tracked by
/// scanning the finished panel rows and the updated trailing matrix once per
/// panel.
LUFactors lu_factor(DenseMatrix A, PivotPolicy policy, std::size_t block = 64);

/// Solves A x = b from the packed factors (row swaps, then the two
/// triangular solves). Throws on a zero U diagonal.
DenseVector lu_solve(const LUFactors& f, const DenseVector& b);

/// Both sides of the elimination growth bound for step k: lhs is the largest
/// entry magnitude of the k-step unpivoted elimination intermediate of
/// A_tilde, rhs is sqrt(n) * ||A_tilde||_2 / sigma_k(A_tilde[0:k,0:k]) *
/// max|A_tilde|. Callers assert lhs <= rhs * (1 + 1e-8). Uses the singular
/// value oracle, so n is capped at 512. Throws std::runtime_error("bound
/// undefined") when sigma_k is zero.
struct GrowthBound {
    double lhs;
    double rhs;
};
GrowthBound growth_bound_check(const DenseMatrix& A_tilde, std::size_t k);

}  // namespace rbtlu

#endif
