#ifndef RBTLU_SOLVE_HPP
#define RBTLU_SOLVE_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "rbtlu/butterfly.hpp"
#include "rbtlu/lu.hpp"
#include "rbtlu/matrix.hpp"
#include "rbtlu/rng.hpp"

namespace rbtlu {

/// Knobs of the randomized solver pipeline. refine_tol left empty resolves to
/// 64 * n * eps at solve time, loose enough that the default two refinement
/// steps normally land well under it while still giving the fallback a
/// trigger.
struct SolveConfig {
    std::size_t depth = 2;
    std::size_t refine_max = 2;
    std::optional<double> refine_tol;
    bool fallback = true;
    RngSeed seed;
    std::size_t tile = 1;
    std::size_t block = 64;

    double resolved_tol(std::size_t n) const;
};

/// Outcome of one pipeline run. backward_error_initial is the error right
/// after the unpivoted solve (NaN when that solve never produced a vector);
/// berr_history records the error after each refinement step so stalls stay
/// observable. non_monotone flags any refinement step that increased the
/// error.
struct SolveReport {
    double backward_error_initial = std::numeric_limits<double>::quiet_NaN();
    double backward_error_final = std::numeric_limits<double>::quiet_NaN();
    std::size_t refine_iters = 0;
    bool fell_back = false;
    bool genp_failed = false;
    bool non_monotone = false;
    std::vector<double> berr_history;
    std::uint64_t flops_transform = 0;
    std::uint64_t flops_factor = 0;
};

/// ||b - Ax||_inf / (||A||_inf ||x||_inf + ||b||_inf), evaluated in 64-bit
/// arithmetic. Throws std::runtime_error("degenerate system") when the
/// denominator is exactly zero; non-finite inputs propagate as NaN.
double backward_error(const DenseMatrix& A, const DenseVector& x, const DenseVector& b);

struct RefineResult {
    DenseVector x;
    std::size_t iterations = 0;
    std::vector<double> berr_history;  // error after each update
};

/// Stationary refinement in the original system: each step computes
/// r = b - A x against the untransformed A, solves the factored transformed
/// system for the correction (delta = V * solve(U^T r)) and updates x. Stops
/// after cfg.refine_max steps or once the backward error reaches the
/// resolved tolerance.
RefineResult refine(const DenseMatrix& A, const LUFactors& f, const ButterflyTransform& u,
                    const ButterflyTransform& v, const DenseVector& b, DenseVector x,
                    const SolveConfig& cfg, FlopCounter* flops = nullptr);

/// Full pipeline: transform a copy two-sided, factor without pivoting, solve,
/// undo the right transform, refine, and (when enabled) re-solve the original
/// system with partial pivoting if the unpivoted route failed or refinement
/// stalled above tolerance. The report is populated on every path; the solve
/// only throws when the pivoted fallback itself cannot factor
/// ("system numerically singular").
std::pair<DenseVector, SolveReport> rbt_solve(const DenseMatrix& A, const DenseVector& b,
                                              const SolveConfig& cfg);

/// rbt_solve with the transform depth forced to zero; the plain unpivoted
/// solver shares the whole reporting path.
std::pair<DenseVector, SolveReport> genp_solve(const DenseMatrix& A, const DenseVector& b,
                                               SolveConfig cfg);

/// Partially pivoted reference solve with the same reporting shape.
std::pair<DenseVector, SolveReport> gepp_solve(const DenseMatrix& A, const DenseVector& b,
                                               const SolveConfig& cfg);

}  // namespace rbtlu

#endif
