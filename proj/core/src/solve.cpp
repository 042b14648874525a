#include "rbtlu/solve.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace rbtlu {

double SolveConfig::resolved_tol(std::size_t n) const {
    if (refine_tol) {
        if (*refine_tol <= 0.0) throw std::invalid_argument("refine_tol must be positive");
        return *refine_tol;
    }
    return 64.0 * static_cast<double>(n) * std::numeric_limits<double>::epsilon();
}

double backward_error(const DenseMatrix& A, const DenseVector& x, const DenseVector& b) {
    const DenseVector r = residual(A, x, b);
    const double num = inf_norm(r);
    const double den = inf_norm(A) * inf_norm(x) + inf_norm(b);
    if (den == 0.0) throw std::runtime_error("degenerate system");
    return num / den;
}

RefineResult refine(const DenseMatrix& A, const LUFactors& f, const ButterflyTransform& u,
                    const ButterflyTransform& v, const DenseVector& b, DenseVector x,
                    const SolveConfig& cfg, FlopCounter* flops) {
    const double tol = cfg.resolved_tol(A.rows());
    RefineResult res;
    double berr = backward_error(A, x, b);
    for (std::size_t it = 0; it < cfg.refine_max && !(berr <= tol); ++it) {
        DenseVector r = residual(A, x, b);
        apply_left_transpose(u, r, flops);
        DenseVector delta = lu_solve(f, r);
        apply_right(v, delta, flops);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += delta[i];
        berr = backward_error(A, x, b);
        res.berr_history.push_back(berr);
        ++res.iterations;
    }
    res.x = std::move(x);
    return res;
}

namespace {

std::pair<DenseVector, SolveReport> pivoted_rescue(const DenseMatrix& A,
                                                   const DenseVector& b,
                                                   const SolveConfig& cfg,
                                                   SolveReport report) {
    try {
        LUFactors f = lu_factor(A, PivotPolicy::partial, cfg.block);
        report.flops_factor += f.flops;
        DenseVector x = lu_solve(f, b);
        report.fell_back = true;
        report.backward_error_final = backward_error(A, x, b);
        return {std::move(x), std::move(report)};
    } catch (const FactorError&) {
        throw std::runtime_error("system numerically singular");
    }
}

}  // namespace

std::pair<DenseVector, SolveReport> rbt_solve(const DenseMatrix& A, const DenseVector& b,
                                              const SolveConfig& cfg) {
    const std::size_t n = A.rows();
    if (A.cols() != n || b.size() != n) throw std::invalid_argument("dimension mismatch");
    if (n == 0) throw std::invalid_argument("empty operand");
    const double tol = cfg.resolved_tol(n);

    SolveReport report;
    FlopCounter transform_flops;

    const ButterflyPlan plan = build_plan(n, cfg.depth, cfg.tile);
    const ButterflyTransform u =
        generate(plan, RngSeed{Rng(cfg.seed, rng_salt::left_transform).next_u64()});
    const ButterflyTransform v =
        generate(plan, RngSeed{Rng(cfg.seed, rng_salt::right_transform).next_u64()});

    DenseMatrix transformed = A;
    apply_two_sided(transformed, u, v, &transform_flops);

    DenseVector x;
    bool have_solution = false;
    try {
        LUFactors f = lu_factor(std::move(transformed), PivotPolicy::none, cfg.block);
        report.flops_factor = f.flops;

        DenseVector rhs = b;
        apply_left_transpose(u, rhs, &transform_flops);
        DenseVector xt = lu_solve(f, rhs);
        apply_right(v, xt, &transform_flops);
        x = std::move(xt);
        have_solution = true;

        report.backward_error_initial = backward_error(A, x, b);
        report.berr_history.push_back(report.backward_error_initial);

        RefineResult ref = refine(A, f, u, v, b, std::move(x), cfg, &transform_flops);
        x = std::move(ref.x);
        report.refine_iters = ref.iterations;
        double prev = report.backward_error_initial;
        for (double e : ref.berr_history) {
            if (e > prev) report.non_monotone = true;
            prev = e;
            report.berr_history.push_back(e);
        }
        report.backward_error_final =
            ref.berr_history.empty() ? report.backward_error_initial
                                     : ref.berr_history.back();
    } catch (const FactorError&) {
        report.genp_failed = true;
    }
    report.flops_transform = transform_flops.flops;

    const bool ok = have_solution && report.backward_error_final <= tol;
    if (!ok && cfg.fallback) return pivoted_rescue(A, b, cfg, std::move(report));
    if (!have_solution) {
        // Unpivoted route failed and no fallback requested: report it and
        // hand back a NaN vector so the failure cannot be mistaken for data.
        x = DenseVector(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = std::numeric_limits<double>::quiet_NaN();
    }
    return {std::move(x), std::move(report)};
}

std::pair<DenseVector, SolveReport> genp_solve(const DenseMatrix& A, const DenseVector& b,
                                               SolveConfig cfg) {
    cfg.depth = 0;
    return rbt_solve(A, b, cfg);
}

std::pair<DenseVector, SolveReport> gepp_solve(const DenseMatrix& A, const DenseVector& b,
                                               const SolveConfig& cfg) {
    SolveReport report;
    LUFactors f = lu_factor(A, PivotPolicy::partial, cfg.block);
    report.flops_factor = f.flops;
    DenseVector x = lu_solve(f, b);
    report.backward_error_initial = backward_error(A, x, b);
    report.backward_error_final = report.backward_error_initial;
    report.berr_history.push_back(report.backward_error_final);
    return {std::move(x), std::move(report)};
}

}  // namespace rbtlu
