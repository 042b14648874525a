#include "rbtlu/butterfly.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

namespace rbtlu {

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 * 0.5;

void check_plan_args(std::size_t n, std::size_t depth, std::size_t tile) {
    if (n == 0) throw std::invalid_argument("empty operand");
    if (tile == 0) throw std::invalid_argument("tile must be positive");
    if (depth >= 64) throw std::overflow_error("depth out of range");
}

ButterflyPlan layout_plan(std::size_t n, std::size_t depth, std::size_t tile,
                          std::size_t m) {
    ButterflyPlan plan;
    plan.n = n;
    plan.depth = depth;
    plan.tile = tile;
    plan.reference = m;
    plan.layers.resize(depth);
    for (std::size_t k = 0; k < depth; ++k) {
        const std::size_t h = m >> (k + 1);
        for (std::size_t start = 0; start < n; start += 2 * h) {
            ButterflySpec spec;
            spec.offset = start;
            const std::size_t top = std::min(h, n - start);
            spec.mu = (n - start > h) ? std::min(h, n - start - h) : 0;
            spec.nu = top - spec.mu;
            plan.layers[k].push_back(spec);
        }
    }
    return plan;
}

}  // namespace

bool ButterflyPlan::all_untruncated() const {
    for (const auto& layer : layers)
        for (const auto& b : layer)
            if (b.nu != 0) return false;
    return true;
}

std::size_t reference_size(std::size_t n, std::size_t depth, std::size_t tile) {
    check_plan_args(n, depth, tile);
    const std::size_t max = std::numeric_limits<std::size_t>::max();
    if (tile > (max >> depth)) throw std::overflow_error("reference size overflow");
    const std::size_t span = tile << depth;
    const std::size_t q = n / span + (n % span != 0 ? 1 : 0);
    if (q > max / span) throw std::overflow_error("reference size overflow");
    return span * q;
}

ButterflyPlan build_plan(std::size_t n, std::size_t depth, std::size_t tile) {
    return layout_plan(n, depth, tile, reference_size(n, depth, tile));
}

ButterflyPlan build_plan_with_reference(std::size_t n, std::size_t depth, std::size_t m,
                                        std::size_t tile) {
    check_plan_args(n, depth, tile);
    const std::size_t span = tile << depth;
    if (m < n || m % span != 0)
        throw std::invalid_argument("reference size not aligned");
    return layout_plan(n, depth, tile, m);
}

bool is_parker(const ButterflyPlan& plan) {
    for (const auto& layer : plan.layers)
        for (const auto& b : layer)
            if (!b.parker()) return false;
    return true;
}

ButterflyTransform generate(const ButterflyPlan& plan, RngSeed seed) {
    ButterflyTransform t;
    t.plan = plan;
    t.seed = seed;
    t.coeffs.resize(plan.n * plan.depth);
    Rng rng(seed);
    // Column-major draw order: layer 0 first, rows ascending within a layer.
    for (double& c : t.coeffs) c = std::exp(rng.uniform_pm1() / 20.0);
    return t;
}

ButterflyTransform unit_transform(const ButterflyPlan& plan) {
    ButterflyTransform t;
    t.plan = plan;
    t.coeffs.assign(plan.n * plan.depth, 1.0);
    return t;
}

DenseMatrix materialize(const ButterflyTransform& t) {
    const std::size_t n = t.plan.n;
    if (n > 4096) throw std::invalid_argument("materialize limited to n <= 4096");
    DenseMatrix M = DenseMatrix::identity(n);
    // Layer 0 is the rightmost factor of the product, so accumulate from it.
    for (std::size_t k = 0; k < t.plan.depth; ++k) {
        DenseMatrix F(n, n);
        const double* r = t.layer_coeffs(k);
        for (const ButterflySpec& b : t.plan.layers[k]) {
            const std::size_t lo = b.offset;
            const std::size_t hi = b.offset + b.top();
            for (std::size_t i = 0; i < b.mu; ++i) {
                F(lo + i, lo + i) = kInvSqrt2 * r[lo + i];
                F(lo + i, hi + i) = kInvSqrt2 * r[hi + i];
                F(hi + i, lo + i) = kInvSqrt2 * r[lo + i];
                F(hi + i, hi + i) = -kInvSqrt2 * r[hi + i];
            }
            for (std::size_t s = b.mu; s < b.top(); ++s)
                F(lo + s, lo + s) = r[lo + s];
        }
        M = (k == 0) ? std::move(F) : matmul(F, M);
    }
    return M;
}

void apply_left_transpose(const ButterflyTransform& t, DenseVector& v,
                          FlopCounter* flops) {
    if (v.size() != t.plan.n) throw std::invalid_argument("dimension mismatch");
    std::uint64_t count = 0;
    for (std::size_t k = t.plan.depth; k-- > 0;) {
        const double* c = t.layer_coeffs(k);
        for (const ButterflySpec& b : t.plan.layers[k]) {
            const std::size_t lo = b.offset;
            const std::size_t hi = b.offset + b.top();
            for (std::size_t i = 0; i < b.mu; ++i) {
                const double x1 = v[lo + i];
                const double x2 = v[hi + i];
                v[lo + i] = c[lo + i] * (kInvSqrt2 * (x1 + x2));
                v[hi + i] = c[hi + i] * (kInvSqrt2 * (x1 - x2));
            }
            for (std::size_t s = b.mu; s < b.top(); ++s) v[lo + s] *= c[lo + s];
            count += 4 * b.mu + b.nu;
        }
    }
    if (flops) flops->add(count);
}

void apply_right(const ButterflyTransform& t, DenseVector& v, FlopCounter* flops) {
    if (v.size() != t.plan.n) throw std::invalid_argument("dimension mismatch");
    std::uint64_t count = 0;
    for (std::size_t k = 0; k < t.plan.depth; ++k) {
        const double* c = t.layer_coeffs(k);
        for (const ButterflySpec& b : t.plan.layers[k]) {
            const std::size_t lo = b.offset;
            const std::size_t hi = b.offset + b.top();
            for (std::size_t i = 0; i < b.mu; ++i) {
                const double x1 = c[lo + i] * v[lo + i];
                const double x2 = c[hi + i] * v[hi + i];
                v[lo + i] = kInvSqrt2 * (x1 + x2);
                v[hi + i] = kInvSqrt2 * (x1 - x2);
            }
            for (std::size_t s = b.mu; s < b.top(); ++s) v[lo + s] *= c[lo + s];
            count += 4 * b.mu + b.nu;
        }
    }
    if (flops) flops->add(count);
}

namespace {

// One layer-k block update for the (row butterfly bu, column butterfly bv)
// pair. The four element classes follow the block structure: mixed pairs on
// both sides (2x2), a pair against a body row or column (2x1 / 1x2), and
// body against body (1x1, a pure rescale).
void block_update(DenseMatrix& A, const ButterflySpec& bu, const ButterflySpec& bv,
                  const double* uc, const double* vc) {
    const std::size_t i1 = bu.offset;
    const std::size_t i2 = bu.offset + bu.top();
    const std::size_t j1 = bv.offset;
    const std::size_t j2 = bv.offset + bv.top();

    for (std::size_t tv = 0; tv < bv.mu; ++tv) {
        const std::size_t j = j1 + tv;
        const std::size_t jp = j2 + tv;
        double* cj = A.col(j);
        double* cjp = A.col(jp);
        const double w1 = 0.5 * vc[j];
        const double w2 = 0.5 * vc[jp];
        for (std::size_t tu = 0; tu < bu.mu; ++tu) {
            const std::size_t i = i1 + tu;
            const std::size_t ip = i2 + tu;
            const double a11 = cj[i];
            const double a21 = cj[ip];
            const double a12 = cjp[i];
            const double a22 = cjp[ip];
            const double s = a11 + a21;
            const double d = a11 - a21;
            const double t = a12 + a22;
            const double e = a12 - a22;
            cj[i] = (uc[i] * w1) * (s + t);
            cjp[i] = (uc[i] * w2) * (s - t);
            cj[ip] = (uc[ip] * w1) * (d + e);
            cjp[ip] = (uc[ip] * w2) * (d - e);
        }
        const double wa = kInvSqrt2 * vc[j];
        const double wb = kInvSqrt2 * vc[jp];
        for (std::size_t i = i1 + bu.mu; i < i1 + bu.top(); ++i) {
            const double a1 = cj[i];
            const double a2 = cjp[i];
            cj[i] = (uc[i] * wa) * (a1 + a2);
            cjp[i] = (uc[i] * wb) * (a1 - a2);
        }
    }
    for (std::size_t j = j1 + bv.mu; j < j1 + bv.top(); ++j) {
        double* cj = A.col(j);
        const double w = kInvSqrt2 * vc[j];
        for (std::size_t tu = 0; tu < bu.mu; ++tu) {
            const std::size_t i = i1 + tu;
            const std::size_t ip = i2 + tu;
            const double a1 = cj[i];
            const double a2 = cj[ip];
            cj[i] = (uc[i] * w) * (a1 + a2);
            cj[ip] = (uc[ip] * w) * (a1 - a2);
        }
        for (std::size_t i = i1 + bu.mu; i < i1 + bu.top(); ++i)
            cj[i] = (uc[i] * vc[j]) * cj[i];
    }
}

}  // namespace

void apply_two_sided(DenseMatrix& A, const ButterflyTransform& u,
                     const ButterflyTransform& v, FlopCounter* flops) {
    const std::size_t n = u.plan.n;
    if (v.plan.n != n || v.plan.depth != u.plan.depth || v.plan.tile != u.plan.tile ||
        v.plan.reference != u.plan.reference)
        throw std::invalid_argument("nonconformant transforms");
    if (A.rows() != n || A.cols() != n) throw std::invalid_argument("dimension mismatch");

    std::uint64_t count = 0;
    // Layers must run innermost first; the (bu, bv) blocks within one layer
    // are disjoint and could run in any order (or in parallel) without
    // changing a bit of the result.
    for (std::size_t k = u.plan.depth; k-- > 0;) {
        const double* uc = u.layer_coeffs(k);
        const double* vc = v.layer_coeffs(k);
        for (const ButterflySpec& bv : v.plan.layers[k]) {
            for (const ButterflySpec& bu : u.plan.layers[k]) {
                block_update(A, bu, bv, uc, vc);
                count += 16 * std::uint64_t(bu.mu) * bv.mu +
                         6 * std::uint64_t(bu.mu) * bv.nu +
                         6 * std::uint64_t(bu.nu) * bv.mu +
                         2 * std::uint64_t(bu.nu) * bv.nu;
            }
        }
    }
    if (flops) flops->add(count);
}

std::string transform_to_json(const ButterflyTransform& t) {
    if (t.plan.reference != reference_size(t.plan.n, t.plan.depth, t.plan.tile))
        throw std::invalid_argument("only default-reference transforms serialize");
    nlohmann::json j;
    j["n"] = t.plan.n;
    j["depth"] = t.plan.depth;
    j["tile"] = t.plan.tile;
    j["seed"] = t.seed.value;
    return j.dump();
}

ButterflyTransform transform_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    const auto plan = build_plan(j.at("n").get<std::size_t>(),
                                 j.at("depth").get<std::size_t>(),
                                 j.at("tile").get<std::size_t>());
    return generate(plan, RngSeed{j.at("seed").get<std::uint64_t>()});
}

}  // namespace rbtlu
