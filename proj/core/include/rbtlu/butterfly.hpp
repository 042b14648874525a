#ifndef RBTLU_BUTTERFLY_HPP
#define RBTLU_BUTTERFLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rbtlu/matrix.hpp"
#include "rbtlu/rng.hpp"

namespace rbtlu {

/// Counts the arithmetic of the transform kernels under the standard cost
/// model (normalization factors folded into the diagonal scalings): a depth-d
/// transform costs 2dn flop on a vector and 4dn^2 flop applied to both sides
/// of a matrix when every butterfly is untruncated.
struct FlopCounter {
    std::uint64_t flops = 0;
    void add(std::uint64_t n) { flops += n; }
};

/// One orthogonal butterfly block of size 2*mu + nu starting at `offset`.
///
/// Rows offset+t and offset+(mu+nu)+t (t < mu) form the mixed pairs; the nu
/// rows in between are the block's body and are only rescaled. A butterfly is
/// a Parker butterfly when nu == 0 or its size is 1.
struct ButterflySpec {
    std::size_t mu = 0;
    std::size_t nu = 0;
    std::size_t offset = 0;

    std::size_t size() const { return 2 * mu + nu; }
    std::size_t top() const { return mu + nu; }  // also the pair distance
    bool parker() const { return nu == 0 || size() == 1; }
};

/// Layer/size structure of a semi-Parker transform of dimension n: `layers`
/// is ordered outermost first (layers[0] holds the single full-width
/// butterfly), and layer k holds min(2^k, ceil(n / span)) butterflies. Within
/// each layer every butterfly except possibly the last is a Parker butterfly.
struct ButterflyPlan {
    std::size_t n = 0;
    std::size_t depth = 0;
    std::size_t tile = 1;
    std::size_t reference = 0;  // rounded-up dimension governing half sizes
    std::vector<std::vector<ButterflySpec>> layers;

    bool all_untruncated() const;  // every butterfly has nu == 0
};

/// Smallest m >= n with m divisible by 2^depth * tile. With tile == 1 this is
/// the plain rounding rule; a tiled value keeps every butterfly half aligned
/// to tile boundaries. Throws std::overflow_error when m does not fit.
std::size_t reference_size(std::size_t n, std::size_t depth, std::size_t tile);

/// Derives the layer structure from (n, depth, tile). Depths larger than
/// ceil(log2 n) + 1 are permitted; the excess layers degenerate into pure
/// scalings.
ButterflyPlan build_plan(std::size_t n, std::size_t depth, std::size_t tile = 1);

/// Same, but with the reference size forced to m (m >= n, m divisible by
/// 2^depth). Used to realign butterfly halves, e.g. to a process grid.
ButterflyPlan build_plan_with_reference(std::size_t n, std::size_t depth, std::size_t m,
                                        std::size_t tile = 1);

/// True iff every butterfly in every layer is a Parker butterfly.
bool is_parker(const ButterflyPlan& plan);

/// A transform in packed storage: the plan plus the n x depth array of random
/// diagonal coefficients, column k belonging to layer k (outermost first).
/// Every coefficient is exp(r/20) with r uniform on [-1, 1], hence positive;
/// storage stays at depth*n words and the coefficients regenerate bitwise
/// from (n, depth, tile, seed).
struct ButterflyTransform {
    ButterflyPlan plan;
    std::vector<double> coeffs;  // column-major n x depth
    RngSeed seed;                // seed the coefficients were drawn from

    double coeff(std::size_t i, std::size_t layer) const {
        return coeffs[i + layer * plan.n];
    }
    const double* layer_coeffs(std::size_t layer) const {
        return coeffs.data() + layer * plan.n;
    }
};

/// Draws the coefficients for `plan` from the seeded generator. Deterministic
/// per seed on every platform.
ButterflyTransform generate(const ButterflyPlan& plan, RngSeed seed);

/// Transform with every coefficient exactly 1 (every draw forced to r = 0);
/// the materialization of such a transform is orthogonal.
ButterflyTransform unit_transform(const ButterflyPlan& plan);

/// Explicit n x n matrix of the transform: the product of one
/// butterfly-block-diagonal factor times one diagonal factor per layer, with
/// the 1/sqrt(2) normalization inside the butterfly blocks. Oracle for the
/// fused kernels; n is capped at 4096.
DenseMatrix materialize(const ButterflyTransform& t);

/// v <- U^T v, layer by layer from the innermost. Cost model: 2 flop per
/// paired element and layer, 1 flop per body element (a 1-element row is a
/// single multiply).
void apply_left_transpose(const ButterflyTransform& t, DenseVector& v,
                          FlopCounter* flops = nullptr);

/// v <- V v (solution recovery direction); layers run outermost first.
void apply_right(const ButterflyTransform& t, DenseVector& v,
                 FlopCounter* flops = nullptr);

/// A <- U^T A V in place, one layer pass at a time, with the element loops
/// split four ways (2x2, 2x1, 1x2, 1x1) by whether the row and the column
/// land in a mixed pair or in a butterfly body. u and v must share n and
/// depth; otherwise throws std::invalid_argument("nonconformant transforms").
void apply_two_sided(DenseMatrix& A, const ButterflyTransform& u,
                     const ButterflyTransform& v, FlopCounter* flops = nullptr);

/// Sidecar serialization: only (n, depth, tile, seed) travel; coefficients
/// are regenerated on load, mirroring the packed storage.
std::string transform_to_json(const ButterflyTransform& t);
ButterflyTransform transform_from_json(const std::string& text);

}  // namespace rbtlu

#endif
