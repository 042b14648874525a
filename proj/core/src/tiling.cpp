#include "rbtlu/tiling.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

#include "rbtlu/butterfly.hpp"

namespace rbtlu {

std::size_t comm_layers(const TilePlan& plan) {
    if (plan.n == 0 || plan.nb == 0) throw std::invalid_argument("empty operand");
    if (plan.grid.p == 0 || plan.grid.q == 0)
        throw std::invalid_argument("process grid must be at least 1x1");
    if (plan.depth == 0) return 0;

    const std::size_t nt = plan.tile_count();
    ButterflyPlan bp =
        plan.ref_tiles == 0
            ? build_plan(nt, plan.depth, 1)
            : build_plan_with_reference(nt, plan.depth, plan.ref_tiles, 1);

    std::size_t layers = 0;
    for (const auto& layer : bp.layers) {
        bool communicates = false;
        for (const ButterflySpec& b : layer) {
            if (b.mu == 0) continue;  // body-only block, nothing to pair
            const std::size_t h = b.top();  // pair distance in tiles
            // Paired tile rows sit h apart; owners differ iff h is not a
            // multiple of the grid extent. Columns mirror rows with q.
            if (h % plan.grid.p != 0 || h % plan.grid.q != 0) {
                communicates = true;
                break;
            }
        }
        if (communicates) ++layers;
    }
    return layers;
}

std::size_t comm_free_size(std::size_t nt, std::size_t depth, ProcessGrid grid) {
    if (grid.p == 0 || grid.q == 0)
        throw std::invalid_argument("process grid must be at least 1x1");
    if (depth == 0 || depth >= 64) throw std::invalid_argument("depth out of range");
    const std::size_t l = std::lcm(grid.p, grid.q);
    const std::size_t max = std::numeric_limits<std::size_t>::max();
    if (l > (max >> depth)) throw std::overflow_error("comm-free size overflow");
    const std::size_t denom = l << depth;  // 2^depth * lcm
    const std::size_t q = nt / denom + (nt % denom != 0 ? 1 : 0);
    const std::size_t half = (l << (depth - 1));
    if (q != 0 && half > max / q) throw std::overflow_error("comm-free size overflow");
    return half * q;
}

}  // namespace rbtlu
