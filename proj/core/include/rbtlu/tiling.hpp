#ifndef RBTLU_TILING_HPP
#define RBTLU_TILING_HPP

#include <cstddef>

namespace rbtlu {

/// 2D block-cyclic process grid, p rows by q columns. Tile (i, j) is owned by
/// process (i mod p, j mod q). Only used for communication prediction; no
/// messages are ever sent.
struct ProcessGrid {
    std::size_t p = 1;
    std::size_t q = 1;
};

/// Tile-level view of a transform applied to an n x n matrix stored in
/// nb x nb tiles on `grid`. `ref_tiles` overrides the rounded-up tile count
/// governing the butterfly halves (0 means the default rounding rule).
struct TilePlan {
    std::size_t n = 0;
    std::size_t nb = 1;
    std::size_t depth = 0;
    ProcessGrid grid;
    std::size_t ref_tiles = 0;

    std::size_t tile_count() const { return (n + nb - 1) / nb; }
};

/// Number of layers (0..depth) in which some butterfly pairs a tile row with
/// a tile row owned by a different process row, or likewise for columns.
/// Derived by walking the tile-aligned butterfly structure against the
/// block-cyclic owner map.
std::size_t comm_layers(const TilePlan& plan);

/// Top-half dimension, in tiles, of the outermost layer that eliminates all
/// communication on a p x q grid: lcm(p,q) * 2^(depth-1) *
/// ceil(nt / (2^depth * lcm(p,q))). Feed 2x this value as ref_tiles to get
/// comm_layers == 0.
std::size_t comm_free_size(std::size_t nt, std::size_t depth, ProcessGrid grid);

}  // namespace rbtlu

#endif
