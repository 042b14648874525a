#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rbtlu/butterfly.hpp"
#include "rbtlu/rng.hpp"
#include "rbtlu/tiling.hpp"

using namespace rbtlu;

TEST_CASE("communication classification on the 4x4 grid") {
    auto layers = [](std::size_t n) {
        return comm_layers(TilePlan{n, 512, 2, ProcessGrid{4, 4}, 0});
    };
    CHECK(layers(23040) == 0);
    CHECK(layers(138240) == 0);
    CHECK(layers(253440) == 0);
    CHECK(layers(69120) == 1);
    CHECK(layers(184320) == 1);
    CHECK(layers(207360) == 1);
}

TEST_CASE("single process never communicates") {
    CHECK(comm_layers(TilePlan{512, 512, 1, ProcessGrid{1, 1}, 0}) == 0);
    CHECK(comm_layers(TilePlan{99840, 512, 3, ProcessGrid{1, 1}, 0}) == 0);
}

TEST_CASE("depth zero never communicates") {
    CHECK(comm_layers(TilePlan{4096, 512, 0, ProcessGrid{4, 4}, 0}) == 0);
}

TEST_CASE("comm-free size formula") {
    CHECK(comm_free_size(45, 2, ProcessGrid{4, 4}) == 24);
    for (std::size_t nt : {1, 2, 5, 17, 100})
        CHECK(comm_free_size(nt, 1, ProcessGrid{1, 1}) == (nt + 1) / 2);
}

TEST_CASE("square-grid depth-2 divisibility rule") {
    // comm_layers == 0 iff ceil(nt/4) is a multiple of p, for nt >= 2.
    // (nt == 1 has no pairs at all, so it is trivially communication free.)
    for (std::size_t p : {2, 4, 8}) {
        for (std::size_t nt = 2; nt <= 2048; ++nt) {
            const std::size_t c = (nt + 3) / 4;
            const bool expect_free = (c % p == 0);
            const std::size_t got =
                comm_layers(TilePlan{nt * 512, 512, 2, ProcessGrid{p, p}, 0});
            CHECK((got == 0) == expect_free);
        }
    }
    CHECK(comm_layers(TilePlan{512, 512, 2, ProcessGrid{4, 4}, 0}) == 0);
}

TEST_CASE("raising the reference size to the comm-free value removes communication") {
    Rng rng(RngSeed{2024}, 1);
    std::size_t improvements = 0;
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t nt = 1 + rng.below(512);
        const std::size_t depth = 1 + rng.below(4);
        const ProcessGrid grid{1 + rng.below(8), 1 + rng.below(8)};
        const std::size_t nb = 8;

        TilePlan def{nt * nb, nb, depth, grid, 0};
        const std::size_t before = comm_layers(def);

        const std::size_t half_tiles = comm_free_size(nt, depth, grid);
        TilePlan tuned = def;
        tuned.ref_tiles = 2 * half_tiles;
        const std::size_t after = comm_layers(tuned);

        CHECK(after == 0);
        CHECK(after <= before);  // raising the reference never adds layers
        if (after < before) ++improvements;
    }
    CHECK(improvements > 0);
}

TEST_CASE("tile-aligned plans land on tile boundaries") {
    for (std::size_t n : {1000, 4096, 23040}) {
        for (std::size_t nb : {64, 512}) {
            const ButterflyPlan plan = build_plan(n, 3, nb);
            for (const auto& layer : plan.layers) {
                for (std::size_t j = 0; j < layer.size(); ++j) {
                    CHECK(layer[j].offset % nb == 0);
                    // Only the final truncated block may break half alignment.
                    if (j + 1 < layer.size()) {
                        CHECK(layer[j].top() % nb == 0);
                        CHECK(layer[j].mu % nb == 0);
                    }
                }
            }
        }
    }
}
