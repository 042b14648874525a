#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "rbtlu/butterfly.hpp"
#include "rbtlu/gallery.hpp"
#include "rbtlu/lu.hpp"
#include "rbtlu/solve.hpp"
#include "test_util.hpp"

using namespace rbtlu;

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();
}

TEST_CASE("kind names round-trip and use the reporting spellings") {
    CHECK(kind_name(MatrixKind::rand_nI) == "rand+nI");
    CHECK(parse_kind("rand+nI") == MatrixKind::rand_nI);
    CHECK(all_matrix_kinds().size() == 14);
    for (MatrixKind k : all_matrix_kinds()) CHECK(parse_kind(kind_name(k)) == k);
    CHECK_THROWS_AS(parse_kind("hilb"), std::invalid_argument);
}

TEST_CASE("pinned small instances") {
    SUBCASE("orthog n=1") {
        DenseMatrix A = generate_matrix(MatrixKind::orthog, 1, RngSeed{});
        CHECK(A(0, 0) == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("fiedler n=3") {
        DenseMatrix A = generate_matrix(MatrixKind::fiedler, 3, RngSeed{});
        CHECK(test_util::max_abs_diff(
                  A, test_util::from_rows({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}})) == 0.0);
    }
    SUBCASE("riemann n=2") {
        DenseMatrix A = generate_matrix(MatrixKind::riemann, 2, RngSeed{});
        CHECK(test_util::max_abs_diff(A, test_util::from_rows({{1, -1}, {-1, 2}})) == 0.0);
    }
    SUBCASE("gfpp n=4") {
        DenseMatrix A = generate_matrix(MatrixKind::gfpp, 4, RngSeed{});
        CHECK(test_util::max_abs_diff(A, test_util::from_rows({{1, 0, 0, 1},
                                                               {-1, 1, 0, 1},
                                                               {-1, -1, 1, 1},
                                                               {-1, -1, -1, 1}})) == 0.0);
    }
    SUBCASE("ris n=2") {
        DenseMatrix A = generate_matrix(MatrixKind::ris, 2, RngSeed{});
        CHECK(A(0, 0) == doctest::Approx(0.5 / 1.5));
        CHECK(A(0, 1) == doctest::Approx(0.5 / 0.5));
        CHECK(A(1, 0) == doctest::Approx(0.5 / 0.5));
        CHECK(A(1, 1) == doctest::Approx(0.5 / -0.5));
    }
}

TEST_CASE("orthog is orthogonal and symmetric") {
    for (std::size_t n : {16, 101, 1024}) {
        DenseMatrix A = generate_matrix(MatrixKind::orthog, n, RngSeed{});
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < j; ++i) REQUIRE(A(i, j) == A(j, i));
        DenseMatrix G = matmul(transpose(A), A);
        double err = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i)
                err = std::max(err, std::abs(G(i, j) - (i == j ? 1.0 : 0.0)));
        CHECK(err <= 50.0 * static_cast<double>(n) * kEps);
    }
}

TEST_CASE("circul depends only on (j - i) mod n") {
    const std::size_t n = 37;
    DenseMatrix A = generate_matrix(MatrixKind::circul, n, RngSeed{});
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            CHECK(A(i, j) == A((i + 1) % n, (j + 1) % n));
    CHECK(A(0, 0) == 1.0);
    CHECK(A(0, n - 1) == static_cast<double>(n));
}

TEST_CASE("random kinds are bitwise deterministic per seed") {
    for (MatrixKind k : {MatrixKind::rand, MatrixKind::rand_nI, MatrixKind::rands,
                         MatrixKind::randn, MatrixKind::randb, MatrixKind::randr}) {
        DenseMatrix A = generate_matrix(k, 33, RngSeed{7});
        DenseMatrix B = generate_matrix(k, 33, RngSeed{7});
        DenseMatrix C = generate_matrix(k, 33, RngSeed{8});
        CHECK(test_util::max_abs_diff(A, B) == 0.0);
        CHECK(test_util::max_abs_diff(A, C) != 0.0);
    }
}

TEST_CASE("random entry domains") {
    DenseMatrix b = generate_matrix(MatrixKind::randb, 50, RngSeed{3});
    for (std::size_t j = 0; j < 50; ++j)
        for (std::size_t i = 0; i < 50; ++i)
            REQUIRE((b(i, j) == 0.0 || b(i, j) == 1.0));
    DenseMatrix r = generate_matrix(MatrixKind::randr, 50, RngSeed{3});
    for (std::size_t j = 0; j < 50; ++j)
        for (std::size_t i = 0; i < 50; ++i)
            REQUIRE((r(i, j) == -1.0 || r(i, j) == 0.0 || r(i, j) == 1.0));
    DenseMatrix u = generate_matrix(MatrixKind::rand, 50, RngSeed{3});
    for (std::size_t j = 0; j < 50; ++j)
        for (std::size_t i = 0; i < 50; ++i) REQUIRE((u(i, j) >= 0.0 && u(i, j) < 1.0));
}

TEST_CASE("gfpp under a full-depth transform factors without pivoting") {
    const std::size_t n = 64;
    DenseMatrix A = generate_matrix(MatrixKind::gfpp, n, RngSeed{});
    const auto plan = build_plan(n, 7, 1);  // ceil(log2 64) + 1
    const auto u = generate(plan, RngSeed{21});
    const auto v = generate(plan, RngSeed{22});
    DenseMatrix B = A;
    apply_two_sided(B, u, v);
    LUFactors f = lu_factor(std::move(B), PivotPolicy::none, 16);
    CHECK(std::isfinite(f.growth));
    CHECK(f.growth >= 1.0);
}

TEST_CASE("rank probe") {
    SUBCASE("identity keeps everything") {
        const std::size_t n = 64;
        CHECK(rank_probe(DenseMatrix::identity(n), n, 0.5) == n);
    }
    SUBCASE("orthog corner carries less rank mass than a random corner") {
        const std::size_t count_orthog = rank_probe(MatrixKind::orthog, 512, 64, 1e-11);
        const std::size_t count_rand = rank_probe(MatrixKind::rand, 512, 64, 1e-11, RngSeed{5});
        CHECK(count_orthog < count_rand);
    }
    SUBCASE("ris leading block is numerically rank deficient") {
        CHECK(rank_probe(MatrixKind::ris, 256, 32, 1e-11) < 32);
    }
    SUBCASE("block validation") {
        CHECK_THROWS_AS(rank_probe(DenseMatrix::identity(8), 6, 0.5), std::invalid_argument);
        CHECK_THROWS_AS(rank_probe(DenseMatrix::identity(8), 16, 0.5), std::invalid_argument);
    }
}
