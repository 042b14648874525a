#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "rbtlu/mmio.hpp"
#include "test_util.hpp"

using namespace rbtlu;

TEST_CASE("array format round-trips every bit") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        DenseMatrix A = test_util::random_matrix(1 + seed % 7, 1 + (3 * seed) % 5, seed,
                                                 -1e8, 1e8);
        A(0, 0) = 1.0 / 3.0;  // a value that needs all 17 digits
        std::stringstream io;
        write_matrix_market(io, A);
        DenseMatrix B = read_matrix_market(io);
        REQUIRE(B.rows() == A.rows());
        REQUIRE(B.cols() == A.cols());
        CHECK(test_util::max_abs_diff(A, B) == 0.0);
    }
}

TEST_CASE("coordinate format assembles into dense") {
    std::istringstream in(
        "%%MatrixMarket matrix coordinate real general\n"
        "% a comment\n"
        "3 3 4\n"
        "1 1 2.5\n"
        "3 2 -1\n"
        "2 3 4\n"
        "3 2 -1\n");
    DenseMatrix A = read_matrix_market(in);
    CHECK(A(0, 0) == 2.5);
    CHECK(A(2, 1) == -2.0);  // duplicates sum
    CHECK(A(1, 2) == 4.0);
    CHECK(A(1, 1) == 0.0);
}

TEST_CASE("malformed input is rejected") {
    std::istringstream bad_banner("%%NotMM matrix array real general\n1 1\n0\n");
    CHECK_THROWS(read_matrix_market(bad_banner));

    std::istringstream bad_sym(
        "%%MatrixMarket matrix array real symmetric\n2 2\n1\n2\n3\n4\n");
    CHECK_THROWS(read_matrix_market(bad_sym));

    std::istringstream short_data("%%MatrixMarket matrix array real general\n2 2\n1\n2\n");
    CHECK_THROWS(read_matrix_market(short_data));

    std::istringstream bad_index(
        "%%MatrixMarket matrix coordinate real general\n2 2 1\n3 1 5\n");
    CHECK_THROWS(read_matrix_market(bad_index));
}
