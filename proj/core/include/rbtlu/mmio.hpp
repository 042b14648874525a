#ifndef RBTLU_MMIO_HPP
#define RBTLU_MMIO_HPP

#include <iosfwd>
#include <string>

#include "rbtlu/matrix.hpp"

namespace rbtlu {

/// Matrix Market reader. Accepts "array real general" (dense, column-major)
/// and "coordinate real general" (assembled into a dense matrix; duplicate
/// entries are summed). Integer fields are read as reals. Anything else
/// (pattern, complex, symmetric variants) raises std::runtime_error.
DenseMatrix read_matrix_market(std::istream& in);
DenseMatrix read_matrix_market_file(const std::string& path);

/// Writes "%%MatrixMarket matrix array real general" with 17 significant
/// digits, so write -> read round-trips every double exactly.
void write_matrix_market(std::ostream& out, const DenseMatrix& A);
void write_matrix_market_file(const std::string& path, const DenseMatrix& A);

}  // namespace rbtlu

#endif
