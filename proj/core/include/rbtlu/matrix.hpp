#ifndef RBTLU_MATRIX_HPP
#define RBTLU_MATRIX_HPP

#include <cassert>
#include <cstddef>
#include <vector>

namespace rbtlu {

/// Column-major dense matrix of 64-bit reals with an explicit leading
/// dimension, the layout every factorization and transform kernel works on.
///
/// Element (i, j) lives at data[i + j*ld]. Invariants: ld >= rows and
/// data.size() >= ld * cols. Accesses are bounds-checked through assert();
/// compile with -DNDEBUG to drop the checks.
class DenseMatrix {
public:
    DenseMatrix() = default;

    /// rows x cols matrix, zero-initialized, ld == rows.
    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), ld_(rows), data_(rows * cols, 0.0) {}

    DenseMatrix(std::size_t rows, std::size_t cols, std::size_t ld)
        : rows_(rows), cols_(cols), ld_(ld), data_(ld * cols, 0.0) {
        assert(ld >= rows);
    }

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix I(n, n);
        for (std::size_t i = 0; i < n; ++i) I(i, i) = 1.0;
        return I;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t ld() const { return ld_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    double& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return data_[i + j * ld_];
    }
    double operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return data_[i + j * ld_];
    }

    /// Pointer to the start of column j.
    double* col(std::size_t j) {
        assert(j < cols_);
        return data_.data() + j * ld_;
    }
    const double* col(std::size_t j) const {
        assert(j < cols_);
        return data_.data() + j * ld_;
    }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t ld_ = 0;
    std::vector<double> data_;
};

/// Contiguous vector of 64-bit reals.
class DenseVector {
public:
    DenseVector() = default;
    explicit DenseVector(std::size_t len) : data_(len, 0.0) {}
    DenseVector(std::initializer_list<double> init) : data_(init) {}

    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double& operator[](std::size_t i) {
        assert(i < data_.size());
        return data_[i];
    }
    double operator[](std::size_t i) const {
        assert(i < data_.size());
        return data_[i];
    }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    bool operator==(const DenseVector&) const = default;

private:
    std::vector<double> data_;
};

/// max_i sum_j |A(i,j)|. Throws std::invalid_argument("empty operand") on an
/// empty matrix.
double inf_norm(const DenseMatrix& A);

/// max_i |v(i)|. Throws std::invalid_argument("empty operand") on an empty
/// vector.
double inf_norm(const DenseVector& v);

/// b - A*x in 64-bit arithmetic; A must be square with |x| == |b| == n.
DenseVector residual(const DenseMatrix& A, const DenseVector& x, const DenseVector& b);

/// y = A*x (or A^T*x with transpose set).
DenseVector matvec(const DenseMatrix& A, const DenseVector& x, bool transpose = false);

/// Plain triple-loop product, used by the materialization and reconstruction
/// oracles. Not a performance kernel.
DenseMatrix matmul(const DenseMatrix& A, const DenseMatrix& B);
DenseMatrix transpose(const DenseMatrix& A);

/// Determinants of the leading principal submatrices A[0:k,0:k] for
/// k = 1..k_max, each computed by partially pivoted elimination on a fresh
/// copy. Serves as the strong-nonsingularity oracle; it shares no code with
/// the unpivoted factorization it is used to check.
std::vector<double> leading_minor_determinants(const DenseMatrix& A, std::size_t k_max);

}  // namespace rbtlu

#endif
