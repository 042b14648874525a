#include "rbtlu/mmio.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rbtlu {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::string next_data_line(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        const auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '%') continue;
        return line;
    }
    throw std::runtime_error("matrix market: unexpected end of file");
}

}  // namespace

DenseMatrix read_matrix_market(std::istream& in) {
    std::string banner;
    if (!std::getline(in, banner))
        throw std::runtime_error("matrix market: empty input");
    std::istringstream hs(banner);
    std::string tag, object, format, field, symmetry;
    hs >> tag >> object >> format >> field >> symmetry;
    if (lower(tag) != "%%matrixmarket" || lower(object) != "matrix")
        throw std::runtime_error("matrix market: bad banner");
    format = lower(format);
    field = lower(field);
    symmetry = lower(symmetry);
    if (field != "real" && field != "integer" && field != "double")
        throw std::runtime_error("matrix market: unsupported field '" + field + "'");
    if (symmetry != "general")
        throw std::runtime_error("matrix market: unsupported symmetry '" + symmetry + "'");

    if (format == "array") {
        std::istringstream sizes(next_data_line(in));
        std::size_t rows = 0, cols = 0;
        if (!(sizes >> rows >> cols))
            throw std::runtime_error("matrix market: bad size line");
        DenseMatrix A(rows, cols);
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t i = 0; i < rows; ++i) {
                double v;
                if (!(in >> v)) throw std::runtime_error("matrix market: short data");
                A(i, j) = v;
            }
        return A;
    }
    if (format == "coordinate") {
        std::istringstream sizes(next_data_line(in));
        std::size_t rows = 0, cols = 0, nnz = 0;
        if (!(sizes >> rows >> cols >> nnz))
            throw std::runtime_error("matrix market: bad size line");
        DenseMatrix A(rows, cols);
        for (std::size_t e = 0; e < nnz; ++e) {
            std::size_t i, j;
            double v;
            if (!(in >> i >> j >> v)) throw std::runtime_error("matrix market: short data");
            if (i < 1 || i > rows || j < 1 || j > cols)
                throw std::runtime_error("matrix market: index out of range");
            A(i - 1, j - 1) += v;
        }
        return A;
    }
    throw std::runtime_error("matrix market: unsupported format '" + format + "'");
}

DenseMatrix read_matrix_market_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_matrix_market(in);
}

void write_matrix_market(std::ostream& out, const DenseMatrix& A) {
    out << "%%MatrixMarket matrix array real general\n";
    out << A.rows() << " " << A.cols() << "\n";
    char buf[64];
    for (std::size_t j = 0; j < A.cols(); ++j)
        for (std::size_t i = 0; i < A.rows(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", A(i, j));
            out << buf << "\n";
        }
}

void write_matrix_market_file(const std::string& path, const DenseMatrix& A) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_matrix_market(out, A);
}

}  // namespace rbtlu
