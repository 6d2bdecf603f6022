#pragma once

#include "casconn/linalg.hpp"

#include <vector>

namespace casconn {

// Sparse matrix over Rat, stored by columns. Representation generators are
// weight-graded and very sparse, so products and brackets stay sparse; dense
// blocks are extracted only when restricting to a weight space.
class SpMat {
public:
    SpMat() : rows_(0), cols_(0) {}
    SpMat(int rows, int cols) : rows_(rows), cols_(cols), cols_data_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void add(int i, int j, const Rat& v);
    void set(int i, int j, const Rat& v) { add(i, j, v); }

    const std::vector<std::pair<int, Rat>>& column(int j) const { return cols_data_[j]; }

    SpMat operator+(const SpMat& o) const;
    SpMat operator-(const SpMat& o) const;
    SpMat operator*(const SpMat& o) const;
    SpMat operator*(const Rat& c) const;

    bool is_zero() const;
    size_t nnz() const;

    QVec apply(const QVec& v) const;

    QMat dense() const;

    // Dense block rows x cols of the submatrix indexed by basis positions.
    QMat restrict_block(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;

    static SpMat from_dense(const QMat& m);
    static SpMat identity(int n);
    static SpMat diagonal(const QVec& d);

private:
    int rows_, cols_;
    std::vector<std::vector<std::pair<int, Rat>>> cols_data_;  // (row, value), sorted by row
};

SpMat bracket(const SpMat& a, const SpMat& b);

} // namespace casconn
