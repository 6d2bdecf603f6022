#pragma once

#include "casconn/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace casconn {

using QVec = std::vector<Rat>;

// Dense matrix over Rat, row-major. Sized for weight-space blocks and
// small algebra computations; representation generators live in SpMat.
class QMat {
public:
    QMat() : rows_(0), cols_(0) {}
    QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static QMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    QMat operator+(const QMat& o) const;
    QMat operator-(const QMat& o) const;
    QMat operator*(const QMat& o) const;
    QMat& operator+=(const QMat& o);
    QMat& operator-=(const QMat& o);
    QMat operator*(const Rat& c) const;

    QMat transpose() const;
    bool is_zero() const;
    bool operator==(const QMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    // Largest |entry|; the exact residual used by the flatness checks.
    Rat max_abs() const;
    Rat trace() const;

    QVec apply(const QVec& v) const;
    QVec row(int i) const;
    QVec col(int j) const;

    const std::vector<Rat>& data() const { return a_; }
    std::vector<Rat>& data() { return a_; }

private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

QMat commutator(const QMat& a, const QMat& b);

// Reduced row echelon form in place; returns rank, records pivot columns.
int rref_inplace(QMat& m, std::vector<int>* pivot_cols = nullptr);

int rank(QMat m);

// Columns form a basis of {x : Ax = 0}.
QMat nullspace(const QMat& a);

// Solves AX = B exactly; nullopt if inconsistent. Underdetermined systems
// get the particular solution with free variables set to zero.
std::optional<QMat> solve_linear(const QMat& a, const QMat& b);

// Inverse of a square invertible matrix; throws std::domain_error otherwise.
QMat inverse(const QMat& a);

// Incrementally maintained row space in reduced echelon form. Used by the
// algebra-closure engine and basis extraction, where vectors arrive one at
// a time and membership tests must be exact.
class EchelonSpan {
public:
    explicit EchelonSpan(int width) : width_(width) {}

    int width() const { return width_; }
    int dim() const { return static_cast<int>(rows_.size()); }

    // Residual of v modulo the current span (exact).
    QVec reduce(QVec v) const;

    // Inserts v if independent; returns true when the span grew.
    bool insert(QVec v);

    bool contains(const QVec& v) const;

    const std::vector<QVec>& rows() const { return rows_; }

private:
    int width_;
    std::vector<QVec> rows_;
    std::vector<int> pivots_;           // pivot column of rows_[k]
    std::map<int, int> row_of_pivot_;   // pivot column -> row index
};

QVec flatten(const QMat& m);
QMat unflatten(const QVec& v, int rows, int cols);

} // namespace casconn
