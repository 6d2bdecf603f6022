#include "casconn/linalg.hpp"

#include <stdexcept>

namespace casconn {

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMat QMat::operator+(const QMat& o) const {
    QMat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
}

QMat QMat::operator-(const QMat& o) const {
    QMat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
}

QMat& QMat::operator+=(const QMat& o) {
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

QMat& QMat::operator-=(const QMat& o) {
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

QMat QMat::operator*(const QMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("QMat::operator*: shape mismatch");
    QMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& x = (*this)(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rat& y = o(k, j);
                if (y != 0) r(i, j) += x * y;
            }
        }
    return r;
}

QMat QMat::operator*(const Rat& c) const {
    QMat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * c;
    return r;
}

QMat QMat::transpose() const {
    QMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

bool QMat::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

Rat QMat::max_abs() const {
    Rat m = 0;
    for (const auto& x : a_) {
        Rat ax = x < 0 ? Rat(-x) : x;
        if (ax > m) m = ax;
    }
    return m;
}

Rat QMat::trace() const {
    Rat t = 0;
    for (int i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
}

QVec QMat::apply(const QVec& v) const {
    QVec r(rows_);
    for (int i = 0; i < rows_; ++i) {
        Rat s = 0;
        for (int j = 0; j < cols_; ++j) {
            const Rat& x = (*this)(i, j);
            if (x != 0) s += x * v[j];
        }
        r[i] = s;
    }
    return r;
}

QVec QMat::row(int i) const {
    QVec r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
}

QVec QMat::col(int j) const {
    QVec c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

QMat commutator(const QMat& a, const QMat& b) { return a * b - b * a; }

int rref_inplace(QMat& m, std::vector<int>* pivot_cols) {
    const int rows = m.rows(), cols = m.cols();
    int r = 0;
    if (pivot_cols) pivot_cols->clear();
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = c; j < cols; ++j) std::swap(m(piv, j), m(r, j));
        Rat inv = Rat(1) / m(r, c);
        for (int j = c; j < cols; ++j) m(r, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rat f = m(i, c);
            for (int j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return r;
}

int rank(QMat m) { return rref_inplace(m); }

QMat nullspace(const QMat& a) {
    QMat m = a;
    std::vector<int> piv;
    int r = rref_inplace(m, &piv);
    const int n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (int c : piv) is_pivot[c] = true;
    QMat ker(n, n - r);
    int k = 0;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        ker(c, k) = 1;
        for (int i = 0; i < r; ++i) ker(piv[i], k) = -m(i, c);
        ++k;
    }
    return ker;
}

std::optional<QMat> solve_linear(const QMat& a, const QMat& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve_linear: shape mismatch");
    const int n = a.cols(), nb = b.cols();
    QMat aug(a.rows(), n + nb);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
        for (int j = 0; j < nb; ++j) aug(i, n + j) = b(i, j);
    }
    std::vector<int> piv;
    int r = rref_inplace(aug, &piv);
    for (int i = 0; i < r; ++i)
        if (piv[i] >= n) return std::nullopt;  // pivot in the rhs block: inconsistent
    for (int i = r; i < a.rows(); ++i)
        for (int j = 0; j < nb; ++j)
            if (aug(i, n + j) != 0) return std::nullopt;
    QMat x(n, nb);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < nb; ++j) x(piv[i], j) = aug(i, n + j);
    return x;
}

QMat inverse(const QMat& a) {
    if (a.rows() != a.cols()) throw std::domain_error("inverse: not square");
    auto x = solve_linear(a, QMat::identity(a.rows()));
    if (!x || rank(a) != a.rows()) throw std::domain_error("inverse: singular matrix");
    return *x;
}

QVec EchelonSpan::reduce(QVec v) const {
    for (size_t k = 0; k < rows_.size(); ++k) {
        const Rat& c = v[pivots_[k]];
        if (c == 0) continue;
        Rat f = c;  // rows are normalized to pivot 1
        const QVec& row = rows_[k];
        for (int j = 0; j < width_; ++j)
            if (row[j] != 0) v[j] -= f * row[j];
    }
    return v;
}

bool EchelonSpan::insert(QVec v) {
    v = reduce(std::move(v));
    int p = -1;
    for (int j = 0; j < width_; ++j)
        if (v[j] != 0) { p = j; break; }
    if (p < 0) return false;
    Rat inv = Rat(1) / v[p];
    for (int j = 0; j < width_; ++j)
        if (v[j] != 0) v[j] *= inv;
    // Back-reduce existing rows so the basis stays fully reduced.
    for (size_t k = 0; k < rows_.size(); ++k) {
        Rat f = rows_[k][p];
        if (f == 0) continue;
        for (int j = 0; j < width_; ++j)
            if (v[j] != 0) rows_[k][j] -= f * v[j];
    }
    row_of_pivot_[p] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

bool EchelonSpan::contains(const QVec& v) const {
    QVec r = reduce(v);
    for (const auto& x : r)
        if (x != 0) return false;
    return true;
}

QVec flatten(const QMat& m) { return m.data(); }

QMat unflatten(const QVec& v, int rows, int cols) {
    QMat m(rows, cols);
    m.data() = v;
    return m;
}

} // namespace casconn
