#include "casconn/sparse.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace casconn {

void SpMat::add(int i, int j, const Rat& v) {
    if (v == 0) return;
    auto& col = cols_data_[j];
    auto it = std::lower_bound(col.begin(), col.end(), i,
                               [](const std::pair<int, Rat>& e, int r) { return e.first < r; });
    if (it != col.end() && it->first == i) {
        it->second += v;
        if (it->second == 0) col.erase(it);
    } else {
        col.insert(it, {i, v});
    }
}

SpMat SpMat::operator+(const SpMat& o) const {
    SpMat r = *this;
    for (int j = 0; j < cols_; ++j)
        for (const auto& [i, v] : o.cols_data_[j]) r.add(i, j, v);
    return r;
}

SpMat SpMat::operator-(const SpMat& o) const {
    SpMat r = *this;
    for (int j = 0; j < cols_; ++j)
        for (const auto& [i, v] : o.cols_data_[j]) r.add(i, j, -v);
    return r;
}

SpMat SpMat::operator*(const SpMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("SpMat::operator*: shape mismatch");
    SpMat r(rows_, o.cols_);
    for (int j = 0; j < o.cols_; ++j) {
        std::unordered_map<int, Rat> acc;
        for (const auto& [k, v] : o.cols_data_[j])
            for (const auto& [i, w] : cols_data_[k]) {
                Rat p = w * v;
                auto it = acc.find(i);
                if (it == acc.end())
                    acc.emplace(i, std::move(p));
                else
                    it->second += p;
            }
        auto& col = r.cols_data_[j];
        col.reserve(acc.size());
        for (auto& [i, v] : acc)
            if (v != 0) col.emplace_back(i, std::move(v));
        std::sort(col.begin(), col.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    return r;
}

SpMat SpMat::operator*(const Rat& c) const {
    SpMat r(rows_, cols_);
    if (c == 0) return r;
    for (int j = 0; j < cols_; ++j) {
        r.cols_data_[j] = cols_data_[j];
        for (auto& [i, v] : r.cols_data_[j]) v *= c;
    }
    return r;
}

bool SpMat::is_zero() const {
    for (const auto& col : cols_data_)
        if (!col.empty()) return false;
    return true;
}

size_t SpMat::nnz() const {
    size_t n = 0;
    for (const auto& col : cols_data_) n += col.size();
    return n;
}

QVec SpMat::apply(const QVec& v) const {
    QVec r(rows_);
    for (int j = 0; j < cols_; ++j) {
        if (v[j] == 0) continue;
        for (const auto& [i, w] : cols_data_[j]) r[i] += w * v[j];
    }
    return r;
}

QMat SpMat::dense() const {
    QMat m(rows_, cols_);
    for (int j = 0; j < cols_; ++j)
        for (const auto& [i, v] : cols_data_[j]) m(i, j) = v;
    return m;
}

QMat SpMat::restrict_block(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
    std::unordered_map<int, int> rpos;
    rpos.reserve(row_idx.size());
    for (size_t k = 0; k < row_idx.size(); ++k) rpos[row_idx[k]] = static_cast<int>(k);
    QMat m(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
    for (size_t jj = 0; jj < col_idx.size(); ++jj)
        for (const auto& [i, v] : cols_data_[col_idx[jj]]) {
            auto it = rpos.find(i);
            if (it != rpos.end()) m(it->second, static_cast<int>(jj)) = v;
        }
    return m;
}

SpMat SpMat::from_dense(const QMat& m) {
    SpMat s(m.rows(), m.cols());
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i)
            if (m(i, j) != 0) s.cols_data_[j].emplace_back(i, m(i, j));
    return s;
}

SpMat SpMat::identity(int n) {
    SpMat s(n, n);
    for (int j = 0; j < n; ++j) s.cols_data_[j].emplace_back(j, Rat(1));
    return s;
}

SpMat SpMat::diagonal(const QVec& d) {
    SpMat s(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t j = 0; j < d.size(); ++j)
        if (d[j] != 0) s.cols_data_[j].emplace_back(static_cast<int>(j), d[j]);
    return s;
}

SpMat bracket(const SpMat& a, const SpMat& b) { return a * b - b * a; }

} // namespace casconn
