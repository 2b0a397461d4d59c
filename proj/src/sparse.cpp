#include "helmls/sparse.hpp"

#include <algorithm>
#include <numeric>

namespace helmls {

CsrMatrix CsrMatrix::from_triplets(int rows, int cols, std::vector<Triplet> triplets)
{
    std::vector<std::size_t> order(triplets.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& ta = triplets[a];
        const auto& tb = triplets[b];
        return ta.row != tb.row ? ta.row < tb.row : ta.col < tb.col;
    });
    CsrMatrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.row_ptr_.assign(rows + 1, 0);
    for (std::size_t idx = 0; idx < order.size(); ++idx) {
        const Triplet& t = triplets[order[idx]];
        require(t.row >= 0 && t.row < rows && t.col >= 0 && t.col < cols, "CsrMatrix: index out of range");
        if (!m.col_idx_.empty() && idx > 0) {
            const Triplet& prev = triplets[order[idx - 1]];
            if (prev.row == t.row && prev.col == t.col) {
                m.values_.back() += t.value;
                continue;
            }
        }
        m.col_idx_.push_back(t.col);
        m.values_.push_back(t.value);
        m.row_ptr_[t.row + 1] += 1;
    }
    for (int r = 0; r < rows; ++r) {
        m.row_ptr_[r + 1] += m.row_ptr_[r];
    }
    return m;
}

CsrMatrix CsrMatrix::identity(int n)
{
    std::vector<Triplet> t;
    t.reserve(n);
    for (int i = 0; i < n; ++i) {
        t.push_back({i, i, Complex(1.0)});
    }
    return from_triplets(n, n, std::move(t));
}

CsrMatrix CsrMatrix::from_dense(const MatrixXc& dense)
{
    std::vector<Triplet> t;
    for (int r = 0; r < dense.rows(); ++r) {
        for (int c = 0; c < dense.cols(); ++c) {
            if (dense(r, c) != Complex(0.0)) {
                t.push_back({r, c, dense(r, c)});
            }
        }
    }
    return from_triplets(static_cast<int>(dense.rows()), static_cast<int>(dense.cols()), std::move(t));
}

Complex CsrMatrix::coeff(int r, int c) const
{
    const auto begin = col_idx_.begin() + row_ptr_[r];
    const auto end = col_idx_.begin() + row_ptr_[r + 1];
    const auto it = std::lower_bound(begin, end, c);
    if (it != end && *it == c) {
        return values_[static_cast<std::size_t>(it - col_idx_.begin())];
    }
    return Complex(0.0);
}

VectorXc CsrMatrix::multiply(const VectorXc& x) const
{
    require(x.size() == cols_, "CsrMatrix::multiply: size mismatch");
    VectorXc y(rows_);
    for (int r = 0; r < rows_; ++r) {
        Complex s(0.0);
        for (int k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
            s += values_[k] * x(col_idx_[k]);
        }
        y(r) = s;
    }
    return y;
}

VectorXc CsrMatrix::diagonal() const
{
    VectorXc d(std::min(rows_, cols_));
    for (int i = 0; i < d.size(); ++i) {
        d(i) = coeff(i, i);
    }
    return d;
}

double CsrMatrix::max_abs() const
{
    double m = 0.0;
    for (const auto& v : values_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

MatrixXc CsrMatrix::to_dense() const
{
    MatrixXc d = MatrixXc::Zero(rows_, cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
            d(r, col_idx_[k]) = values_[k];
        }
    }
    return d;
}

Eigen::SparseMatrix<Complex> CsrMatrix::to_eigen() const
{
    std::vector<Eigen::Triplet<Complex>> t;
    t.reserve(values_.size());
    for (int r = 0; r < rows_; ++r) {
        for (int k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
            t.emplace_back(r, col_idx_[k], values_[k]);
        }
    }
    Eigen::SparseMatrix<Complex> m(rows_, cols_);
    m.setFromTriplets(t.begin(), t.end());
    return m;
}

} // namespace helmls
