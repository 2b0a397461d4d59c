#pragma once

#include <vector>

#include <Eigen/Sparse>

#include "helmls/types.hpp"

namespace helmls {

struct Triplet {
    int row;
    int col;
    Complex value;
};

/// Compressed sparse row matrix with complex entries.
class CsrMatrix {
public:
    CsrMatrix() = default;
    /// Duplicate entries are summed in (row, col, insertion) order so the
    /// result does not depend on the order in which triplets were produced
    /// beyond floating-point reassociation.
    static CsrMatrix from_triplets(int rows, int cols, std::vector<Triplet> triplets);
    static CsrMatrix identity(int n);
    static CsrMatrix from_dense(const MatrixXc& dense);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int nnz() const { return static_cast<int>(values_.size()); }
    const std::vector<int>& row_ptr() const { return row_ptr_; }
    const std::vector<int>& col_idx() const { return col_idx_; }
    const std::vector<Complex>& values() const { return values_; }

    Complex coeff(int r, int c) const;
    VectorXc multiply(const VectorXc& x) const;
    VectorXc diagonal() const;
    double max_abs() const;

    MatrixXc to_dense() const;
    Eigen::SparseMatrix<Complex> to_eigen() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<int> row_ptr_{0};
    std::vector<int> col_idx_;
    std::vector<Complex> values_;
};

} // namespace helmls
