#pragma once

// Exact Gauss-Jordan elimination. Pivots are chosen by exact nonzero tests,
// so ranks and kernels are exact over any field scalar.

#include <Eigen/Core>

#include <optional>
#include <utility>
#include <vector>

namespace fanoku {

template <typename Scalar>
using DynMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using DynVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Solution set particular + span(nullspace columns).
template <typename Scalar>
struct AffineSolution {
    DynVector<Scalar> particular;
    DynMatrix<Scalar> nullspace;

    bool unique() const { return nullspace.cols() == 0; }
};

/// Reduced row echelon form in place; returns the pivot columns.
template <typename Scalar>
std::vector<int> rref(DynMatrix<Scalar>& M, int ncols_to_reduce = -1) {
    const int rows = static_cast<int>(M.rows());
    const int cols = ncols_to_reduce < 0 ? static_cast<int>(M.cols()) : ncols_to_reduce;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && M(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r) M.row(p).swap(M.row(r));
        const Scalar inv = Scalar(1) / M(r, c);
        M.row(r) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || M(i, c) == 0) continue;
            const Scalar f = M(i, c);
            M.row(i) -= f * M.row(r);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// All solutions of A x = b, or nullopt when the system is inconsistent.
template <typename DerivedA, typename DerivedB>
std::optional<AffineSolution<typename DerivedA::Scalar>> solve_exact(const Eigen::MatrixBase<DerivedA>& A,
                                                                     const Eigen::MatrixBase<DerivedB>& b) {
    using Scalar = typename DerivedA::Scalar;
    const int rows = static_cast<int>(A.rows());
    const int n = static_cast<int>(A.cols());
    DynMatrix<Scalar> M(rows, n + 1);
    M.leftCols(n) = A;
    M.col(n) = b;
    const std::vector<int> pivots = rref(M, n);
    for (int i = static_cast<int>(pivots.size()); i < rows; ++i) {
        if (M(i, n) != 0) return std::nullopt;
    }
    std::vector<int> free_cols;
    for (int c = 0, k = 0; c < n; ++c) {
        if (k < static_cast<int>(pivots.size()) && pivots[k] == c) {
            ++k;
        } else {
            free_cols.push_back(c);
        }
    }
    AffineSolution<Scalar> out;
    out.particular = DynVector<Scalar>::Zero(n);
    for (std::size_t i = 0; i < pivots.size(); ++i) out.particular(pivots[i]) = M(static_cast<int>(i), n);
    out.nullspace = DynMatrix<Scalar>::Zero(n, static_cast<int>(free_cols.size()));
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        const int f = free_cols[j];
        out.nullspace(f, static_cast<int>(j)) = Scalar(1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            out.nullspace(pivots[i], static_cast<int>(j)) = -M(static_cast<int>(i), f);
    }
    return out;
}

/// Exact inverse of a square matrix, nullopt when singular.
template <typename Derived>
std::optional<DynMatrix<typename Derived::Scalar>> inverse_exact(const Eigen::MatrixBase<Derived>& A) {
    using Scalar = typename Derived::Scalar;
    const int n = static_cast<int>(A.rows());
    DynMatrix<Scalar> M(n, 2 * n);
    M.leftCols(n) = A;
    M.rightCols(n) = DynMatrix<Scalar>::Identity(n, n);
    if (static_cast<int>(rref(M, n).size()) < n) return std::nullopt;
    return DynMatrix<Scalar>(M.rightCols(n));
}

}  // namespace fanoku
