#pragma once

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "c3rigid/qsqrt3.hpp"

namespace c3rigid {

namespace detail {

template <typename Scalar>
bool is_zero(const Scalar& x) {
    return x == Scalar(0);
}
inline bool is_zero(const QSqrt3& x) { return x.is_zero(); }

template <typename Scalar>
void sub_mul(Scalar& acc, const Scalar& x, const Scalar& y) {
    acc -= x * y;
}
inline void sub_mul(QSqrt3& acc, const QSqrt3& x, const QSqrt3& y) { acc.sub_mul(x, y); }

}  // namespace detail

/// Rank over the scalar field by Gaussian elimination with exact division.
/// The pivot in each column is the first row (in current order) with a
/// nonzero entry; zero entries are skipped so sparse rows stay cheap.
template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    const Eigen::Index rows = m.rows(), cols = m.cols();

    std::vector<std::vector<Scalar>> work(rows, std::vector<Scalar>(cols));
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) work[i][j] = m(i, j);

    Eigen::Index rank = 0;
    std::vector<Eigen::Index> support;
    for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
        Eigen::Index pivot = rank;
        while (pivot < rows && detail::is_zero(work[pivot][col])) ++pivot;
        if (pivot == rows) continue;
        std::swap(work[rank], work[pivot]);

        auto& prow = work[rank];
        const Scalar inv = Scalar(1) / prow[col];
        support.clear();
        for (Eigen::Index j = col + 1; j < cols; ++j) {
            if (detail::is_zero(prow[j])) continue;
            prow[j] *= inv;
            support.push_back(j);
        }
        prow[col] = Scalar(1);

        for (Eigen::Index r = rank + 1; r < rows; ++r) {
            auto& row = work[r];
            if (detail::is_zero(row[col])) continue;
            const Scalar factor = row[col];
            for (Eigen::Index j : support) detail::sub_mul(row[j], factor, prow[j]);
            row[col] = Scalar(0);
        }
        ++rank;
    }
    return rank;
}

}  // namespace c3rigid
