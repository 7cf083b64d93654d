#pragma once

#include <optional>
#include <vector>

#include "dressian/rational.hpp"

// Exact Gauss-Jordan elimination over an ordered field. Pivots are chosen as
// the first nonzero entry, so results are only meaningful for exact scalars.

namespace dressian::linalg {

template <typename Scalar>
struct RowEchelon {
  MatrixX<Scalar> reduced;            // reduced row echelon form
  std::vector<Eigen::Index> pivots;   // pivot column of each nonzero row
};

template <typename Scalar>
RowEchelon<Scalar> row_reduce(MatrixX<Scalar> m) {
  RowEchelon<Scalar> out;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const Scalar inv = Scalar(1) / m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) {
      if (m(r, j) != 0) m(r, j) *= inv;
    }
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Scalar f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) {
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

template <typename Scalar>
Eigen::Index rank(const MatrixX<Scalar>& m) {
  return static_cast<Eigen::Index>(row_reduce(m).pivots.size());
}

/// Columns form a basis of {x : m x = 0}.
template <typename Scalar>
MatrixX<Scalar> nullspace(const MatrixX<Scalar>& m) {
  const auto ech = row_reduce(m);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < cols; ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
  }
  MatrixX<Scalar> basis = MatrixX<Scalar>::Zero(cols, static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const Eigen::Index f = free_cols[k];
    const auto kk = static_cast<Eigen::Index>(k);
    basis(f, kk) = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
      const auto rr = static_cast<Eigen::Index>(r);
      if (ech.reduced(rr, f) != 0) basis(ech.pivots[r], kk) = -ech.reduced(rr, f);
    }
  }
  return basis;
}

/// Some solution of a x = b, or nullopt when the system is inconsistent.
template <typename Scalar>
std::optional<VectorX<Scalar>> solve(const MatrixX<Scalar>& a, const VectorX<Scalar>& b) {
  MatrixX<Scalar> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const auto ech = row_reduce(aug);
  VectorX<Scalar> x = VectorX<Scalar>::Zero(a.cols());
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    const Eigen::Index p = ech.pivots[r];
    if (p == a.cols()) return std::nullopt;
    x(p) = ech.reduced(static_cast<Eigen::Index>(r), a.cols());
  }
  return x;
}

/// Indices of the first maximal set of linearly independent rows.
template <typename Scalar>
std::vector<Eigen::Index> independent_rows(const MatrixX<Scalar>& m) {
  MatrixX<Scalar> t = m.transpose();
  auto ech = row_reduce(std::move(t));
  return ech.pivots;
}

}  // namespace dressian::linalg
