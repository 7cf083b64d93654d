#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dressian/linalg.hpp"

// Dense two-phase tableau simplex with Bland's rule. Exact scalars only: Bland
// guarantees termination on the highly degenerate systems produced by the fan
// enumeration, and ties are decided exactly.

namespace dressian::lp {

enum class Status { Optimal, Infeasible, Unbounded };

template <typename Scalar>
struct Result {
  Status status = Status::Infeasible;
  Scalar value{};
  VectorX<Scalar> x;
};

/// maximize c.z  subject to  eq_a z = eq_b,  ub_a z <= ub_b,  z free.
template <typename Scalar>
struct Problem {
  MatrixX<Scalar> eq_a;
  VectorX<Scalar> eq_b;
  MatrixX<Scalar> ub_a;
  VectorX<Scalar> ub_b;
  VectorX<Scalar> objective;
};

namespace detail {

template <typename Scalar>
class Tableau {
 public:
  // Rows 0..m-1 are constraints, row m is the objective; last column is rhs.
  Tableau(const MatrixX<Scalar>& a, const VectorX<Scalar>& b)
      : m_(a.rows()), vars_(a.cols() + a.rows()), t_(MatrixX<Scalar>::Zero(a.rows() + 1, a.cols() + a.rows() + 2)) {
    // One spare column (index vars_) for the phase-one artificial variable.
    for (Eigen::Index i = 0; i < m_; ++i) {
      for (Eigen::Index j = 0; j < a.cols(); ++j) t_(i, j) = a(i, j);
      t_(i, a.cols() + i) = 1;
      t_(i, rhs()) = b(i);
      basis_.push_back(a.cols() + i);
    }
  }

  Eigen::Index rhs() const { return t_.cols() - 1; }
  Eigen::Index artificial() const { return vars_; }

  void pivot(Eigen::Index row, Eigen::Index col) {
    const Scalar inv = Scalar(1) / t_(row, col);
    for (Eigen::Index j = 0; j < t_.cols(); ++j) {
      if (t_(row, j) != 0) t_(row, j) *= inv;
    }
    for (Eigen::Index i = 0; i < t_.rows(); ++i) {
      if (i == row || t_(i, col) == 0) continue;
      const Scalar f = t_(i, col);
      for (Eigen::Index j = 0; j < t_.cols(); ++j) {
        if (t_(row, j) != 0) t_(i, j) -= f * t_(row, j);
      }
    }
    basis_[static_cast<std::size_t>(row)] = col;
  }

  // Runs Bland's rule over columns [0, limit). Returns false when unbounded.
  bool optimize(Eigen::Index limit) {
    for (;;) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < limit; ++j) {
        if (t_(m_, j) < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      Eigen::Index leave = -1;
      Scalar best{};
      for (Eigen::Index i = 0; i < m_; ++i) {
        if (t_(i, enter) <= 0) continue;
        Scalar ratio = t_(i, rhs()) / t_(i, enter);
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leave)])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  void set_objective(const VectorX<Scalar>& c) {
    t_.row(m_).setZero();
    for (Eigen::Index j = 0; j < c.size(); ++j) t_(m_, j) = -c(j);
    for (Eigen::Index i = 0; i < m_; ++i) {
      const Eigen::Index bv = basis_[static_cast<std::size_t>(i)];
      if (t_(m_, bv) == 0) continue;
      const Scalar f = t_(m_, bv);
      for (Eigen::Index j = 0; j < t_.cols(); ++j) {
        if (t_(i, j) != 0) t_(m_, j) -= f * t_(i, j);
      }
    }
  }

  // CLRS-style auxiliary problem. Returns false when infeasible.
  bool make_feasible() {
    Eigen::Index worst = -1;
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (t_(i, rhs()) < 0 && (worst < 0 || t_(i, rhs()) < t_(worst, rhs()))) worst = i;
    }
    if (worst < 0) return true;
    const Eigen::Index a = artificial();
    for (Eigen::Index i = 0; i < m_; ++i) t_(i, a) = -1;
    t_.row(m_).setZero();
    t_(m_, a) = 1;  // maximize -x_a
    pivot(worst, a);
    optimize(a + 1);
    if (t_(m_, rhs()) != 0) return false;
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (basis_[static_cast<std::size_t>(i)] != a) continue;
      for (Eigen::Index j = 0; j < a; ++j) {
        if (t_(i, j) != 0) {
          pivot(i, j);
          break;
        }
      }
    }
    for (Eigen::Index i = 0; i <= m_; ++i) t_(i, a) = 0;
    return true;
  }

  Scalar value() const { return t_(m_, rhs()); }

  VectorX<Scalar> solution(Eigen::Index n) const {
    VectorX<Scalar> x = VectorX<Scalar>::Zero(n);
    for (Eigen::Index i = 0; i < m_; ++i) {
      const Eigen::Index bv = basis_[static_cast<std::size_t>(i)];
      if (bv < n) x(bv) = t_(i, rhs());
    }
    return x;
  }

  Eigen::Index structural() const { return vars_; }

 private:
  Eigen::Index m_;
  Eigen::Index vars_;
  MatrixX<Scalar> t_;
  std::vector<Eigen::Index> basis_;
};

}  // namespace detail

/// maximize c.x  subject to  a x <= b,  x >= 0.
template <typename Scalar>
Result<Scalar> maximize_standard(const MatrixX<Scalar>& a, const VectorX<Scalar>& b, const VectorX<Scalar>& c) {
  detail::Tableau<Scalar> tab(a, b);
  Result<Scalar> out;
  if (!tab.make_feasible()) {
    out.status = Status::Infeasible;
    return out;
  }
  tab.set_objective(c);
  if (!tab.optimize(tab.structural())) {
    out.status = Status::Unbounded;
    return out;
  }
  out.status = Status::Optimal;
  out.value = tab.value();
  out.x = tab.solution(a.cols());
  return out;
}

template <typename Scalar>
Result<Scalar> solve(const Problem<Scalar>& p) {
  const Eigen::Index n = p.objective.size();
  VectorX<Scalar> base = VectorX<Scalar>::Zero(n);
  MatrixX<Scalar> free_dirs = MatrixX<Scalar>::Identity(n, n);
  if (p.eq_a.rows() > 0) {
    auto particular = linalg::solve<Scalar>(p.eq_a, p.eq_b);
    if (!particular) return {};
    base = *particular;
    free_dirs = linalg::nullspace<Scalar>(p.eq_a);
  }
  const Eigen::Index k = free_dirs.cols();
  const Eigen::Index m = p.ub_a.rows();
  MatrixX<Scalar> reduced = m > 0 ? MatrixX<Scalar>(p.ub_a * free_dirs) : MatrixX<Scalar>(0, k);
  VectorX<Scalar> rhs = m > 0 ? VectorX<Scalar>(p.ub_b - p.ub_a * base) : VectorX<Scalar>(0);
  VectorX<Scalar> cost = free_dirs.transpose() * p.objective;

  // y = y+ - y-
  MatrixX<Scalar> split(m, 2 * k);
  split << reduced, -reduced;
  VectorX<Scalar> split_cost(2 * k);
  split_cost << cost, -cost;

  auto res = maximize_standard<Scalar>(split, rhs, split_cost);
  Result<Scalar> out;
  out.status = res.status;
  if (res.status != Status::Optimal) return out;
  VectorX<Scalar> y = res.x.head(k) - res.x.tail(k);
  out.x = base + free_dirs * y;
  out.value = p.objective.dot(out.x);
  return out;
}

/// A point z with eq z = 0 and strict z > 0 componentwise, if one exists.
/// Maximizes a slack s <= 1 with strict z >= s; feasible iff the optimum is positive.
template <typename Scalar>
std::optional<VectorX<Scalar>> strictly_feasible(const MatrixX<Scalar>& eq, const MatrixX<Scalar>& strict) {
  const Eigen::Index n = eq.cols() > 0 ? eq.cols() : strict.cols();
  MatrixX<Scalar> dirs = eq.rows() > 0 ? linalg::nullspace<Scalar>(eq) : MatrixX<Scalar>(MatrixX<Scalar>::Identity(n, n));
  const Eigen::Index k = dirs.cols();
  if (strict.rows() == 0) return VectorX<Scalar>(VectorX<Scalar>::Zero(n));
  if (k == 0) return std::nullopt;
  const Eigen::Index m = strict.rows();
  MatrixX<Scalar> g = strict * dirs;
  // variables: y+ (k), y- (k), s ; rows: s - g y <= 0 ; s <= 1
  MatrixX<Scalar> a = MatrixX<Scalar>::Zero(m + 1, 2 * k + 1);
  a.block(0, 0, m, k) = -g;
  a.block(0, k, m, k) = g;
  a.block(0, 2 * k, m, 1).setOnes();
  a(m, 2 * k) = 1;
  VectorX<Scalar> b = VectorX<Scalar>::Zero(m + 1);
  b(m) = 1;
  VectorX<Scalar> c = VectorX<Scalar>::Zero(2 * k + 1);
  c(2 * k) = 1;
  auto res = maximize_standard<Scalar>(a, b, c);
  if (res.status != Status::Optimal || res.value <= 0) return std::nullopt;
  VectorX<Scalar> y = res.x.head(k) - res.x.segment(k, k);
  return VectorX<Scalar>(dirs * y);
}

}  // namespace dressian::lp
