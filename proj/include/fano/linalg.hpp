#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "fano/rational.hpp"

namespace fano {

using MatrixQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Reduced row echelon form with its pivot columns. Exact: a pivot is any
/// nonzero entry, so the scalar type must have exact arithmetic.
template <typename Scalar>
struct Echelon {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> reduced;
  std::vector<Eigen::Index> pivots;
};

template <typename Derived>
Echelon<typename Derived::Scalar> row_reduce(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Echelon<Scalar> out{m, {}};
  auto& a = out.reduced;
  const Scalar zero(0);
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index pivot = row;
    while (pivot < a.rows() && a(pivot, col) == zero) ++pivot;
    if (pivot == a.rows()) continue;
    a.row(pivot).swap(a.row(row));
    const Scalar inv = Scalar(1) / a(row, col);
    a.row(row) *= inv;
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == zero) continue;
      const Scalar factor = a(r, col);
      a.row(r) -= factor * a.row(row);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Eigen::Index>(row_reduce(m).pivots.size());
}

/// Basis of the right kernel {x : m x = 0}, one vector per column.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> null_space(
    const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto ech = row_reduce(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (auto p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> basis(
      m.cols(), m.cols() - static_cast<Eigen::Index>(ech.pivots.size()));
  basis.setConstant(Scalar(0));
  Eigen::Index k = 0;
  for (Eigen::Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, k) = Scalar(1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r)
      basis(ech.pivots[r], k) = -ech.reduced(static_cast<Eigen::Index>(r), free);
    ++k;
  }
  return basis;
}

/// One solution of a x = b, or nullopt when the system is inconsistent.
template <typename DerivedA, typename DerivedB>
std::optional<Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, 1>> solve_exact(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const auto ech = row_reduce(aug);
  if (!ech.pivots.empty() && ech.pivots.back() == a.cols()) return std::nullopt;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x(a.cols());
  x.setConstant(Scalar(0));
  for (std::size_t r = 0; r < ech.pivots.size(); ++r)
    x(ech.pivots[r]) = ech.reduced(static_cast<Eigen::Index>(r), a.cols());
  return x;
}

/// Columns of `extra` that extend span(base) one dimension at a time.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> complement_columns(
    const Eigen::MatrixBase<DerivedA>& base, const Eigen::MatrixBase<DerivedB>& extra) {
  using Matrix = Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix acc = base;
  Matrix chosen(extra.rows(), 0);
  Eigen::Index rank = exact_rank(acc);
  for (Eigen::Index c = 0; c < extra.cols(); ++c) {
    Matrix trial(acc.rows(), acc.cols() + 1);
    trial << acc, extra.col(c);
    const Eigen::Index r = exact_rank(trial);
    if (r > rank) {
      acc = trial;
      rank = r;
      chosen.conservativeResize(Eigen::NoChange, chosen.cols() + 1);
      chosen.col(chosen.cols() - 1) = extra.col(c);
    }
  }
  return chosen;
}

}  // namespace fano
