#pragma once

// Exact linear algebra over a field scalar (Rational in practice). Pivoting picks the
// first nonzero entry, so these routines are only meaningful for exact scalars.

#include "vortexmod/rational.hpp"

#include <Eigen/Core>

#include <type_traits>
#include <utility>
#include <vector>

namespace vortexmod {

template <typename Scalar>
inline constexpr bool is_exact_scalar_v = !std::is_floating_point_v<Scalar>;

template <typename Scalar>
struct Echelon {
  MatrixX<Scalar> reduced;             // reduced row echelon form, zero rows dropped
  std::vector<Eigen::Index> pivots;    // pivot column of each row of `reduced`

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

namespace detail {

template <typename Scalar>
void swap_rows(MatrixX<Scalar>& m, Eigen::Index a, Eigen::Index b) {
  if (a == b) return;
  for (Eigen::Index j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

// row(target) -= factor * row(source), starting at column `from`.
template <typename Scalar>
void axpy_row(MatrixX<Scalar>& m, Eigen::Index target, Eigen::Index source, const Scalar& factor,
              Eigen::Index from) {
  for (Eigen::Index j = from; j < m.cols(); ++j) {
    if (!is_zero(m(source, j))) m(target, j) -= factor * m(source, j);
  }
}

}  // namespace detail

template <typename Derived>
Echelon<typename Derived::Scalar> reduced_row_echelon(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  static_assert(is_exact_scalar_v<Scalar>, "exact pivoting needs an exact scalar type");

  MatrixX<Scalar> m = input;
  Echelon<Scalar> out;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index p = row;
    while (p < m.rows() && is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    detail::swap_rows(m, row, p);
    const Scalar inv = Scalar(1) / m(row, col);
    for (Eigen::Index j = col; j < m.cols(); ++j) {
      if (!is_zero(m(row, j))) m(row, j) *= inv;
    }
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      const Scalar f = m(i, col);
      detail::axpy_row(m, i, row, f, col);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = m.topRows(row);
  return out;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& a) {
  return reduced_row_echelon(a).rank();
}

/// Basis of the row space: the nonzero rows of the reduced echelon form.
template <typename Derived>
MatrixX<typename Derived::Scalar> row_space(const Eigen::MatrixBase<Derived>& a) {
  return reduced_row_echelon(a).reduced;
}

/// Columns span {x : a x = 0}.
template <typename Derived>
MatrixX<typename Derived::Scalar> null_space(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const auto ech = reduced_row_echelon(a);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (auto p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    if (!is_pivot[static_cast<std::size_t>(j)]) free_cols.push_back(j);
  }
  MatrixX<Scalar> basis = MatrixX<Scalar>::Zero(a.cols(), static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const auto f = free_cols[k];
    const auto kk = static_cast<Eigen::Index>(k);
    basis(f, kk) = Scalar(1);
    for (Eigen::Index r = 0; r < ech.rank(); ++r) {
      basis(ech.pivots[static_cast<std::size_t>(r)], kk) = -ech.reduced(r, f);
    }
  }
  return basis;
}

template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  static_assert(is_exact_scalar_v<Scalar>, "exact pivoting needs an exact scalar type");
  eigen_assert(input.rows() == input.cols());

  MatrixX<Scalar> m = input;
  const Eigen::Index n = m.rows();
  Scalar det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index p = col;
    while (p < n && is_zero(m(p, col))) ++p;
    if (p == n) return Scalar(0);
    if (p != col) {
      detail::swap_rows(m, col, p);
      det = -det;
    }
    det *= m(col, col);
    const Scalar inv = Scalar(1) / m(col, col);
    for (Eigen::Index i = col + 1; i < n; ++i) {
      if (is_zero(m(i, col))) continue;
      const Scalar f = m(i, col) * inv;
      detail::axpy_row(m, i, col, f, col);
    }
  }
  return det;
}

/// Unique solution of a x = b for square nonsingular a; empty vector when a is singular.
template <typename DerivedA, typename DerivedB>
VectorX<typename DerivedA::Scalar> solve_exact(const Eigen::MatrixBase<DerivedA>& a,
                                               const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  eigen_assert(a.rows() == a.cols() && b.rows() == a.rows() && b.cols() == 1);
  const Eigen::Index n = a.rows();
  MatrixX<Scalar> aug(n, n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  const auto ech = reduced_row_echelon(aug);
  if (ech.rank() != n || ech.pivots.back() != n - 1) return {};
  return ech.reduced.col(n);
}

/// Reduces `v` modulo the row space held in `ech`; the result vanishes on every pivot column.
template <typename Scalar>
VectorX<Scalar> reduce_modulo(const Echelon<Scalar>& ech, VectorX<Scalar> v) {
  for (Eigen::Index r = 0; r < ech.rank(); ++r) {
    const auto p = ech.pivots[static_cast<std::size_t>(r)];
    if (is_zero(v(p))) continue;
    const Scalar f = v(p);
    for (Eigen::Index j = p; j < v.size(); ++j) {
      if (!is_zero(ech.reduced(r, j))) v(j) -= f * ech.reduced(r, j);
    }
  }
  return v;
}

/// Entrywise equality with matching shapes.
template <typename DerivedA, typename DerivedB>
bool exact_equal(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (a(i, j) != b(i, j)) return false;
    }
  }
  return true;
}

/// Exact matrix product. Eigen's own product operators do not instantiate for Rational.
template <typename DerivedA, typename DerivedB>
MatrixX<typename DerivedA::Scalar> exact_product(const Eigen::MatrixBase<DerivedA>& a,
                                                 const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  eigen_assert(a.cols() == b.rows());
  MatrixX<Scalar> out = MatrixX<Scalar>::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) {
        if (!is_zero(b(k, j))) out(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return out;
}

}  // namespace vortexmod
