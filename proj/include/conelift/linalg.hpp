#pragma once

// Exact dense linear algebra over a field scalar (Rational in practice).
// Pivoting is deterministic: columns left to right, first nonzero row from the top.

#include <conelift/error.hpp>
#include <conelift/rational.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace conelift {

namespace detail {

template <typename Scalar>
void scale_rows_to_integers(Matrix<Scalar>&) {}

inline void scale_rows_to_integers(RatMatrix& m) {
  for (Index i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (Index j = 0; j < m.cols(); ++j) l = boost::multiprecision::lcm(l, denominator(m(i, j)));
    if (l != 1) m.row(i) *= Rational(l);
  }
}

}  // namespace detail

template <typename Scalar>
struct Rref {
  Matrix<Scalar> reduced;
  std::vector<Index> pivots;  // pivot column of each nonzero row, increasing

  Index rank() const { return static_cast<Index>(pivots.size()); }
};

/// Reduced row echelon form by Gauss-Jordan elimination.
template <typename Derived>
Rref<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Rref<Scalar> out{input, {}};
  Matrix<Scalar>& m = out.reduced;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    m.row(row) *= inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Scalar f = m(i, col);
      m.row(i) -= f * m.row(row);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

/// Exact rank by fraction-free (Bareiss) elimination; rows are first scaled to integers.
template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> m = input;
  detail::scale_rows_to_integers(m);
  Scalar prev(1);
  Index r = 0;
  for (Index col = 0; col < m.cols() && r < m.rows(); ++col) {
    Index piv = r;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) m.row(piv).swap(m.row(r));
    const Scalar p = m(r, col);
    for (Index i = r + 1; i < m.rows(); ++i) {
      for (Index j = col + 1; j < m.cols(); ++j) m(i, j) = (p * m(i, j) - m(i, col) * m(r, j)) / prev;
      m(i, col) = 0;
    }
    prev = p;
    ++r;
  }
  return r;
}

/// Columns form a basis of {x : m x = 0}; the result has zero columns when the kernel is trivial.
template <typename Derived>
Matrix<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto red = rref(m);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : red.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Matrix<Scalar> basis(n, n - red.rank());
  Index c = 0;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis.col(c).setZero();
    basis(free, c) = 1;
    for (Index i = 0; i < red.rank(); ++i) basis(red.pivots[static_cast<std::size_t>(i)], c) = -red.reduced(i, free);
    ++c;
  }
  return basis;
}

/// A particular solution of a x = b (free variables set to zero), or nullopt when inconsistent.
template <typename DA, typename DB>
std::optional<Vector<typename DA::Scalar>> solve_affine(const Eigen::MatrixBase<DA>& a,
                                                        const Eigen::MatrixBase<DB>& b) {
  using Scalar = typename DA::Scalar;
  Matrix<Scalar> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const auto red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == a.cols()) return std::nullopt;
  Vector<Scalar> x = Vector<Scalar>::Zero(a.cols());
  for (Index i = 0; i < red.rank(); ++i) x(red.pivots[static_cast<std::size_t>(i)]) = red.reduced(i, a.cols());
  return x;
}

/// Nonzero rows of the reduced echelon form of [e_mat | e_rhs]: a canonical basis of the system.
template <typename Scalar>
std::pair<Matrix<Scalar>, Vector<Scalar>> reduce_system(const Matrix<Scalar>& e_mat, const Vector<Scalar>& e_rhs) {
  Matrix<Scalar> aug(e_mat.rows(), e_mat.cols() + 1);
  aug << e_mat, e_rhs;
  const auto red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == e_mat.cols())
    throw Error(ErrorCode::InconsistentSystem, "affine system has no solution");
  const Index r = red.rank();
  return {red.reduced.topLeftCorner(r, e_mat.cols()), red.reduced.col(e_mat.cols()).head(r)};
}

/// Equalities in the kept variables whose solution set is the projection of {z : e_mat z = e_rhs}.
/// Output is in reduced echelon form over the kept variables (in the order given by `keep`).
template <typename Scalar>
std::pair<Matrix<Scalar>, Vector<Scalar>> affine_eliminate(const Matrix<Scalar>& e_mat,
                                                           const Vector<Scalar>& e_rhs,
                                                           const std::vector<Index>& keep) {
  const Index n = e_mat.cols();
  std::vector<bool> kept(static_cast<std::size_t>(n), false);
  for (Index k : keep) {
    if (k < 0 || k >= n) throw Error(ErrorCode::ShapeMismatch, "kept variable out of range");
    kept[static_cast<std::size_t>(k)] = true;
  }
  std::vector<Index> order;
  for (Index j = 0; j < n; ++j)
    if (!kept[static_cast<std::size_t>(j)]) order.push_back(j);
  const Index eliminated = static_cast<Index>(order.size());
  order.insert(order.end(), keep.begin(), keep.end());

  Matrix<Scalar> aug(e_mat.rows(), n + 1);
  for (Index j = 0; j < n; ++j) aug.col(j) = e_mat.col(order[static_cast<std::size_t>(j)]);
  aug.col(n) = e_rhs;
  const auto red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == n)
    throw Error(ErrorCode::InconsistentSystem, "affine system has no solution");

  std::vector<Index> rows;
  for (Index i = 0; i < red.rank(); ++i)
    if (red.pivots[static_cast<std::size_t>(i)] >= eliminated) rows.push_back(i);
  const Index kk = static_cast<Index>(keep.size());
  Matrix<Scalar> out(static_cast<Index>(rows.size()), kk);
  Vector<Scalar> rhs(static_cast<Index>(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out.row(static_cast<Index>(r)) = red.reduced.row(rows[r]).segment(eliminated, kk);
    rhs(static_cast<Index>(r)) = red.reduced(rows[r], n);
  }
  return {out, rhs};
}

/// True when the two consistent affine systems have the same solution set.
template <typename Scalar>
bool same_affine_system(const Matrix<Scalar>& a, const Vector<Scalar>& ra, const Matrix<Scalar>& b,
                        const Vector<Scalar>& rb) {
  if (a.cols() != b.cols()) return false;
  const auto [ea, fa] = reduce_system(a, ra);
  const auto [eb, fb] = reduce_system(b, rb);
  return ea == eb && fa == fb;
}

}  // namespace conelift
