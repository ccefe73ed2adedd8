#pragma once

// Exact feasibility for {x >= 0 : G x = h}: phase-one simplex with Bland's rule.

#include <conelift/linalg.hpp>

#include <optional>
#include <vector>

namespace conelift {

/// A basic feasible solution of {x >= 0, g x = h}, or nullopt when the set is empty.
template <typename Scalar>
std::optional<Vector<Scalar>> nonneg_solve(const Matrix<Scalar>& g, const Vector<Scalar>& h) {
  if (g.rows() != h.size()) throw Error(ErrorCode::ShapeMismatch, "nonneg_solve: rhs length");
  const Index m = g.rows();
  const Index n = g.cols();
  if (m == 0) return Vector<Scalar>(Vector<Scalar>::Zero(n));

  // Tableau over [x | artificials | rhs], with rows sign-normalized so rhs >= 0.
  Matrix<Scalar> t = Matrix<Scalar>::Zero(m, n + m + 1);
  for (Index i = 0; i < m; ++i) {
    const bool flip = h(i) < 0;
    for (Index j = 0; j < n; ++j) t(i, j) = flip ? Scalar(-g(i, j)) : g(i, j);
    t(i, n + i) = 1;
    t(i, n + m) = flip ? Scalar(-h(i)) : h(i);
  }
  std::vector<Index> basis(static_cast<std::size_t>(m));
  for (Index i = 0; i < m; ++i) basis[static_cast<std::size_t>(i)] = n + i;

  // Reduced costs of the phase-one objective (sum of artificials).
  auto reduced_cost = [&](Index j) {
    Scalar c = j >= n ? Scalar(1) : Scalar(0);
    for (Index i = 0; i < m; ++i)
      if (basis[static_cast<std::size_t>(i)] >= n) c -= t(i, j);
    return c;
  };

  for (;;) {
    Index enter = -1;
    for (Index j = 0; j < n + m; ++j) {
      if (reduced_cost(j) < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;
    Index leave = -1;
    Scalar best;
    for (Index i = 0; i < m; ++i) {
      if (t(i, enter) <= 0) continue;
      const Scalar ratio = t(i, n + m) / t(i, enter);
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) break;  // cannot happen: phase one is bounded below by zero
    const Scalar inv = Scalar(1) / t(leave, enter);
    t.row(leave) *= inv;
    for (Index i = 0; i < m; ++i) {
      if (i == leave || t(i, enter) == 0) continue;
      const Scalar f = t(i, enter);
      t.row(i) -= f * t.row(leave);
    }
    basis[static_cast<std::size_t>(leave)] = enter;
  }

  Vector<Scalar> x = Vector<Scalar>::Zero(n);
  for (Index i = 0; i < m; ++i) {
    const Index b = basis[static_cast<std::size_t>(i)];
    if (b >= n) {
      if (t(i, n + m) != 0) return std::nullopt;
    } else {
      x(b) = t(i, n + m);
    }
  }
  return x;
}

}  // namespace conelift
