#pragma once

#include <conelift/rational.hpp>

#include <optional>

namespace conelift {

/// An exact symmetric matrix. Construction rejects non-symmetric input.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(RatMatrix m);

  static SymmetricMatrix zero(Index dim);
  /// x x^T
  static SymmetricMatrix outer(const RatVector& x);

  Index dim() const { return m_.rows(); }
  const RatMatrix& matrix() const { return m_; }
  const Rational& operator()(Index i, Index j) const { return m_(i, j); }

  friend bool operator==(const SymmetricMatrix& a, const SymmetricMatrix& b) { return a.m_ == b.m_; }

 private:
  RatMatrix m_;
};

/// Trace inner product <A, B> = sum_ij A_ij B_ij.
Rational inner(const SymmetricMatrix& a, const SymmetricMatrix& b);

SymmetricMatrix block_diagonal(const SymmetricMatrix& a, const SymmetricMatrix& b);

/// Upper-triangle coordinates: the diagonal first, then (0,1),(0,2),...,(1,2),...
Index flat_size(Index dim);
RatVector flatten(const SymmetricMatrix& x);
/// Same layout with off-diagonal entries doubled, so flatten(X).dot(flatten_dual(B)) = <X, B>.
RatVector flatten_dual(const SymmetricMatrix& b);
SymmetricMatrix unflatten(const RatVector& z, Index dim);
/// Position of entry (i, j) in the flattened layout.
Index flat_index(Index i, Index j, Index dim);

}  // namespace conelift
