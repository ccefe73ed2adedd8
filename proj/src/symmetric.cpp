#include <conelift/error.hpp>
#include <conelift/symmetric.hpp>

namespace conelift {

SymmetricMatrix::SymmetricMatrix(RatMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw Error(ErrorCode::ShapeMismatch, "symmetric matrix must be square");
  for (Index i = 0; i < m_.rows(); ++i)
    for (Index j = i + 1; j < m_.cols(); ++j)
      if (m_(i, j) != m_(j, i)) throw Error(ErrorCode::InvalidInput, "matrix is not symmetric");
}

SymmetricMatrix SymmetricMatrix::zero(Index dim) { return SymmetricMatrix(RatMatrix::Zero(dim, dim)); }

SymmetricMatrix SymmetricMatrix::outer(const RatVector& x) { return SymmetricMatrix(RatMatrix(x * x.transpose())); }

Rational inner(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::ShapeMismatch, "inner product of matrices of different sizes");
  return a.matrix().cwiseProduct(b.matrix()).sum();
}

SymmetricMatrix block_diagonal(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  RatMatrix m = RatMatrix::Zero(a.dim() + b.dim(), a.dim() + b.dim());
  m.topLeftCorner(a.dim(), a.dim()) = a.matrix();
  m.bottomRightCorner(b.dim(), b.dim()) = b.matrix();
  return SymmetricMatrix(std::move(m));
}

Index flat_size(Index dim) { return dim * (dim + 1) / 2; }

Index flat_index(Index i, Index j, Index dim) {
  if (i > j) std::swap(i, j);
  if (i == j) return i;
  // off-diagonal (i, j), i < j, listed row by row after the diagonal
  return dim + i * (2 * dim - i - 1) / 2 + (j - i - 1);
}

RatVector flatten(const SymmetricMatrix& x) {
  const Index n = x.dim();
  RatVector z(flat_size(n));
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j) z(flat_index(i, j, n)) = x(i, j);
  return z;
}

RatVector flatten_dual(const SymmetricMatrix& b) {
  const Index n = b.dim();
  RatVector z(flat_size(n));
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j) z(flat_index(i, j, n)) = i == j ? b(i, j) : Rational(2 * b(i, j));
  return z;
}

SymmetricMatrix unflatten(const RatVector& z, Index dim) {
  if (z.size() != flat_size(dim)) throw Error(ErrorCode::ShapeMismatch, "flattened length does not match dimension");
  RatMatrix m(dim, dim);
  for (Index i = 0; i < dim; ++i)
    for (Index j = i; j < dim; ++j) m(i, j) = m(j, i) = z(flat_index(i, j, dim));
  return SymmetricMatrix(std::move(m));
}

}  // namespace conelift
