#include <conelift/boolean.hpp>
#include <conelift/error.hpp>

namespace conelift {

BoolMatrix support(const RatMatrix& m) {
  BoolMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j) != 0;
  return out;
}

BoolMatrix boolean_product(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "boolean product: inner dimensions differ");
  BoolMatrix out = BoolMatrix::Constant(a.rows(), b.cols(), false);
  for (Index i = 0; i < a.rows(); ++i)
    for (Index k = 0; k < a.cols(); ++k)
      if (a(i, k))
        for (Index j = 0; j < b.cols(); ++j) out(i, j) = out(i, j) || b(k, j);
  return out;
}

bool verify_boolean(const BoolMatrix& t, const BooleanFactorization& f) {
  if (f.a.rows() != t.rows() || f.b.cols() != t.cols() || f.a.cols() != f.b.rows()) return false;
  return boolean_product(f.a, f.b) == t;
}

}  // namespace conelift
