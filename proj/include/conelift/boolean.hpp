#pragma once

#include <conelift/rational.hpp>

#include <boost/dynamic_bitset.hpp>

namespace conelift {

using BoolMatrix = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;
using Bitset = boost::dynamic_bitset<>;

/// supp(M): true exactly where M is nonzero.
BoolMatrix support(const RatMatrix& m);

/// Product in Boolean arithmetic (1 + 1 = 1).
BoolMatrix boolean_product(const BoolMatrix& a, const BoolMatrix& b);

/// A Boolean factorization T = A B with inner dimension A.cols() = B.rows().
struct BooleanFactorization {
  BoolMatrix a;
  BoolMatrix b;

  Index size() const { return a.cols(); }
};

bool verify_boolean(const BoolMatrix& t, const BooleanFactorization& f);

}  // namespace conelift
