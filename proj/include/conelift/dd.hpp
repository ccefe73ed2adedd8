#pragma once

// Double description method over exact rationals.

#include <conelift/rational.hpp>

#include <vector>

namespace conelift {

struct ConeGenerators {
  std::vector<RatVector> rays;  // extreme rays of the pointed part, primitive integer vectors
  RatMatrix lineality;          // columns span the lineality space (zero columns when pointed)
};

/// Generators of {x : g x >= 0}. Constraints are inserted in row order, adjacency is decided by
/// the rank of the jointly tight constraints, and each ray is kept primitive.
ConeGenerators cone_generators(const RatMatrix& g);

struct Halfspace {
  RatVector a;
  Rational b;  // a . x <= b for inequalities, a . x = b for equalities
};

struct Polyhedron {
  std::vector<RatVector> vertices;
  std::vector<RatVector> rays;
  RatMatrix lineality;
};

/// Vertices, extreme rays and lineality of {x : a_i . x <= b_i, c_k . x = d_k}.
/// Throws Error(Infeasible) when empty.
Polyhedron vertex_enumeration(const std::vector<Halfspace>& inequalities, const std::vector<Halfspace>& equalities,
                              Index dim);

}  // namespace conelift
