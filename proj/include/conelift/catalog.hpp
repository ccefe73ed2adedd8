#pragma once

// Named polytopes, matrices and factorizations used by the examples command and the acceptance run.

#include <conelift/factorize.hpp>
#include <conelift/polytope.hpp>

#include <string>
#include <vector>

namespace conelift::catalog {

/// Affine image of the regular hexagon with vertices (1,0),(1,1),(0,1),(-1,0),(-1,-1),(0,-1); its
/// canonical slack matrix is hexagon_slack() with facets in edge order.
Polytope regular_hexagon();
RatMatrix hexagon_slack();
/// Size-5 orthant factorization of hexagon_slack(): A is 6 x 5, B is 5 x 6.
RatMatrix hexagon_factor_a();
RatMatrix hexagon_factor_b();

/// The hexagon with vertices (0,-1),(1,-1),(2,0),(1,3),(0,2),(-1,0).
Polytope irregular_hexagon();
/// The 6 x 6 hexagon-type matrix with first row (0,0,1,4,3,1), which has no size-5 orthant
/// factorization.
RatMatrix irregular_hexagon_matrix();

/// (i - j)^2 for 1 <= i, j <= n, and the matrix i - j whose entrywise square it is.
RatMatrix squared_distance(Index n);
RatMatrix difference_matrix(Index n);

/// Convex n-gon with rational vertices on the unit circle near the angles 2 pi (k + 1/2) / n - pi.
Polytope cyclic_polygon(Index n);
/// [-1, 1]^n.
Polytope cube(Index n);

/// Rational point ((1 - t^2) / (1 + t^2), 2 t / (1 + t^2)) on the unit circle.
RatVector circle_point(const Rational& t);
/// The psd-2 maps of the unit disk: A(x, y) = [[1 + x, y], [y, 1 - x]], B = [[1 - x, -y], [-y, 1 + x]] / 2.
SymmetricMatrix disk_a(const RatVector& p);
SymmetricMatrix disk_b(const RatVector& p);

}  // namespace conelift::catalog
