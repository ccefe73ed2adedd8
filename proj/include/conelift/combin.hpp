#pragma once

// Stable set polytopes, their theta-body and completely positive lifts, and symmetric lift bounds.

#include <conelift/cones.hpp>
#include <conelift/factorize.hpp>
#include <conelift/lift.hpp>
#include <conelift/polytope.hpp>

#include <utility>
#include <vector>

namespace conelift {

/// Simple undirected graph on 0..n-1; edges are stored as sorted pairs (i < j) in sorted order.
struct Graph {
  Index n = 0;
  std::vector<std::pair<Index, Index>> edges;

  bool adjacent(Index i, Index j) const;
};

/// Throws InvalidInput on loops, duplicate edges or endpoints out of range.
Graph make_graph(Index n, const std::vector<std::pair<Index, Index>>& edges);
Graph cycle_graph(Index n);
Graph path_graph(Index n);
Graph complete_graph(Index n);
Graph empty_graph(Index n);

/// All stable sets, by size and then lexicographically (the empty set first).
struct StableSetFamily {
  std::vector<std::vector<Index>> sets;
};

inline constexpr Index kMaxStableSetVertices = 25;
inline constexpr Index kMaxStabPolytopeVertices = 20;

/// Backtracking enumeration. Throws TooLarge above kMaxStableSetVertices.
StableSetFamily stable_sets(const Graph& g);

/// Incidence vector of a vertex subset.
RatVector characteristic_vector(const std::vector<Index>& set, Index n);

/// conv of the stable set incidence vectors, vertices in stable_sets order. Facets are scaled to
/// coprime integer coefficients. Throws TooLarge above kMaxStabPolytopeVertices.
Polytope stab_polytope(const Graph& g);

/// The psd-(n+1) slice X00 = 1, Xii = X0i, Xij = 0 on edges, read off on the diagonal. Preimages
/// are (1, x)(1, x)^T for the vertices of stab_polytope(g), each checked at build time. The
/// image contains STAB(G) and equals it for perfect graphs; the notes say so.
AffineLift theta_lift(const Graph& g);

/// n + 1 from the vertex at the origin of STAB(G), which lies on exactly the n nonnegativity facets.
Index psd_stab_lower(const Graph& g);

/// STAB(C5) with vertices 0, e1..e5, e1+e3, e2+e4, e3+e5, e4+e1, e5+e2 and facets x_i >= 0,
/// x_i + x_{i+1} <= 1, sum x <= 2, in that order.
Polytope c5_stab_polytope();

/// Copositive matrix for the odd-cycle facet sum x <= 2 of STAB(C5).
RatMatrix c5_odd_cycle_matrix();

/// Completely positive factorization of the slack matrix of c5_stab_polytope(): A(v) = (1, v)(1, v)^T
/// with certificates, B from the facets as above.
ConeFactorization c5_burer_factorization();

struct CopositivityCrossCheck {
  CopositivityStatus reduced = CopositivityStatus::Degenerate;  // a N - b b^T, one size smaller
  CopositivityStatus direct = CopositivityStatus::Degenerate;   // the matrix itself

  bool agree() const { return reduced == direct; }
};

/// Both exact copositivity checks of a matrix [[a, b^T], [b, N]] with a > 0, b <= 0.
/// Throws InvalidInput when the sign conditions fail.
CopositivityCrossCheck copositivity_cross_check(const RatMatrix& m);

/// max(k1, k2): k1 the least k with 2n | k!, k2 the least degree of a permutation whose order is
/// divisible by n (the sum of the prime powers in n). A lower bound on the size of a symmetric
/// orthant lift of the regular n-gon; equal to n for prime powers. Throws InvalidInput for n < 3.
Index symmetric_orthant_lower_bound(Index n);

}  // namespace conelift
