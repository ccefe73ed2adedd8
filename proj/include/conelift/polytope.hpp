#pragma once

#include <conelift/boolean.hpp>
#include <conelift/dd.hpp>
#include <conelift/rational.hpp>

#include <string>
#include <vector>

namespace conelift {

/// A polytope kept in both representations. Facets are a . x <= b; `equalities` describe the
/// affine hull when the polytope is not full-dimensional in its ambient space.
struct Polytope {
  Index dim = 0;
  std::vector<RatVector> vertices;
  std::vector<Halfspace> facets;
  std::vector<Halfspace> equalities;
  bool origin_interior = false;

  Index affine_dim() const { return dim - static_cast<Index>(equalities.size()); }
};

/// Exact irredundant H-representation of conv(points). Duplicate and non-extreme input points
/// are dropped; the surviving vertices keep their input order.
Polytope from_vertices(const std::vector<RatVector>& points);

/// Exact vertex list of {a_i . x <= b_i, c_k . x = d_k}. Facets keep the first input inequality
/// defining each facet. Throws Unbounded or Infeasible.
Polytope from_inequalities(const std::vector<Halfspace>& inequalities,
                           const std::vector<Halfspace>& equalities = {});

/// Replaces the facet list by `facets` (same facets, any order, any positive scaling).
/// Throws InvalidInput when they are not exactly the facets of p.
Polytope align_facets(const Polytope& p, const std::vector<Halfspace>& facets);

bool contains(const Polytope& p, const RatVector& x);

/// incidence(i, j) is true when vertex i lies on facet j.
BoolMatrix incidence(const Polytope& p);

struct SlackMatrix {
  RatMatrix matrix;  // rows = vertices, columns = facets
  std::vector<std::string> vertex_labels;
  std::vector<std::string> facet_labels;
};

/// Entry (i, j) = b_j - <a_j, p_i>, after scaling each facet to b_j = 1 when canonical.
SlackMatrix slack_matrix(const Polytope& p, bool canonical);

/// Facet j of p normalized so that b_j = 1 (origin must be interior).
RatVector canonical_normal(const Polytope& p, Index facet);

/// Vertex j of the polar is the canonical normal of facet j; facet i of the polar is vertex i.
Polytope polar(const Polytope& p);

struct FaceLattice {
  Index num_vertices = 0;
  std::vector<Bitset> faces;  // sorted by size, then bitset order; includes the empty face and the polytope

  std::size_t size() const { return faces.size(); }
  /// Index of a face, or -1.
  Index find(const Bitset& face) const;
};

FaceLattice face_lattice(const Polytope& p);
/// Lattice generated by the facet vertex sets (columns) of a vertex-facet incidence matrix.
FaceLattice face_lattice(const BoolMatrix& incidence);

/// Size of a largest antichain, by Dilworth's theorem: faces minus a maximum matching in the
/// strict-containment bipartite graph.
Index max_antichain(const FaceLattice& lattice);

Polytope poly_product(const Polytope& p1, const Polytope& p2);
Polytope poly_conv_union(const Polytope& p1, const Polytope& p2);
Polytope poly_minkowski(const Polytope& p1, const Polytope& p2);
Polytope poly_linear_image(const Polytope& p, const RatMatrix& t);
/// Image under x -> P x / (1 + <c, x>); requires 1 + <c, v> > 0 at every vertex.
Polytope poly_projective(const Polytope& p, const RatMatrix& pmat, const RatVector& c);

}  // namespace conelift
