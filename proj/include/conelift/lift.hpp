#pragma once

// Affine slices of cones projecting onto polytopes, built from and turned back into factorizations.

#include <conelift/factorize.hpp>
#include <conelift/polytope.hpp>

#include <string>
#include <vector>

namespace conelift {

/// {z in K : E z = e} mapped to R^n by x = R z + r. Cone coordinates are vectors for the orthant
/// and flattened upper triangles for the psd cone, so that <Z, B> = flatten(Z) . flatten_dual(B).
struct AffineLift {
  ConeDescriptor cone;
  RatMatrix e_mat;
  RatVector e_rhs;
  RatMatrix recovery;  // R, n x cone coordinates
  RatVector offset;    // r
  std::vector<RatVector> preimages;  // points of the slice, one per vertex of the target when known
  std::vector<std::string> notes;

  Index coords() const { return e_mat.cols(); }
  Index ambient() const { return recovery.rows(); }
  RatVector recover(const RatVector& z) const { return recovery * z + offset; }
};

/// Number of cone coordinates for a cone descriptor.
Index cone_coords(const ConeDescriptor& cone);
/// Cone element as a coordinate vector, for primal (points) or dual (functionals) use.
RatVector to_coords(const ConeElement& x, bool dual);
/// Membership of a coordinate vector in the cone.
bool coords_in_cone(const RatVector& z, const ConeDescriptor& cone);

/// The facet system a_j . x <= b_j used for slack matrices: canonical when the origin is interior.
std::vector<Halfspace> slack_facets(const Polytope& p);

/// Lift from a factorization of the slack matrix: {<z, B_j> = b_j - <a_j, x>} with x eliminated.
/// Throws ShapeMismatch, FactorizationInvalid, RecoveryNotUnique, InvalidInput (completely positive cone).
AffineLift build_lift(const Polytope& p, const ConeFactorization& f);

enum class LiftStatus { Verified, Refuted, PartialWitness };

std::string_view to_string(LiftStatus s);

struct LiftVerdict {
  LiftStatus status = LiftStatus::Refuted;
  std::vector<std::string> detail;
};

/// Orthant: vertices and rays of the slice, mapped through the recovery, compared exactly with P.
/// Psd: stored preimages lie in the slice and recover onto the vertices of P, and seeded convex
/// combinations of them recover into P; never more than PartialWitness.
LiftVerdict verify_lift(const Polytope& p, const AffineLift& lift, std::uint64_t seed = 0);

/// Orthant lift to factorization: A(v) is the lexicographically first vertex of the fiber over v,
/// B_j comes from an exact LP for the multipliers of the facet inequality on the slice. Coordinates
/// vanishing on the whole slice are dropped first (reported in `notes` when given) unless
/// restrict_to_face is false, in which case the lift must be proper. Throws NotProper, FiberEmpty.
ConeFactorization factorization_from_orthant_lift(const Polytope& p, const AffineLift& lift,
                                                  bool restrict_to_face = true,
                                                  std::vector<std::string>* notes = nullptr);

/// Lift of poly_product(P1, P2); orthant next to psd is embedded on the diagonal.
AffineLift lift_product(const AffineLift& l1, const AffineLift& l2);
/// Lift of the image of P under x -> T x.
AffineLift lift_linear_image(const AffineLift& lift, const RatMatrix& t);
/// Lift of the face cut out by the equation h.a . x = h.b.
AffineLift lift_face_restriction(const AffineLift& lift, const Halfspace& h);
/// Lift of the image of P under x -> Pmat x / (1 + <c, x>). Throws DegenerateImage when the slice
/// contains the origin of cone coordinates or Pmat is singular.
AffineLift lift_projective(const AffineLift& lift, const RatMatrix& pmat, const RatVector& c);

/// The orthant-2n lift of the cross-polytope {sum |x_i| <= 1}: z = (y - x, y + x), sum y_i = 1.
AffineLift cross_polytope_lift(Index n);
Polytope cross_polytope(Index n);

}  // namespace conelift
