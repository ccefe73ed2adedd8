#pragma once

// Cone factorizations M_ij = <a_i, b_j> of nonnegative matrices.

#include <conelift/boolean.hpp>
#include <conelift/polytope.hpp>
#include <conelift/symmetric.hpp>

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace conelift {

enum class ConeKind { Orthant, Psd, CompletelyPositive };

std::string_view to_string(ConeKind kind);
ConeKind parse_cone_kind(std::string_view text);

struct ConeDescriptor {
  ConeKind kind = ConeKind::Orthant;
  Index size = 0;

  friend bool operator==(const ConeDescriptor&, const ConeDescriptor&) = default;
};

/// A vector for the orthant, a symmetric matrix for the psd and completely positive cones.
using ConeElement = std::variant<RatVector, SymmetricMatrix>;

Rational inner(const ConeElement& a, const ConeElement& b);

struct ConeFactorization {
  ConeDescriptor cone;
  std::vector<ConeElement> a_list;  // one per row of M, in K
  std::vector<ConeElement> b_list;  // one per column of M, in the dual cone
  /// Completely positive cone only: optional N >= 0 with a_i = N^T N.
  std::vector<std::optional<RatMatrix>> a_certificates;

  Index rows() const { return static_cast<Index>(a_list.size()); }
  Index cols() const { return static_cast<Index>(b_list.size()); }
};

/// Orthant factorization with a_i = row i of a (p x k) and b_j = column j of b (k x q).
ConeFactorization orthant_factorization(const RatMatrix& a, const RatMatrix& b);
/// Inverse of orthant_factorization; throws InvalidInput for other cones.
RatMatrix orthant_a(const ConeFactorization& f);
RatMatrix orthant_b(const ConeFactorization& f);

/// The matrix of inner products <a_i, b_j>.
RatMatrix product_matrix(const ConeFactorization& f);

bool in_cone(const ConeElement& x, const ConeDescriptor& cone, const std::optional<RatMatrix>& certificate = std::nullopt);
bool in_dual_cone(const ConeElement& x, const ConeDescriptor& cone);

/// Exact inner products and exact cone membership of every factor. Throws ShapeMismatch when the
/// list lengths do not match the matrix.
bool verify_factorization(const RatMatrix& m, const ConeFactorization& f);

/// M = I M when p <= q, M = M I otherwise; the zero matrix gets size 0. Throws NegativeEntry.
ConeFactorization trivial_orthant_factorization(const RatMatrix& m);

/// Pads an orthant factorization with zero coordinates up to the given size.
ConeFactorization pad_orthant(const ConeFactorization& f, Index size);

/// The same factorization with every vector replaced by the diagonal matrix it spans.
ConeFactorization orthant_as_psd(const ConeFactorization& f);

/// supp(A), supp(B) of an orthant factorization.
BooleanFactorization support_pattern(const ConeFactorization& f);

enum class SearchStatus { Found, None, BudgetExceeded };

std::string_view to_string(SearchStatus s);

struct PatternSearchStats {
  std::int64_t rectangles = 0;   // maximal all-nonzero rectangles of M
  std::int64_t covers = 0;       // multisets of k rectangles covering supp(M)
  std::int64_t rank_refuted = 0;
  std::int64_t ratio_refuted = 0;  // forced ratios inconsistent
  std::int64_t lp_refuted = 0;     // one side forced, the other side infeasible
  std::int64_t undecided = 0;
  std::int64_t nodes = 0;
};

struct PatternSearchResult {
  SearchStatus status = SearchStatus::None;
  std::optional<ConeFactorization> factorization;
  PatternSearchStats stats;
};

inline constexpr std::int64_t kDefaultPatternBudget = 2'000'000;

/// Exact decision of rank_+(M) <= k. Every factorization is reduced to a multiset of k maximal
/// rectangles of supp(M) covering it; each cover is refuted by a rank count over square
/// submatrices, by inconsistent forced ratios, or by an infeasible exact LP once one side is
/// forced, or solved exactly. Covers surviving all of these make the result BudgetExceeded.
/// Workers split the covers; the first cover in enumeration order that is solved wins.
PatternSearchResult orthant_pattern_search(const RatMatrix& m, Index k, std::int64_t budget = kDefaultPatternBudget,
                                           int threads = 1);

/// Exact attempt at an orthant factorization whose support lies inside the given pattern:
/// forced ratios, then an exact LP for the other side, then alternating exact solves from
/// all-ones seeds.
std::optional<ConeFactorization> solve_orthant_pattern(const RatMatrix& m, const BooleanFactorization& pattern);

struct NumericFactorization {
  ConeDescriptor cone;
  std::vector<Eigen::MatrixXd> a_list;  // k x 1 for the orthant, k x k otherwise
  std::vector<Eigen::MatrixXd> b_list;
  double residual = 0;  // max |<a_i, b_j> - M_ij|
  std::uint64_t seed = 0;
};

struct HeuristicOptions {
  std::uint64_t seed = 0;
  int restarts = 10;
  double tol = 1e-8;
  int max_iterations = 5000;
};

/// Alternating nonnegative least squares (HALS) from seeded random starts.
std::optional<NumericFactorization> nmf_heuristic(const RatMatrix& m, Index k, const HeuristicOptions& opts);

/// Local search over Gram factors a_i = U_i U_i^T, b_j = V_j V_j^T with an Armijo line search.
std::optional<NumericFactorization> psd_heuristic(const RatMatrix& m, Index k, const HeuristicOptions& opts);

/// Tries to turn a numeric orthant factorization into an exact one: rationalize one side at
/// 2^-bits and solve the other side by an exact LP, then fall back to the numeric support pattern.
std::optional<ConeFactorization> promote_orthant(const RatMatrix& m, const NumericFactorization& f, int bits = 40);

/// With M = V^T W a rank factorization, the entrywise square of M has the psd factorization
/// {v_i v_i^T}, {w_j w_j^T} of size rank(M).
ConeFactorization squared_factorization(const RatMatrix& m);

RatMatrix entrywise_square(const RatMatrix& m);

/// Factorization of the slack matrix of poly_product(P1, P2) (vertices row-major in P1, facets of
/// P1 then P2). Orthant factors next to psd factors are embedded as diagonal matrices.
ConeFactorization combine_product(const ConeFactorization& f1, const ConeFactorization& f2);

/// For the convex hull of P1 and P2 (origin interior in both): where each hull vertex came from
/// and, for each hull facet, convex weights over the canonical facet normals of P1 and of P2.
struct HullData {
  Polytope hull;
  std::vector<std::pair<int, Index>> vertex_source;  // (1 or 2, vertex index in that polytope)
  std::vector<RatVector> weights1;                   // per hull facet, over facets of P1
  std::vector<RatVector> weights2;
};

HullData compute_hull_data(const Polytope& p1, const Polytope& p2);

/// Factorization of the canonical slack matrix of data.hull from canonical factorizations of P1, P2.
/// Throws HullDataInconsistent when the weights do not reproduce the hull facets.
ConeFactorization combine_conv_union(const Polytope& p1, const ConeFactorization& f1, const Polytope& p2,
                                     const ConeFactorization& f2, const HullData& data);

/// Factorization of S^T (the polar's slack matrix): the two lists swap roles.
ConeFactorization transpose_polar(const ConeFactorization& f);

struct ProjectiveImage {
  Polytope polytope;  // vertices and facets in the order of the source
  ConeFactorization factorization;
};

/// Image of P under x -> Pmat x / (1 + <c, x>) with Pmat invertible. Facet j becomes
/// (a_j + c)^T Pmat^{-1} y <= 1 and a_i is divided by 1 + <c, v_i>.
ProjectiveImage transform_projective(const Polytope& p, const ConeFactorization& f, const RatMatrix& pmat,
                                     const RatVector& c);

}  // namespace conelift
