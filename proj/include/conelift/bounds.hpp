#pragma once

// Lower and upper bounds on nonnegative, psd and Boolean ranks.

#include <conelift/boolean.hpp>
#include <conelift/factorize.hpp>
#include <conelift/polytope.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace conelift {

struct BooleanRankResult {
  bool exact = false;
  Index lower = 0;
  Index upper = 0;
  BooleanFactorization cover;  // a cover realizing the upper bound
  std::int64_t nodes = 0;
};

/// Minimum number of all-ones rectangles covering the true entries, by branch and bound over
/// maximal rectangles. Greedy cover for the upper bound, greedy fooling set for the lower bound.
/// When the budget runs out the result is an interval.
BooleanRankResult boolean_rank(const BoolMatrix& s, std::int64_t budget = 1'000'000);

/// Smallest k with p <= C(k, floor(k/2)).
Index sperner_bound(Index p);

struct LogBound {
  Index faces = 0;
  Index integer_bound = 0;  // ceil(log2(faces))
  std::string decimal;      // log2(faces) to six decimals
};

LogBound goemans_bound(Index faces);

/// ceil((sqrt(1 + 8 r) - 1) / 2), the least t with t (t + 1) / 2 >= r.
Index psd_lower_from_rank(Index r);

/// Order embedding of a face lattice into the subsets of [dim]; assignment is parallel to lattice.faces.
struct LatticeEmbedding {
  FaceLattice lattice;
  Index dim = 0;
  std::vector<Bitset> assignment;
};

bool verify_embedding(const LatticeEmbedding& e);

/// Faces are the intersections of facet vertex sets of the incidence matrix (vertex x facet, true
/// when the vertex lies on the facet); f must factor the complement of the incidence matrix.
/// The face F goes to the union of the rows of f.a over its vertices. Throws InvalidInput.
LatticeEmbedding lattice_embedding_from_boolean(const BooleanFactorization& f, const BoolMatrix& incidence);

/// Row v of A is the image of the vertex v; column j of B is the complement of the image of facet j.
/// Throws InvalidInput when e is not an order embedding or a vertex or facet is missing from it.
BooleanFactorization boolean_from_lattice_embedding(const LatticeEmbedding& e, const BoolMatrix& incidence);

/// With n the affine dimension of P: n + 1 when some vertex lies on exactly n facets, each of its
/// facets is missed by a vertex lying on the other n - 1, and some facet misses the vertex. The
/// slack matrix then has an (n+1) x (n+1) submatrix that scales to [[1, 0], [*, I]].
std::optional<Index> psd_simple_vertex_bound(const Polytope& p);

/// A rational N with N o N = M and small rank, signs chosen greedily row by row; nothing when
/// some entry is not a square of a rational.
std::optional<RatMatrix> signed_square_root(const RatMatrix& m);

enum class RankTarget { NonnegativeRank, PsdRank, BooleanRank };

std::string_view to_string(RankTarget t);
RankTarget parse_rank_target(std::string_view text);

struct Bound {
  Index value = 0;
  std::string rule;
};

struct RankReport {
  RankTarget target = RankTarget::NonnegativeRank;
  Bound lower;
  Bound upper;
  std::optional<Index> exact;
  std::optional<ConeFactorization> witness;          // exactly verified, of size upper
  std::optional<BooleanFactorization> boolean_witness;
};

struct RankReportOptions {
  std::int64_t budget = 200'000;
  std::uint64_t seed = 0;
  int threads = 1;
  bool heuristics = true;  // promoted numeric factorizations as upper bounds
  bool search = true;      // exact pattern search for the nonnegative rank
};

RankReport rank_report(const RatMatrix& m, RankTarget target, const RankReportOptions& opts = {});
/// Same on the canonical slack matrix, adding the face lattice and simple-vertex bounds.
RankReport rank_report(const Polytope& p, RankTarget target, const RankReportOptions& opts = {});

}  // namespace conelift
