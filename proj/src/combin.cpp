#include <conelift/bounds.hpp>
#include <conelift/combin.hpp>
#include <conelift/error.hpp>
#include <conelift/symmetric.hpp>

#include <algorithm>
#include <functional>

namespace conelift {

namespace {

// (1, v)(1, v)^T.
SymmetricMatrix lifted_outer(const RatVector& v) {
  RatVector w(v.size() + 1);
  w << 1, v;
  return SymmetricMatrix(RatMatrix(w * w.transpose()));
}

SymmetricMatrix outer(const RatVector& w) { return SymmetricMatrix(RatMatrix(w * w.transpose())); }

RatVector unit(Index n, Index i) {
  RatVector e = RatVector::Zero(n);
  e(i) = 1;
  return e;
}

}  // namespace

bool Graph::adjacent(Index i, Index j) const {
  const auto key = std::minmax(i, j);
  return std::binary_search(edges.begin(), edges.end(), std::pair<Index, Index>(key.first, key.second));
}

Graph make_graph(Index n, const std::vector<std::pair<Index, Index>>& edges) {
  if (n < 0) throw Error(ErrorCode::InvalidInput, "negative vertex count");
  Graph g;
  g.n = n;
  for (auto [i, j] : edges) {
    if (i < 0 || j < 0 || i >= n || j >= n) throw Error(ErrorCode::InvalidInput, "edge endpoint out of range");
    if (i == j) throw Error(ErrorCode::InvalidInput, "loops are not allowed");
    g.edges.emplace_back(std::min(i, j), std::max(i, j));
  }
  std::sort(g.edges.begin(), g.edges.end());
  if (std::adjacent_find(g.edges.begin(), g.edges.end()) != g.edges.end())
    throw Error(ErrorCode::InvalidInput, "duplicate edge");
  return g;
}

Graph cycle_graph(Index n) {
  if (n < 3) throw Error(ErrorCode::InvalidInput, "a cycle needs at least 3 vertices");
  std::vector<std::pair<Index, Index>> e;
  for (Index i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return make_graph(n, e);
}

Graph path_graph(Index n) {
  std::vector<std::pair<Index, Index>> e;
  for (Index i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return make_graph(n, e);
}

Graph complete_graph(Index n) {
  std::vector<std::pair<Index, Index>> e;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return make_graph(n, e);
}

Graph empty_graph(Index n) { return make_graph(n, {}); }

StableSetFamily stable_sets(const Graph& g) {
  if (g.n > kMaxStableSetVertices) throw Error(ErrorCode::TooLarge, "too many vertices for stable set enumeration");
  StableSetFamily out;
  std::vector<Index> current;
  std::function<void(Index)> grow = [&](Index from) {
    out.sets.push_back(current);
    for (Index v = from; v < g.n; ++v) {
      bool free = true;
      for (Index u : current) free = free && !g.adjacent(u, v);
      if (!free) continue;
      current.push_back(v);
      grow(v + 1);
      current.pop_back();
    }
  };
  grow(0);
  std::stable_sort(out.sets.begin(), out.sets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

RatVector characteristic_vector(const std::vector<Index>& set, Index n) {
  RatVector x = RatVector::Zero(n);
  for (Index i : set) x(i) = 1;
  return x;
}

Polytope stab_polytope(const Graph& g) {
  if (g.n > kMaxStabPolytopeVertices) throw Error(ErrorCode::TooLarge, "too many vertices for the stable set polytope");
  if (g.n == 0) throw Error(ErrorCode::InvalidInput, "empty graph has no stable set polytope");
  std::vector<RatVector> pts;
  for (const auto& s : stable_sets(g).sets) pts.push_back(characteristic_vector(s, g.n));
  Polytope p = from_vertices(pts);
  for (auto& h : p.facets) {
    RatVector ab(g.n + 1);
    ab << h.a, h.b;
    ab = primitive(ab);
    h.a = ab.head(g.n);
    h.b = ab(g.n);
  }
  return p;
}

AffineLift theta_lift(const Graph& g) {
  const Index d = g.n + 1;
  const Index cols = flat_size(d);
  AffineLift out;
  out.cone = {ConeKind::Psd, d};
  out.e_mat = RatMatrix::Zero(1 + g.n + static_cast<Index>(g.edges.size()), cols);
  out.e_rhs = RatVector::Zero(out.e_mat.rows());
  Index row = 0;
  out.e_mat(row, flat_index(0, 0, d)) = 1;
  out.e_rhs(row++) = 1;
  for (Index i = 1; i <= g.n; ++i) {
    out.e_mat(row, flat_index(i, i, d)) = 1;
    out.e_mat(row++, flat_index(0, i, d)) = -1;
  }
  for (auto [i, j] : g.edges) out.e_mat(row++, flat_index(i + 1, j + 1, d)) = 1;
  out.recovery = RatMatrix::Zero(g.n, cols);
  for (Index i = 0; i < g.n; ++i) out.recovery(i, flat_index(i + 1, i + 1, d)) = 1;
  out.offset = RatVector::Zero(g.n);
  for (const auto& s : stable_sets(g).sets) {
    const RatVector x = characteristic_vector(s, g.n);
    const SymmetricMatrix w = lifted_outer(x);
    const RatVector z = flatten(w);
    if (RatVector(out.e_mat * z) != out.e_rhs || !psd_check_exact(w) || out.recover(z) != x)
      throw Error(ErrorCode::FactorizationInvalid, "stable set witness fails the theta lift");
    out.preimages.push_back(z);
  }
  out.notes.push_back("theta body: contains STAB(G), equal to it when G is perfect");
  return out;
}

Index psd_stab_lower(const Graph& g) {
  const auto bound = psd_simple_vertex_bound(stab_polytope(g));
  if (!bound) throw Error(ErrorCode::InvalidInput, "no simple vertex found");
  return *bound;
}

Polytope c5_stab_polytope() {
  std::vector<RatVector> pts = {RatVector::Zero(5)};
  for (Index i = 0; i < 5; ++i) pts.push_back(unit(5, i));
  for (Index i = 0; i < 5; ++i) pts.push_back(unit(5, i) + unit(5, (i + 2) % 5));
  std::vector<Halfspace> facets;
  for (Index i = 0; i < 5; ++i) facets.push_back({-unit(5, i), 0});
  for (Index i = 0; i < 5; ++i) facets.push_back({unit(5, i) + unit(5, (i + 1) % 5), 1});
  facets.push_back({RatVector::Ones(5), 2});
  return align_facets(from_vertices(pts), facets);
}

RatMatrix c5_odd_cycle_matrix() {
  RatMatrix m(6, 6);
  m << 2, -1, -1, -1, -1, -1,
      -1, 1, 1, 0, 0, 1,
      -1, 1, 1, 1, 0, 0,
      -1, 0, 1, 1, 1, 0,
      -1, 0, 0, 1, 1, 1,
      -1, 1, 0, 0, 1, 1;
  return m;
}

ConeFactorization c5_burer_factorization() {
  const Polytope p = c5_stab_polytope();
  ConeFactorization f;
  f.cone = {ConeKind::CompletelyPositive, 6};
  for (const auto& v : p.vertices) {
    f.a_list.emplace_back(lifted_outer(v));
    RatMatrix cert(1, 6);
    cert << 1, v.transpose();
    f.a_certificates.emplace_back(cert);
  }
  for (Index i = 0; i < 5; ++i) f.b_list.emplace_back(outer(unit(6, i + 1)));
  for (Index i = 0; i < 5; ++i) {
    RatVector w = -unit(6, i + 1) - unit(6, (i + 1) % 5 + 1);
    w(0) = 1;
    f.b_list.emplace_back(outer(w));
  }
  f.b_list.emplace_back(SymmetricMatrix(c5_odd_cycle_matrix()));
  if (!verify_factorization(slack_matrix(p, false).matrix, f))
    throw Error(ErrorCode::FactorizationInvalid, "C5 completely positive factorization does not verify");
  return f;
}

CopositivityCrossCheck copositivity_cross_check(const RatMatrix& m) {
  const SymmetricMatrix s(m);
  const auto reduced = copositive_reduction(s);
  if (!reduced) throw Error(ErrorCode::InvalidInput, "corner must be positive and the border nonpositive");
  CopositivityCrossCheck out;
  out.reduced = copositive_check_exact(*reduced).status;
  out.direct = copositive_check_exact(s).status;
  return out;
}

Index symmetric_orthant_lower_bound(Index n) {
  if (n < 3) throw Error(ErrorCode::InvalidInput, "polygons need at least 3 vertices");
  Index k1 = 1;
  Integer fact = 1;
  while (fact % (2 * n) != 0) fact *= ++k1;
  Index k2 = 0;
  Index rest = n;
  for (Index p = 2; p * p <= rest; ++p) {
    Index power = 1;
    while (rest % p == 0) {
      rest /= p;
      power *= p;
    }
    if (power > 1) k2 += power;
  }
  if (rest > 1) k2 += rest;
  return std::max(k1, k2);
}

}  // namespace conelift
