#include <conelift/linalg.hpp>
#include <conelift/polytope.hpp>

#include <algorithm>
#include <functional>

namespace conelift {

namespace {

std::size_t usize(Index i) { return static_cast<std::size_t>(i); }

// Affine hull of a point set: points = origin + span of the reduced rows, and the pivot
// coordinates of those rows form a chart of the hull.
struct AffineChart {
  RatVector origin;
  RatMatrix basis;  // d x n, reduced echelon
  std::vector<Index> pivots;

  Index dim() const { return basis.rows(); }

  RatVector project(const RatVector& x) const {
    RatVector y(dim());
    for (Index t = 0; t < dim(); ++t) y(t) = x(pivots[usize(t)]);
    return y;
  }

  RatVector lift_normal(const RatVector& a, Index n) const {
    RatVector full = RatVector::Zero(n);
    for (Index t = 0; t < dim(); ++t) full(pivots[usize(t)]) = a(t);
    return full;
  }

  std::vector<Halfspace> equalities() const {
    const Index n = origin.size();
    std::vector<bool> pivot(usize(n), false);
    for (Index p : pivots) pivot[usize(p)] = true;
    std::vector<Halfspace> out;
    for (Index j = 0; j < n; ++j) {
      if (pivot[usize(j)]) continue;
      RatVector a = RatVector::Zero(n);
      a(j) = 1;
      for (Index t = 0; t < dim(); ++t) a(pivots[usize(t)]) -= basis(t, j);
      a = primitive(a);
      out.push_back({a, a.dot(origin)});
    }
    return out;
  }
};

AffineChart affine_chart(const std::vector<RatVector>& points) {
  const Index n = points.front().size();
  RatMatrix diff(static_cast<Index>(points.size()) - 1, n);
  for (std::size_t i = 1; i < points.size(); ++i) diff.row(static_cast<Index>(i) - 1) = (points[i] - points[0]).transpose();
  const auto red = rref(diff);
  return {points[0], red.reduced.topRows(red.rank()), red.pivots};
}

// Affine dimension of a subset of points (-1 when empty).
Index affine_rank(const std::vector<RatVector>& points, const Bitset& subset) {
  const auto first = subset.find_first();
  if (first == Bitset::npos) return -1;
  const Index n = points.front().size();
  RatMatrix diff(static_cast<Index>(subset.count()) - 1, n);
  Index r = 0;
  for (auto i = subset.find_next(first); i != Bitset::npos; i = subset.find_next(i))
    diff.row(r++) = (points[i] - points[first]).transpose();
  return rank(diff);
}

std::vector<RatVector> deduplicate(const std::vector<RatVector>& points) {
  std::vector<RatVector> out;
  for (const auto& p : points)
    if (std::none_of(out.begin(), out.end(), [&](const RatVector& q) { return q == p; })) out.push_back(p);
  return out;
}

bool origin_interior(const Polytope& p) {
  if (!p.equalities.empty() || p.facets.empty()) return false;
  return std::all_of(p.facets.begin(), p.facets.end(), [](const Halfspace& h) { return h.b > 0; });
}

Index check_dims(const std::vector<RatVector>& points) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "no points given");
  const Index n = points.front().size();
  for (const auto& p : points)
    if (p.size() != n) throw Error(ErrorCode::ShapeMismatch, "points of different dimensions");
  return n;
}

bool same_face_scaled(const Halfspace& x, const Halfspace& y) {
  // x = lambda y with lambda > 0
  Rational lambda = 0;
  for (Index i = 0; i < x.a.size(); ++i) {
    if (y.a(i) != 0) {
      lambda = x.a(i) / y.a(i);
      break;
    }
  }
  if (lambda <= 0) return false;
  return x.a == RatVector(lambda * y.a) && x.b == lambda * y.b;
}

}  // namespace

Polytope from_vertices(const std::vector<RatVector>& points) {
  const Index n = check_dims(points);
  const std::vector<RatVector> pts = deduplicate(points);
  const AffineChart chart = affine_chart(pts);
  const Index d = chart.dim();

  Polytope out;
  out.dim = n;
  out.equalities = chart.equalities();
  if (d == 0) {
    out.vertices = pts;
    return out;
  }

  std::vector<RatVector> ys;
  RatMatrix g(static_cast<Index>(pts.size()), d + 1);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    ys.push_back(chart.project(pts[i]));
    g(static_cast<Index>(i), 0) = 1;
    g.row(static_cast<Index>(i)).tail(d) = -ys.back().transpose();
  }
  const ConeGenerators gens = cone_generators(g);
  std::vector<RatVector> normals;
  for (const RatVector& ray : gens.rays) {
    normals.push_back(ray.tail(d));
    out.facets.push_back({chart.lift_normal(ray.tail(d), n), ray(0)});
  }

  for (std::size_t i = 0; i < pts.size(); ++i) {
    RatMatrix active(0, d);
    for (std::size_t j = 0; j < normals.size(); ++j) {
      if (normals[j].dot(ys[i]) != out.facets[j].b) continue;
      active.conservativeResize(active.rows() + 1, d);
      active.row(active.rows() - 1) = normals[j].transpose();
    }
    if (rank(active) == d) out.vertices.push_back(pts[i]);
  }
  out.origin_interior = origin_interior(out);
  return out;
}

Polytope from_inequalities(const std::vector<Halfspace>& inequalities, const std::vector<Halfspace>& equalities) {
  if (inequalities.empty() && equalities.empty()) throw Error(ErrorCode::Unbounded, "no constraints given");
  const Index n = inequalities.empty() ? equalities.front().a.size() : inequalities.front().a.size();
  Polyhedron poly = vertex_enumeration(inequalities, equalities, n);
  if (!poly.rays.empty() || poly.lineality.cols() > 0) throw Error(ErrorCode::Unbounded, "inequality system is unbounded");

  std::vector<RatVector> verts = std::move(poly.vertices);
  std::sort(verts.begin(), verts.end(), lex_less);
  const AffineChart chart = affine_chart(verts);
  const Index d = chart.dim();

  Polytope out;
  out.dim = n;
  out.vertices = verts;
  out.equalities = chart.equalities();
  std::vector<Bitset> seen;
  const auto nv = verts.size();
  for (const auto& h : inequalities) {
    Bitset tight(nv);
    for (std::size_t i = 0; i < nv; ++i)
      if (h.a.dot(verts[i]) == h.b) tight.set(i);
    if (tight.all()) continue;
    if (affine_rank(verts, tight) != d - 1) continue;
    if (std::find(seen.begin(), seen.end(), tight) != seen.end()) continue;
    seen.push_back(tight);
    out.facets.push_back(h);
  }
  out.origin_interior = origin_interior(out);
  return out;
}

Polytope align_facets(const Polytope& p, const std::vector<Halfspace>& facets) {
  if (facets.size() != p.facets.size()) throw Error(ErrorCode::InvalidInput, "facet count differs");
  std::vector<bool> used(p.facets.size(), false);
  for (const auto& h : facets) {
    if (h.a.size() != p.dim) throw Error(ErrorCode::ShapeMismatch, "facet of wrong dimension");
    bool found = false;
    for (std::size_t j = 0; j < p.facets.size() && !found; ++j) {
      if (!used[j] && same_face_scaled(h, p.facets[j])) used[j] = found = true;
    }
    if (!found) throw Error(ErrorCode::InvalidInput, "inequality is not a facet of the polytope");
  }
  Polytope out = p;
  out.facets = facets;
  out.origin_interior = origin_interior(out);
  return out;
}

bool contains(const Polytope& p, const RatVector& x) {
  if (x.size() != p.dim) throw Error(ErrorCode::ShapeMismatch, "point of wrong dimension");
  for (const auto& h : p.equalities)
    if (h.a.dot(x) != h.b) return false;
  for (const auto& h : p.facets)
    if (h.a.dot(x) > h.b) return false;
  return true;
}

BoolMatrix incidence(const Polytope& p) {
  BoolMatrix out(static_cast<Index>(p.vertices.size()), static_cast<Index>(p.facets.size()));
  for (std::size_t i = 0; i < p.vertices.size(); ++i)
    for (std::size_t j = 0; j < p.facets.size(); ++j)
      out(static_cast<Index>(i), static_cast<Index>(j)) = p.facets[j].a.dot(p.vertices[i]) == p.facets[j].b;
  return out;
}

RatVector canonical_normal(const Polytope& p, Index facet) {
  if (!p.origin_interior) throw Error(ErrorCode::OriginNotInterior, "canonical form needs the origin in the interior");
  const Halfspace& h = p.facets[usize(facet)];
  return h.a / h.b;
}

SlackMatrix slack_matrix(const Polytope& p, bool canonical) {
  if (canonical && !p.origin_interior)
    throw Error(ErrorCode::OriginNotInterior, "canonical slack matrix needs the origin in the interior");
  const auto nv = static_cast<Index>(p.vertices.size());
  const auto nf = static_cast<Index>(p.facets.size());
  SlackMatrix out;
  out.matrix.resize(nv, nf);
  for (Index j = 0; j < nf; ++j) {
    const Halfspace& h = p.facets[usize(j)];
    for (Index i = 0; i < nv; ++i) {
      Rational s = h.b - h.a.dot(p.vertices[usize(i)]);
      out.matrix(i, j) = canonical ? Rational(s / h.b) : s;
    }
  }
  for (Index i = 0; i < nv; ++i) out.vertex_labels.push_back("v" + std::to_string(i));
  for (Index j = 0; j < nf; ++j) out.facet_labels.push_back("f" + std::to_string(j));
  return out;
}

Polytope polar(const Polytope& p) {
  if (!p.origin_interior) throw Error(ErrorCode::OriginNotInterior, "polar needs the origin in the interior");
  Polytope out;
  out.dim = p.dim;
  for (Index j = 0; j < static_cast<Index>(p.facets.size()); ++j) out.vertices.push_back(canonical_normal(p, j));
  for (const auto& v : p.vertices) out.facets.push_back({v, Rational(1)});
  out.origin_interior = true;
  return out;
}

namespace {

bool face_less(const Bitset& a, const Bitset& b) {
  const auto ca = a.count();
  const auto cb = b.count();
  if (ca != cb) return ca < cb;
  return a < b;
}

}  // namespace

Index FaceLattice::find(const Bitset& face) const {
  auto it = std::lower_bound(faces.begin(), faces.end(), face, face_less);
  if (it == faces.end() || *it != face) return -1;
  return static_cast<Index>(it - faces.begin());
}

FaceLattice face_lattice(const BoolMatrix& inc) {
  const auto nv = usize(inc.rows());
  std::vector<Bitset> facets;
  for (Index j = 0; j < inc.cols(); ++j) {
    Bitset f(nv);
    for (Index i = 0; i < inc.rows(); ++i)
      if (inc(i, j)) f.set(usize(i));
    facets.push_back(f);
  }
  Bitset full(nv);
  full.set();
  std::vector<Bitset> found{full, Bitset(nv)};
  std::vector<Bitset> queue{full};
  auto known = [&](const Bitset& s) { return std::find(found.begin(), found.end(), s) != found.end(); };
  while (!queue.empty()) {
    Bitset g = queue.back();
    queue.pop_back();
    for (const auto& f : facets) {
      Bitset h = g & f;
      if (known(h)) continue;
      found.push_back(h);
      queue.push_back(h);
    }
  }
  std::sort(found.begin(), found.end(), face_less);
  FaceLattice out;
  out.num_vertices = inc.rows();
  out.faces = std::move(found);
  return out;
}

FaceLattice face_lattice(const Polytope& p) { return face_lattice(incidence(p)); }

Index max_antichain(const FaceLattice& lattice) {
  const std::size_t n = lattice.faces.size();
  std::vector<std::vector<std::size_t>> above(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && lattice.faces[u].is_proper_subset_of(lattice.faces[v])) above[u].push_back(v);

  std::vector<std::ptrdiff_t> match_right(n, -1);
  std::vector<char> visited;
  std::function<bool(std::size_t)> augment = [&](std::size_t u) {
    for (std::size_t v : above[u]) {
      if (visited[v]) continue;
      visited[v] = 1;
      if (match_right[v] < 0 || augment(static_cast<std::size_t>(match_right[v]))) {
        match_right[v] = static_cast<std::ptrdiff_t>(u);
        return true;
      }
    }
    return false;
  };
  Index matching = 0;
  for (std::size_t u = 0; u < n; ++u) {
    visited.assign(n, 0);
    if (augment(u)) ++matching;
  }
  return static_cast<Index>(n) - matching;
}

Polytope poly_product(const Polytope& p1, const Polytope& p2) {
  const Index n1 = p1.dim;
  const Index n2 = p2.dim;
  Polytope out;
  out.dim = n1 + n2;
  for (const auto& v1 : p1.vertices) {
    for (const auto& v2 : p2.vertices) {
      RatVector v(n1 + n2);
      v << v1, v2;
      out.vertices.push_back(v);
    }
  }
  auto embed = [&](const Halfspace& h, bool first) {
    RatVector a = RatVector::Zero(n1 + n2);
    if (first) a.head(n1) = h.a;
    else a.tail(n2) = h.a;
    return Halfspace{a, h.b};
  };
  for (const auto& h : p1.facets) out.facets.push_back(embed(h, true));
  for (const auto& h : p2.facets) out.facets.push_back(embed(h, false));
  for (const auto& h : p1.equalities) out.equalities.push_back(embed(h, true));
  for (const auto& h : p2.equalities) out.equalities.push_back(embed(h, false));
  out.origin_interior = origin_interior(out);
  return out;
}

Polytope poly_conv_union(const Polytope& p1, const Polytope& p2) {
  if (p1.dim != p2.dim) throw Error(ErrorCode::ShapeMismatch, "convex union of polytopes in different dimensions");
  std::vector<RatVector> pts = p1.vertices;
  pts.insert(pts.end(), p2.vertices.begin(), p2.vertices.end());
  return from_vertices(pts);
}

Polytope poly_minkowski(const Polytope& p1, const Polytope& p2) {
  if (p1.dim != p2.dim) throw Error(ErrorCode::ShapeMismatch, "Minkowski sum of polytopes in different dimensions");
  std::vector<RatVector> pts;
  for (const auto& v1 : p1.vertices)
    for (const auto& v2 : p2.vertices) pts.push_back(v1 + v2);
  return from_vertices(pts);
}

Polytope poly_linear_image(const Polytope& p, const RatMatrix& t) {
  if (t.cols() != p.dim) throw Error(ErrorCode::ShapeMismatch, "linear map has wrong source dimension");
  std::vector<RatVector> pts;
  for (const auto& v : p.vertices) pts.push_back(t * v);
  return from_vertices(pts);
}

Polytope poly_projective(const Polytope& p, const RatMatrix& pmat, const RatVector& c) {
  if (pmat.cols() != p.dim || c.size() != p.dim)
    throw Error(ErrorCode::ShapeMismatch, "projective map has wrong source dimension");
  std::vector<RatVector> pts;
  for (const auto& v : p.vertices) {
    const Rational den = 1 + c.dot(v);
    if (den <= 0) throw Error(ErrorCode::ProjectiveDenominatorVanishes, "1 + <c, v> must be positive at every vertex");
    pts.push_back(pmat * v / den);
  }
  return from_vertices(pts);
}

}  // namespace conelift
