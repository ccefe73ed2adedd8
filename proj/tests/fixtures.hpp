#pragma once

// Matrices and polytopes shared by the test binaries.

#include <conelift/bounds.hpp>
#include <conelift/error.hpp>
#include <conelift/factorize.hpp>
#include <conelift/polytope.hpp>

#include <cmath>
#include <numbers>
#include <optional>

namespace fixture {

using namespace conelift;

/// Code of the library error thrown by f, if any.
template <typename F>
std::optional<ErrorCode> thrown_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline std::vector<RatVector> points(std::initializer_list<std::initializer_list<Rational>> rows) {
  std::vector<RatVector> out;
  for (const auto& r : rows) out.push_back(make_vector(r));
  return out;
}

/// Slack matrix of the regular hexagon, facets in edge order.
inline RatMatrix hexagon_slack() {
  return make_matrix({{0, 0, 1, 2, 2, 1},
                      {1, 0, 0, 1, 2, 2},
                      {2, 1, 0, 0, 1, 2},
                      {2, 2, 1, 0, 0, 1},
                      {1, 2, 2, 1, 0, 0},
                      {0, 1, 2, 2, 1, 0}});
}

inline RatMatrix hexagon_a() {
  return make_matrix({{1, 0, 1, 0, 0}, {1, 0, 0, 0, 1}, {0, 0, 0, 1, 2}, {0, 1, 0, 0, 1}, {0, 1, 1, 0, 0}, {0, 0, 2, 1, 0}});
}

inline RatMatrix hexagon_b() {
  return make_matrix({{0, 0, 0, 1, 2, 1}, {1, 2, 1, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 1, 0, 0, 1, 0}, {1, 0, 0, 0, 0, 1}});
}

/// Affine image of the regular hexagon whose canonical slack matrix is hexagon_slack().
inline Polytope rational_hexagon() {
  const std::vector<Halfspace> facets = {{make_vector({1, -1}), 1}, {make_vector({1, 0}), 1},
                                         {make_vector({0, 1}), 1},  {make_vector({-1, 1}), 1},
                                         {make_vector({-1, 0}), 1}, {make_vector({0, -1}), 1}};
  return align_facets(from_vertices(points({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}})), facets);
}

/// (i - j)^2 for 0 <= i, j < n.
inline RatMatrix squared_distance(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = (i - j) * (i - j);
  return m;
}

/// Convex n-gon on the unit circle with rational vertices near the angles 2 pi (k + 1/2) / n.
inline Polytope rational_cyclic_polygon(int n) {
  std::vector<RatVector> pts;
  for (int k = 0; k < n; ++k) {
    const double theta = 2 * std::numbers::pi * (k + 0.5) / n - std::numbers::pi;
    const Rational t = rationalize(std::tan(theta / 2), 20);
    const Rational d = 1 + t * t;
    pts.push_back(make_vector({(1 - t * t) / d, 2 * t / d}));
  }
  return from_vertices(pts);
}

/// [-1, 1]^n.
inline Polytope cube(int n) {
  std::vector<RatVector> pts;
  for (int m = 0; m < (1 << n); ++m) {
    RatVector v(n);
    for (int i = 0; i < n; ++i) v(i) = (m >> i & 1) ? 1 : -1;
    pts.push_back(v);
  }
  return from_vertices(pts);
}

/// [-1, 1] on the line.
inline Polytope segment() { return from_vertices(points({{-1}, {1}})); }

inline Polytope point() { return from_vertices(points({{0, 0}})); }

// F -> the facets missing F: always an order embedding, of size the facet count.
inline LatticeEmbedding facet_embedding(const Polytope& p) {
  const BoolMatrix inc = incidence(p);
  LatticeEmbedding e;
  e.lattice = face_lattice(inc);
  e.dim = inc.cols();
  for (const auto& face : e.lattice.faces) {
    Bitset img(static_cast<std::size_t>(e.dim));
    for (Index j = 0; j < inc.cols(); ++j)
      for (Index v = 0; v < inc.rows(); ++v)
        if (face.test(static_cast<std::size_t>(v)) && !inc(v, j)) img.set(static_cast<std::size_t>(j));
    e.assignment.push_back(img);
  }
  return e;
}

}  // namespace fixture

#define CHECK_THROWS_AS_CODE(expr, c) CHECK(fixture::thrown_code([&] { (void)(expr); }) == std::optional(c))
