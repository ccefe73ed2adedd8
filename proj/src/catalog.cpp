#include <conelift/catalog.hpp>
#include <conelift/error.hpp>

#include <cmath>
#include <numbers>

namespace conelift::catalog {

namespace {

std::vector<RatVector> point_list(std::initializer_list<std::initializer_list<Rational>> rows) {
  std::vector<RatVector> out;
  for (const auto& r : rows) out.push_back(make_vector(r));
  return out;
}

}  // namespace

Polytope regular_hexagon() {
  const std::vector<Halfspace> facets = {{make_vector({1, -1}), 1}, {make_vector({1, 0}), 1},
                                         {make_vector({0, 1}), 1},  {make_vector({-1, 1}), 1},
                                         {make_vector({-1, 0}), 1}, {make_vector({0, -1}), 1}};
  return align_facets(from_vertices(point_list({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}})), facets);
}

RatMatrix hexagon_slack() {
  return make_matrix({{0, 0, 1, 2, 2, 1},
                      {1, 0, 0, 1, 2, 2},
                      {2, 1, 0, 0, 1, 2},
                      {2, 2, 1, 0, 0, 1},
                      {1, 2, 2, 1, 0, 0},
                      {0, 1, 2, 2, 1, 0}});
}

RatMatrix hexagon_factor_a() {
  return make_matrix({{1, 0, 1, 0, 0}, {1, 0, 0, 0, 1}, {0, 0, 0, 1, 2}, {0, 1, 0, 0, 1}, {0, 1, 1, 0, 0}, {0, 0, 2, 1, 0}});
}

RatMatrix hexagon_factor_b() {
  return make_matrix({{0, 0, 0, 1, 2, 1}, {1, 2, 1, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 1, 0, 0, 1, 0}, {1, 0, 0, 0, 0, 1}});
}

Polytope irregular_hexagon() {
  return from_vertices(point_list({{0, -1}, {1, -1}, {2, 0}, {1, 3}, {0, 2}, {-1, 0}}));
}

RatMatrix irregular_hexagon_matrix() {
  return make_matrix({{0, 0, 1, 4, 3, 1},
                      {1, 0, 0, 4, 4, 3},
                      {7, 4, 0, 0, 4, 9},
                      {3, 4, 4, 0, 0, 1},
                      {3, 5, 6, 1, 0, 0},
                      {0, 1, 3, 5, 3, 0}});
}

RatMatrix difference_matrix(Index n) {
  RatMatrix m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = Rational(i - j);
  return m;
}

RatMatrix squared_distance(Index n) { return entrywise_square(difference_matrix(n)); }

Polytope cyclic_polygon(Index n) {
  if (n < 3) throw Error(ErrorCode::InvalidInput, "polygons need at least 3 vertices");
  std::vector<RatVector> pts;
  for (Index k = 0; k < n; ++k) {
    const double theta = 2 * std::numbers::pi * (static_cast<double>(k) + 0.5) / static_cast<double>(n) - std::numbers::pi;
    pts.push_back(circle_point(rationalize(std::tan(theta / 2), 20)));
  }
  return from_vertices(pts);
}

Polytope cube(Index n) {
  std::vector<RatVector> pts;
  for (Index m = 0; m < (Index(1) << n); ++m) {
    RatVector v(n);
    for (Index i = 0; i < n; ++i) v(i) = (m >> i & 1) ? 1 : -1;
    pts.push_back(v);
  }
  return from_vertices(pts);
}

RatVector circle_point(const Rational& t) {
  const Rational d = 1 + t * t;
  return make_vector({(1 - t * t) / d, 2 * t / d});
}

SymmetricMatrix disk_a(const RatVector& p) {
  return SymmetricMatrix(make_matrix({{1 + p(0), p(1)}, {p(1), 1 - p(0)}}));
}

SymmetricMatrix disk_b(const RatVector& p) {
  const Rational h(1, 2);
  return SymmetricMatrix(make_matrix({{h * (1 - p(0)), -h * p(1)}, {-h * p(1), h * (1 + p(0))}}));
}

}  // namespace conelift::catalog
