#include <conelift/boolean.hpp>
#include <conelift/dd.hpp>
#include <conelift/linalg.hpp>

namespace conelift {

namespace {

struct Ray {
  RatVector y;
  Bitset zeros;  // processed constraints tight at y
};

RatMatrix select_rows(const RatMatrix& h, const Bitset& rows) {
  RatMatrix out(static_cast<Index>(rows.count()), h.cols());
  Index r = 0;
  for (auto i = rows.find_first(); i != Bitset::npos; i = rows.find_next(i)) out.row(r++) = h.row(static_cast<Index>(i));
  return out;
}

// Extreme rays of {y : h y >= 0} where h has full column rank r >= 1.
std::vector<RatVector> pointed_rays(const RatMatrix& h) {
  const Index m = h.rows();
  const Index r = h.cols();
  const auto mm = static_cast<std::size_t>(m);

  // First r independent rows, in row order.
  std::vector<Index> basis_rows;
  RatMatrix acc(0, r);
  for (Index i = 0; i < m && static_cast<Index>(basis_rows.size()) < r; ++i) {
    RatMatrix trial(acc.rows() + 1, r);
    trial << acc, h.row(i);
    if (rank(trial) > acc.rows()) {
      acc = trial;
      basis_rows.push_back(i);
    }
  }

  // Initial simplicial cone: rays are the columns of acc^{-1}.
  RatMatrix aug(r, 2 * r);
  aug << acc, RatMatrix::Identity(r, r);
  const RatMatrix inv = rref(aug).reduced.rightCols(r);

  Bitset processed(mm);
  for (Index i : basis_rows) processed.set(static_cast<std::size_t>(i));
  std::vector<Ray> rays;
  for (Index k = 0; k < r; ++k) {
    Ray ray{primitive(inv.col(k)), Bitset(mm)};
    for (Index t = 0; t < r; ++t)
      if (t != k) ray.zeros.set(static_cast<std::size_t>(basis_rows[static_cast<std::size_t>(t)]));
    rays.push_back(std::move(ray));
  }

  for (Index i = 0; i < m; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    if (processed.test(ui)) continue;
    std::vector<Rational> s(rays.size());
    std::vector<std::size_t> plus, minus;
    std::vector<Ray> next;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      s[k] = h.row(i).dot(rays[k].y);
      if (s[k] > 0) plus.push_back(k);
      if (s[k] < 0) minus.push_back(k);
    }
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (s[k] < 0) continue;
      Ray kept = rays[k];
      if (s[k] == 0) kept.zeros.set(ui);
      next.push_back(std::move(kept));
    }
    for (std::size_t p : plus) {
      for (std::size_t n : minus) {
        const Bitset common = rays[p].zeros & rays[n].zeros;
        if (static_cast<Index>(common.count()) < r - 2) continue;
        if (rank(select_rows(h, common)) != r - 2) continue;
        Ray fresh{primitive(RatVector(s[p] * rays[n].y - s[n] * rays[p].y)), common};
        fresh.zeros.set(ui);
        next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
    processed.set(ui);
  }

  std::vector<RatVector> out;
  out.reserve(rays.size());
  for (auto& ray : rays) out.push_back(std::move(ray.y));
  return out;
}

}  // namespace

ConeGenerators cone_generators(const RatMatrix& g) {
  ConeGenerators out;
  out.lineality = nullspace(g);
  const auto red = rref(g);
  const Index r = red.rank();
  if (r == 0) return out;
  const RatMatrix u = red.reduced.topRows(r).transpose();  // d x r, spans the row space
  const RatMatrix h = g * u;
  for (const RatVector& y : pointed_rays(h)) out.rays.push_back(primitive(RatVector(u * y)));
  return out;
}

Polyhedron vertex_enumeration(const std::vector<Halfspace>& inequalities, const std::vector<Halfspace>& equalities,
                              Index dim) {
  for (const auto& hs : inequalities)
    if (hs.a.size() != dim) throw Error(ErrorCode::ShapeMismatch, "inequality of wrong dimension");
  for (const auto& hs : equalities)
    if (hs.a.size() != dim) throw Error(ErrorCode::ShapeMismatch, "equality of wrong dimension");

  RatVector x0 = RatVector::Zero(dim);
  RatMatrix chart = RatMatrix::Identity(dim, dim);
  if (!equalities.empty()) {
    RatMatrix e(static_cast<Index>(equalities.size()), dim);
    RatVector rhs(static_cast<Index>(equalities.size()));
    for (std::size_t k = 0; k < equalities.size(); ++k) {
      e.row(static_cast<Index>(k)) = equalities[k].a.transpose();
      rhs(static_cast<Index>(k)) = equalities[k].b;
    }
    auto sol = solve_affine(e, rhs);
    if (!sol) throw Error(ErrorCode::Infeasible, "equalities are inconsistent");
    x0 = *sol;
    chart = nullspace(e);
  }
  const Index q = chart.cols();

  // Homogenized cone over (s, t): s (b - a.x0) - (a N) t >= 0 and s >= 0.
  RatMatrix g(static_cast<Index>(inequalities.size()) + 1, q + 1);
  for (std::size_t k = 0; k < inequalities.size(); ++k) {
    const auto row = static_cast<Index>(k);
    g(row, 0) = inequalities[k].b - inequalities[k].a.dot(x0);
    g.row(row).tail(q) = -(inequalities[k].a.transpose() * chart);
  }
  g.row(g.rows() - 1).setZero();
  g(g.rows() - 1, 0) = 1;

  const ConeGenerators gens = cone_generators(g);
  Polyhedron out;
  for (const RatVector& ray : gens.rays) {
    const RatVector t = ray.tail(q);
    if (ray(0) > 0) {
      out.vertices.push_back(RatVector(x0 + chart * t / ray(0)));
    } else {
      out.rays.push_back(primitive(RatVector(chart * t)));
    }
  }
  if (out.vertices.empty()) throw Error(ErrorCode::Infeasible, "inequality system is infeasible");
  out.lineality = chart * gens.lineality.bottomRows(q);
  return out;
}

}  // namespace conelift
