#include <conelift/cones.hpp>
#include <conelift/error.hpp>
#include <conelift/factorize.hpp>
#include <conelift/linalg.hpp>
#include <conelift/lp.hpp>

namespace conelift {

namespace {

std::size_t usize(Index i) { return static_cast<std::size_t>(i); }

const RatVector& as_vector(const ConeElement& x) {
  if (const auto* v = std::get_if<RatVector>(&x)) return *v;
  throw Error(ErrorCode::InvalidInput, "expected an orthant element");
}

SymmetricMatrix as_symmetric(const ConeElement& x) {
  if (const auto* s = std::get_if<SymmetricMatrix>(&x)) return *s;
  return SymmetricMatrix(RatMatrix(std::get<RatVector>(x).asDiagonal()));
}

ConeElement zero_element(const ConeDescriptor& cone) {
  if (cone.kind == ConeKind::Orthant) return RatVector(RatVector::Zero(cone.size));
  return SymmetricMatrix::zero(cone.size);
}

ConeElement scaled(const ConeElement& x, const Rational& s) {
  if (const auto* v = std::get_if<RatVector>(&x)) return RatVector(*v * s);
  return SymmetricMatrix(RatMatrix(std::get<SymmetricMatrix>(x).matrix() * s));
}

ConeElement added(const ConeElement& x, const ConeElement& y) {
  if (const auto* v = std::get_if<RatVector>(&x)) return RatVector(*v + std::get<RatVector>(y));
  return SymmetricMatrix(RatMatrix(std::get<SymmetricMatrix>(x).matrix() + std::get<SymmetricMatrix>(y).matrix()));
}

// Element of K1 x K2 in the combined cone.
ConeElement concat(const ConeElement& x, const ConeElement& y, ConeKind kind) {
  if (kind == ConeKind::Orthant) {
    const RatVector& a = as_vector(x);
    const RatVector& b = as_vector(y);
    RatVector out(a.size() + b.size());
    out << a, b;
    return out;
  }
  return block_diagonal(as_symmetric(x), as_symmetric(y));
}

ConeKind combined_kind(const ConeFactorization& f1, const ConeFactorization& f2) {
  if (f1.cone.kind == ConeKind::CompletelyPositive || f2.cone.kind == ConeKind::CompletelyPositive)
    throw Error(ErrorCode::InvalidInput, "combinators support orthant and psd factorizations");
  if (f1.cone.kind == ConeKind::Orthant && f2.cone.kind == ConeKind::Orthant) return ConeKind::Orthant;
  return ConeKind::Psd;
}

RatMatrix canonical_normals(const Polytope& p) {
  RatMatrix n(p.dim, static_cast<Index>(p.facets.size()));
  for (Index j = 0; j < n.cols(); ++j) n.col(j) = canonical_normal(p, j);
  return n;
}

// Convex weights mu >= 0, sum mu = 1, with normals * mu = a.
std::optional<RatVector> convex_weights(const RatMatrix& normals, const RatVector& a) {
  RatMatrix g(normals.rows() + 1, normals.cols());
  g << normals, RatMatrix::Ones(1, normals.cols());
  RatVector h(a.size() + 1);
  h << a, Rational(1);
  return nonneg_solve(g, h);
}

bool valid_weights(const RatMatrix& normals, const RatVector& a, const RatVector& mu) {
  return mu.size() == normals.cols() && (mu.array() >= 0).all() && mu.sum() == 1 && RatVector(normals * mu) == a;
}

}  // namespace

std::string_view to_string(ConeKind kind) {
  switch (kind) {
    case ConeKind::Orthant: return "orthant";
    case ConeKind::Psd: return "psd";
    case ConeKind::CompletelyPositive: return "cp";
  }
  return "?";
}

ConeKind parse_cone_kind(std::string_view text) {
  if (text == "orthant" || text == "nonneg") return ConeKind::Orthant;
  if (text == "psd") return ConeKind::Psd;
  if (text == "cp") return ConeKind::CompletelyPositive;
  throw Error(ErrorCode::ParseError, "unknown cone '" + std::string(text) + "'");
}

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::None: return "none";
    case SearchStatus::BudgetExceeded: return "budget_exceeded";
  }
  return "?";
}

Rational inner(const ConeElement& a, const ConeElement& b) {
  if (a.index() != b.index()) throw Error(ErrorCode::ShapeMismatch, "inner product of different element types");
  if (const auto* v = std::get_if<RatVector>(&a)) {
    const RatVector& w = std::get<RatVector>(b);
    if (v->size() != w.size()) throw Error(ErrorCode::ShapeMismatch, "inner product of vectors of different sizes");
    return v->dot(w);
  }
  const auto& x = std::get<SymmetricMatrix>(a);
  const auto& y = std::get<SymmetricMatrix>(b);
  if (x.dim() != y.dim()) throw Error(ErrorCode::ShapeMismatch, "inner product of matrices of different sizes");
  return inner(x, y);
}

ConeFactorization orthant_factorization(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "inner dimensions differ");
  ConeFactorization f;
  f.cone = {ConeKind::Orthant, a.cols()};
  for (Index i = 0; i < a.rows(); ++i) f.a_list.emplace_back(RatVector(a.row(i).transpose()));
  for (Index j = 0; j < b.cols(); ++j) f.b_list.emplace_back(RatVector(b.col(j)));
  return f;
}

RatMatrix orthant_a(const ConeFactorization& f) {
  if (f.cone.kind != ConeKind::Orthant) throw Error(ErrorCode::InvalidInput, "not an orthant factorization");
  RatMatrix a(f.rows(), f.cone.size);
  for (Index i = 0; i < f.rows(); ++i) a.row(i) = as_vector(f.a_list[usize(i)]).transpose();
  return a;
}

RatMatrix orthant_b(const ConeFactorization& f) {
  if (f.cone.kind != ConeKind::Orthant) throw Error(ErrorCode::InvalidInput, "not an orthant factorization");
  RatMatrix b(f.cone.size, f.cols());
  for (Index j = 0; j < f.cols(); ++j) b.col(j) = as_vector(f.b_list[usize(j)]);
  return b;
}

RatMatrix product_matrix(const ConeFactorization& f) {
  RatMatrix m(f.rows(), f.cols());
  for (Index i = 0; i < f.rows(); ++i)
    for (Index j = 0; j < f.cols(); ++j) m(i, j) = inner(f.a_list[usize(i)], f.b_list[usize(j)]);
  return m;
}

bool in_cone(const ConeElement& x, const ConeDescriptor& cone, const std::optional<RatMatrix>& certificate) {
  if (cone.kind == ConeKind::Orthant) {
    const auto* v = std::get_if<RatVector>(&x);
    return v && v->size() == cone.size && (v->array() >= 0).all();
  }
  const auto* s = std::get_if<SymmetricMatrix>(&x);
  if (!s || s->dim() != cone.size) return false;
  if (cone.kind == ConeKind::Psd) return psd_check_exact(*s);
  return cp_check(*s, certificate);
}

bool in_dual_cone(const ConeElement& x, const ConeDescriptor& cone) {
  if (cone.kind != ConeKind::CompletelyPositive) return in_cone(x, cone);
  const auto* s = std::get_if<SymmetricMatrix>(&x);
  if (!s || s->dim() != cone.size) return false;
  return copositive_check_exact(*s).status == CopositivityStatus::Copositive;
}

bool verify_factorization(const RatMatrix& m, const ConeFactorization& f) {
  if (f.rows() != m.rows() || f.cols() != m.cols())
    throw Error(ErrorCode::ShapeMismatch, "factor lists do not match the matrix shape");
  if (!f.a_certificates.empty() && static_cast<Index>(f.a_certificates.size()) != f.rows())
    throw Error(ErrorCode::ShapeMismatch, "certificate list does not match the row count");
  const std::size_t cell = f.cone.kind == ConeKind::Orthant ? 0 : 1;
  for (const auto& x : f.a_list)
    if (x.index() != cell) return false;
  for (const auto& x : f.b_list)
    if (x.index() != cell) return false;
  try {
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j)
        if (inner(f.a_list[usize(i)], f.b_list[usize(j)]) != m(i, j)) return false;
  } catch (const Error&) {
    return false;
  }
  for (std::size_t i = 0; i < f.a_list.size(); ++i) {
    const auto cert = f.a_certificates.empty() ? std::nullopt : f.a_certificates[i];
    if (!in_cone(f.a_list[i], f.cone, cert)) return false;
  }
  for (const auto& b : f.b_list)
    if (!in_dual_cone(b, f.cone)) return false;
  return true;
}

ConeFactorization trivial_orthant_factorization(const RatMatrix& m) {
  if ((m.array() < 0).any()) throw Error(ErrorCode::NegativeEntry, "matrix has a negative entry");
  if (m.isZero()) return orthant_factorization(RatMatrix(m.rows(), 0), RatMatrix(0, m.cols()));
  if (m.rows() <= m.cols()) return orthant_factorization(RatMatrix::Identity(m.rows(), m.rows()), m);
  return orthant_factorization(m, RatMatrix::Identity(m.cols(), m.cols()));
}

ConeFactorization pad_orthant(const ConeFactorization& f, Index size) {
  const RatMatrix a = orthant_a(f);
  const RatMatrix b = orthant_b(f);
  if (size < a.cols()) throw Error(ErrorCode::InvalidInput, "cannot pad to a smaller size");
  RatMatrix a2 = RatMatrix::Zero(a.rows(), size);
  RatMatrix b2 = RatMatrix::Zero(size, b.cols());
  a2.leftCols(a.cols()) = a;
  b2.topRows(b.rows()) = b;
  return orthant_factorization(a2, b2);
}

ConeFactorization orthant_as_psd(const ConeFactorization& f) {
  if (f.cone.kind != ConeKind::Orthant) throw Error(ErrorCode::InvalidInput, "not an orthant factorization");
  ConeFactorization out;
  out.cone = {ConeKind::Psd, f.cone.size};
  for (const auto& a : f.a_list) out.a_list.emplace_back(as_symmetric(a));
  for (const auto& b : f.b_list) out.b_list.emplace_back(as_symmetric(b));
  return out;
}

BooleanFactorization support_pattern(const ConeFactorization& f) {
  return {support(orthant_a(f)), support(orthant_b(f))};
}

RatMatrix entrywise_square(const RatMatrix& m) { return m.cwiseProduct(m); }

ConeFactorization squared_factorization(const RatMatrix& m) {
  const auto red = rref(m);
  const Index r = red.rank();
  RatMatrix v(m.rows(), r);
  for (Index t = 0; t < r; ++t) v.col(t) = m.col(red.pivots[usize(t)]);
  const RatMatrix w = red.reduced.topRows(r);
  ConeFactorization f;
  f.cone = {ConeKind::Psd, r};
  for (Index i = 0; i < m.rows(); ++i) f.a_list.emplace_back(SymmetricMatrix::outer(v.row(i).transpose()));
  for (Index j = 0; j < m.cols(); ++j) f.b_list.emplace_back(SymmetricMatrix::outer(w.col(j)));
  return f;
}

ConeFactorization combine_product(const ConeFactorization& f1, const ConeFactorization& f2) {
  const ConeKind kind = combined_kind(f1, f2);
  ConeFactorization out;
  out.cone = {kind, f1.cone.size + f2.cone.size};
  const ConeDescriptor z1{f1.cone.kind, f1.cone.size};
  const ConeDescriptor z2{f2.cone.kind, f2.cone.size};
  for (const auto& a1 : f1.a_list)
    for (const auto& a2 : f2.a_list) out.a_list.push_back(concat(a1, a2, kind));
  for (const auto& b1 : f1.b_list) out.b_list.push_back(concat(b1, zero_element(z2), kind));
  for (const auto& b2 : f2.b_list) out.b_list.push_back(concat(zero_element(z1), b2, kind));
  return out;
}

HullData compute_hull_data(const Polytope& p1, const Polytope& p2) {
  if (!p1.origin_interior || !p2.origin_interior)
    throw Error(ErrorCode::OriginNotInterior, "convex union needs the origin interior to both polytopes");
  HullData data;
  data.hull = poly_conv_union(p1, p2);
  for (const auto& v : data.hull.vertices) {
    auto find = [&](const Polytope& p) -> Index {
      for (std::size_t i = 0; i < p.vertices.size(); ++i)
        if (p.vertices[i] == v) return static_cast<Index>(i);
      return -1;
    };
    if (const Index i = find(p1); i >= 0) {
      data.vertex_source.emplace_back(1, i);
    } else {
      data.vertex_source.emplace_back(2, find(p2));
    }
  }
  const RatMatrix n1 = canonical_normals(p1);
  const RatMatrix n2 = canonical_normals(p2);
  for (Index h = 0; h < static_cast<Index>(data.hull.facets.size()); ++h) {
    const RatVector a = canonical_normal(data.hull, h);
    auto mu1 = convex_weights(n1, a);
    auto mu2 = convex_weights(n2, a);
    if (!mu1 || !mu2) throw Error(ErrorCode::HullDataInconsistent, "hull facet is not valid for both polytopes");
    data.weights1.push_back(*mu1);
    data.weights2.push_back(*mu2);
  }
  return data;
}

ConeFactorization combine_conv_union(const Polytope& p1, const ConeFactorization& f1, const Polytope& p2,
                                     const ConeFactorization& f2, const HullData& data) {
  const ConeKind kind = combined_kind(f1, f2);
  const Polytope& hull = data.hull;
  if (data.vertex_source.size() != hull.vertices.size() || data.weights1.size() != hull.facets.size() ||
      data.weights2.size() != hull.facets.size())
    throw Error(ErrorCode::HullDataInconsistent, "hull data has the wrong length");
  if (f1.rows() != static_cast<Index>(p1.vertices.size()) || f1.cols() != static_cast<Index>(p1.facets.size()) ||
      f2.rows() != static_cast<Index>(p2.vertices.size()) || f2.cols() != static_cast<Index>(p2.facets.size()))
    throw Error(ErrorCode::ShapeMismatch, "factorizations do not match the polytopes");

  const ConeDescriptor z1{f1.cone.kind, f1.cone.size};
  const ConeDescriptor z2{f2.cone.kind, f2.cone.size};
  ConeFactorization out;
  out.cone = {kind, f1.cone.size + f2.cone.size};
  for (std::size_t i = 0; i < hull.vertices.size(); ++i) {
    const auto [which, idx] = data.vertex_source[i];
    const Polytope& src = which == 1 ? p1 : p2;
    if ((which != 1 && which != 2) || idx < 0 || idx >= static_cast<Index>(src.vertices.size()) ||
        src.vertices[usize(idx)] != hull.vertices[i])
      throw Error(ErrorCode::HullDataInconsistent, "vertex source does not match the hull vertex");
    if (which == 1) out.a_list.push_back(concat(f1.a_list[usize(idx)], zero_element(z2), kind));
    else out.a_list.push_back(concat(zero_element(z1), f2.a_list[usize(idx)], kind));
  }
  const RatMatrix n1 = canonical_normals(p1);
  const RatMatrix n2 = canonical_normals(p2);
  for (Index h = 0; h < static_cast<Index>(hull.facets.size()); ++h) {
    const RatVector a = canonical_normal(hull, h);
    const RatVector& mu1 = data.weights1[usize(h)];
    const RatVector& mu2 = data.weights2[usize(h)];
    if (!valid_weights(n1, a, mu1) || !valid_weights(n2, a, mu2))
      throw Error(ErrorCode::HullDataInconsistent, "weights do not reproduce the hull facet");
    ConeElement b1 = zero_element(z1);
    ConeElement b2 = zero_element(z2);
    for (Index j = 0; j < mu1.size(); ++j)
      if (mu1(j) != 0) b1 = added(b1, scaled(f1.b_list[usize(j)], mu1(j)));
    for (Index j = 0; j < mu2.size(); ++j)
      if (mu2(j) != 0) b2 = added(b2, scaled(f2.b_list[usize(j)], mu2(j)));
    out.b_list.push_back(concat(b1, b2, kind));
  }
  return out;
}

ConeFactorization transpose_polar(const ConeFactorization& f) {
  if (f.cone.kind == ConeKind::CompletelyPositive)
    throw Error(ErrorCode::InvalidInput, "the completely positive cone is not self-dual");
  ConeFactorization out;
  out.cone = f.cone;
  out.a_list = f.b_list;
  out.b_list = f.a_list;
  return out;
}

ProjectiveImage transform_projective(const Polytope& p, const ConeFactorization& f, const RatMatrix& pmat,
                                     const RatVector& c) {
  const Index n = p.dim;
  if (pmat.rows() != n || pmat.cols() != n || c.size() != n)
    throw Error(ErrorCode::ShapeMismatch, "projective map must be square in the polytope's dimension");
  if (!p.origin_interior) throw Error(ErrorCode::OriginNotInterior, "canonical slack needs the origin interior");
  if (f.rows() != static_cast<Index>(p.vertices.size()) || f.cols() != static_cast<Index>(p.facets.size()))
    throw Error(ErrorCode::ShapeMismatch, "factorization does not match the polytope");
  RatMatrix aug(n, 2 * n);
  aug << pmat, RatMatrix::Identity(n, n);
  const auto red = rref(aug);
  if (red.rank() < n || red.pivots[usize(n - 1)] != n - 1)
    throw Error(ErrorCode::InvalidInput, "projective map matrix is singular");
  const RatMatrix inv = red.reduced.rightCols(n);

  ProjectiveImage out;
  out.polytope.dim = n;
  out.factorization.cone = f.cone;
  out.factorization.b_list = f.b_list;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    const Rational den = 1 + c.dot(p.vertices[i]);
    if (den <= 0) throw Error(ErrorCode::DenominatorVanishes, "1 + <c, v> must be positive at every vertex");
    out.polytope.vertices.push_back(pmat * p.vertices[i] / den);
    out.factorization.a_list.push_back(scaled(f.a_list[i], 1 / den));
  }
  if (!f.a_certificates.empty()) out.factorization.a_certificates.assign(f.a_list.size(), std::nullopt);
  for (Index j = 0; j < static_cast<Index>(p.facets.size()); ++j) {
    const RatVector a = inv.transpose() * RatVector(canonical_normal(p, j) + c);
    out.polytope.facets.push_back({a, Rational(1)});
  }
  out.polytope.origin_interior = true;
  return out;
}

}  // namespace conelift
