#include <conelift/cones.hpp>
#include <conelift/error.hpp>
#include <conelift/lift.hpp>
#include <conelift/linalg.hpp>
#include <conelift/lp.hpp>

#include <algorithm>
#include <random>

namespace conelift {

namespace {

std::size_t usize(Index i) { return static_cast<std::size_t>(i); }

bool contains_point(const std::vector<RatVector>& pts, const RatVector& x) {
  return std::find(pts.begin(), pts.end(), x) != pts.end();
}

// (i, j) with i <= j for every flat coordinate of a dim x dim symmetric matrix.
std::vector<std::pair<Index, Index>> flat_entries(Index dim) {
  std::vector<std::pair<Index, Index>> out(usize(flat_size(dim)));
  for (Index i = 0; i < dim; ++i)
    for (Index j = i; j < dim; ++j) out[usize(flat_index(i, j, dim))] = {i, j};
  return out;
}

// Moves the columns of a system in old coordinates to the new coordinates given by `to`.
RatMatrix remap_columns(const RatMatrix& m, const std::vector<Index>& to, Index cols) {
  RatMatrix out = RatMatrix::Zero(m.rows(), cols);
  for (Index t = 0; t < m.cols(); ++t) out.col(to[usize(t)]) = m.col(t);
  return out;
}

RatVector remap_point(const RatVector& z, const std::vector<Index>& to, Index cols) {
  RatVector out = RatVector::Zero(cols);
  for (Index t = 0; t < z.size(); ++t) out(to[usize(t)]) = z(t);
  return out;
}

// Rows forcing the listed coordinates to zero.
RatMatrix zero_rows(const std::vector<Index>& coords, Index cols) {
  RatMatrix out = RatMatrix::Zero(static_cast<Index>(coords.size()), cols);
  for (std::size_t t = 0; t < coords.size(); ++t) out(static_cast<Index>(t), coords[t]) = 1;
  return out;
}

RatMatrix stack(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows() + b.rows(), a.cols());
  out << a, b;
  return out;
}

RatVector stack(const RatVector& a, const RatVector& b) {
  RatVector out(a.size() + b.size());
  out << a, b;
  return out;
}

// Orthant lift of size k as a psd lift of size k on the diagonal.
AffineLift as_psd(const AffineLift& l) {
  if (l.cone.kind != ConeKind::Orthant) return l;
  const Index k = l.cone.size;
  const Index cols = flat_size(k);
  std::vector<Index> to;
  for (Index t = 0; t < k; ++t) to.push_back(flat_index(t, t, k));
  std::vector<Index> off;
  for (Index i = 0; i < k; ++i)
    for (Index j = i + 1; j < k; ++j) off.push_back(flat_index(i, j, k));
  AffineLift out;
  out.cone = {ConeKind::Psd, k};
  out.e_mat = stack(remap_columns(l.e_mat, to, cols), zero_rows(off, cols));
  out.e_rhs = stack(l.e_rhs, RatVector(RatVector::Zero(static_cast<Index>(off.size()))));
  out.recovery = remap_columns(l.recovery, to, cols);
  out.offset = l.offset;
  for (const auto& z : l.preimages) out.preimages.push_back(remap_point(z, to, cols));
  out.notes = l.notes;
  return out;
}

std::vector<Halfspace> nonneg_halfspaces(Index n) {
  std::vector<Halfspace> out;
  for (Index t = 0; t < n; ++t) {
    RatVector a = RatVector::Zero(n);
    a(t) = -1;
    out.push_back({a, 0});
  }
  return out;
}

std::vector<Halfspace> equations(const RatMatrix& e, const RatVector& rhs) {
  std::vector<Halfspace> out;
  for (Index i = 0; i < e.rows(); ++i) out.push_back({e.row(i).transpose(), rhs(i)});
  return out;
}

}  // namespace

Index cone_coords(const ConeDescriptor& cone) {
  return cone.kind == ConeKind::Orthant ? cone.size : flat_size(cone.size);
}

RatVector to_coords(const ConeElement& x, bool dual) {
  if (const auto* v = std::get_if<RatVector>(&x)) return *v;
  const auto& s = std::get<SymmetricMatrix>(x);
  return dual ? flatten_dual(s) : flatten(s);
}

bool coords_in_cone(const RatVector& z, const ConeDescriptor& cone) {
  if (z.size() != cone_coords(cone)) return false;
  if (cone.kind == ConeKind::Orthant) return (z.array() >= 0).all();
  const SymmetricMatrix s = unflatten(z, cone.size);
  return cone.kind == ConeKind::Psd ? psd_check_exact(s) : cp_check(s);
}

std::vector<Halfspace> slack_facets(const Polytope& p) {
  if (!p.origin_interior) return p.facets;
  std::vector<Halfspace> out;
  for (Index j = 0; j < static_cast<Index>(p.facets.size()); ++j) out.push_back({canonical_normal(p, j), 1});
  return out;
}

AffineLift build_lift(const Polytope& p, const ConeFactorization& f) {
  if (f.cone.kind == ConeKind::CompletelyPositive)
    throw Error(ErrorCode::InvalidInput, "lifts are built over the orthant and the psd cone");
  const RatMatrix s = slack_matrix(p, p.origin_interior).matrix;
  if (f.rows() != s.rows() || f.cols() != s.cols())
    throw Error(ErrorCode::ShapeMismatch, "factorization does not match the slack matrix shape");
  if (!verify_factorization(s, f)) throw Error(ErrorCode::FactorizationInvalid, "factorization does not verify");

  const Index n = p.dim;
  const Index nz = cone_coords(f.cone);
  const auto facets = slack_facets(p);
  const Index rows = static_cast<Index>(facets.size() + p.equalities.size());
  RatMatrix g = RatMatrix::Zero(rows, n + nz);
  RatVector h(rows);
  for (std::size_t j = 0; j < facets.size(); ++j) {
    const auto r = static_cast<Index>(j);
    g.row(r).head(n) = facets[j].a.transpose();
    g.row(r).tail(nz) = to_coords(f.b_list[j], true).transpose();
    h(r) = facets[j].b;
  }
  for (std::size_t k = 0; k < p.equalities.size(); ++k) {
    const auto r = static_cast<Index>(facets.size() + k);
    g.row(r).head(n) = p.equalities[k].a.transpose();
    h(r) = p.equalities[k].b;
  }

  // x is determined by z exactly when every x column is a pivot.
  RatMatrix aug(rows, n + nz + 1);
  aug << g, h;
  const auto red = rref(aug);
  Index x_pivots = 0;
  for (Index c : red.pivots) x_pivots += c < n ? 1 : 0;
  if (x_pivots != n) throw Error(ErrorCode::RecoveryNotUnique, "x is not determined by the cone coordinates");

  AffineLift out;
  out.cone = f.cone;
  out.recovery = RatMatrix::Zero(n, nz);
  out.offset = RatVector::Zero(n);
  for (Index i = 0; i < n; ++i) {
    const Index c = red.pivots[usize(i)];
    out.recovery.row(c) = -red.reduced.row(i).segment(n, nz);
    out.offset(c) = red.reduced(i, n + nz);
  }
  std::vector<Index> keep;
  for (Index t = 0; t < nz; ++t) keep.push_back(n + t);
  std::tie(out.e_mat, out.e_rhs) = affine_eliminate(g, h, keep);
  for (std::size_t i = 0; i < f.a_list.size(); ++i) {
    RatVector z = to_coords(f.a_list[i], false);
    if (out.recover(z) != p.vertices[i])
      throw Error(ErrorCode::FactorizationInvalid, "recovery does not return the vertex");
    out.preimages.push_back(std::move(z));
  }
  return out;
}

std::string_view to_string(LiftStatus s) {
  switch (s) {
    case LiftStatus::Verified: return "verified";
    case LiftStatus::Refuted: return "refuted";
    case LiftStatus::PartialWitness: return "partial_witness";
  }
  return "?";
}

LiftVerdict verify_lift(const Polytope& p, const AffineLift& lift, std::uint64_t seed) {
  LiftVerdict v;
  auto refute = [&](std::string why) {
    v.status = LiftStatus::Refuted;
    v.detail.push_back(std::move(why));
    return v;
  };
  if (lift.ambient() != p.dim) return refute("recovery lands in the wrong dimension");
  if (lift.e_mat.cols() != cone_coords(lift.cone)) return refute("equalities have the wrong number of coordinates");

  if (lift.cone.kind == ConeKind::Orthant) {
    Polyhedron slice;
    try {
      slice = vertex_enumeration(nonneg_halfspaces(lift.coords()), equations(lift.e_mat, lift.e_rhs), lift.coords());
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Infeasible) throw;
      return refute("slice is empty");
    }
    for (const auto& d : slice.rays)
      if (!(lift.recovery * d).isZero()) return refute("image is unbounded");
    std::vector<RatVector> images;
    for (const auto& z : slice.vertices) {
      RatVector x = lift.recover(z);
      if (!contains(p, x)) return refute("a slice vertex maps outside the polytope");
      if (!contains_point(images, x)) images.push_back(std::move(x));
    }
    for (const auto& x : p.vertices)
      if (!contains_point(images, x)) return refute("a vertex of the polytope is not in the image");
    v.status = LiftStatus::Verified;
    v.detail.push_back(std::to_string(slice.vertices.size()) + " slice vertices, " + std::to_string(images.size()) +
                       " distinct images, " + std::to_string(slice.rays.size()) + " rays in the kernel");
    return v;
  }

  for (const auto& z : lift.preimages) {
    if (z.size() != lift.coords() || RatVector(lift.e_mat * z) != lift.e_rhs)
      return refute("a stored preimage violates the equalities");
    if (!coords_in_cone(z, lift.cone)) return refute("a stored preimage is not in the cone");
    const RatVector x = lift.recover(z);
    if (!contains(p, x)) return refute("a stored preimage maps outside the polytope");
  }
  Index covered = 0;
  for (const auto& x : p.vertices) {
    bool hit = false;
    for (const auto& z : lift.preimages) hit = hit || lift.recover(z) == x;
    covered += hit ? 1 : 0;
  }
  std::mt19937_64 rng(seed);
  int samples = 0;
  if (!lift.preimages.empty()) {
    for (; samples < 20; ++samples) {
      RatVector z = RatVector::Zero(lift.coords());
      Rational total = 0;
      for (const auto& w : lift.preimages) {
        const Rational c = static_cast<int>(rng() % 4);
        z += w * c;
        total += c;
      }
      if (total == 0) continue;
      z /= total;
      if (!contains(p, lift.recover(z))) return refute("a point of the slice maps outside the polytope");
    }
  }
  v.status = LiftStatus::PartialWitness;
  v.detail.push_back(std::to_string(lift.preimages.size()) + " preimages in the slice and the cone");
  v.detail.push_back(std::to_string(covered) + " of " + std::to_string(p.vertices.size()) + " vertices witnessed");
  v.detail.push_back(std::to_string(samples) + " sampled slice points recover into the polytope");
  return v;
}

ConeFactorization factorization_from_orthant_lift(const Polytope& p, const AffineLift& lift, bool restrict_to_face,
                                                  std::vector<std::string>* notes) {
  if (lift.cone.kind != ConeKind::Orthant) throw Error(ErrorCode::InvalidInput, "not an orthant lift");
  if (lift.ambient() != p.dim) throw Error(ErrorCode::ShapeMismatch, "lift and polytope dimensions differ");
  const Index k = lift.coords();
  Polyhedron slice;
  try {
    slice = vertex_enumeration(nonneg_halfspaces(k), equations(lift.e_mat, lift.e_rhs), k);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Infeasible) throw;
    throw Error(ErrorCode::FiberEmpty, "slice is empty");
  }
  // Coordinates positive somewhere on the slice span the smallest face of the orthant meeting it.
  std::vector<Index> live;
  for (Index t = 0; t < k; ++t) {
    bool pos = false;
    for (const auto& z : slice.vertices) pos = pos || z(t) > 0;
    for (const auto& d : slice.rays) pos = pos || d(t) > 0;
    if (pos) live.push_back(t);
  }
  if (static_cast<Index>(live.size()) < k && !restrict_to_face)
    throw Error(ErrorCode::NotProper, "slice misses the interior of the orthant");
  if (notes && static_cast<Index>(live.size()) < k)
    notes->push_back("restricted to the face of the orthant spanned by " + std::to_string(live.size()) + " of " +
                     std::to_string(k) + " coordinates");
  const Index kl = static_cast<Index>(live.size());
  RatMatrix e(lift.e_mat.rows(), kl), r(lift.recovery.rows(), kl);
  for (Index t = 0; t < kl; ++t) {
    e.col(t) = lift.e_mat.col(live[usize(t)]);
    r.col(t) = lift.recovery.col(live[usize(t)]);
  }

  ConeFactorization f;
  f.cone = {ConeKind::Orthant, k};
  for (const auto& v : p.vertices) {
    const RatMatrix fiber_eq = stack(e, r);
    const RatVector fiber_rhs = stack(lift.e_rhs, RatVector(v - lift.offset));
    Polyhedron fiber;
    try {
      fiber = vertex_enumeration(nonneg_halfspaces(kl), equations(fiber_eq, fiber_rhs), kl);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::Infeasible) throw;
      throw Error(ErrorCode::FiberEmpty, "a vertex has no preimage in the slice");
    }
    if (fiber.vertices.empty()) throw Error(ErrorCode::FiberEmpty, "fiber has no vertex");
    const RatVector first = *std::min_element(fiber.vertices.begin(), fiber.vertices.end(), lex_less);
    f.a_list.emplace_back(remap_point(first, live, k));
  }

  // <z, B_j> = b_j - <a_j, R z + r> on the slice: B_j = E^T mu - R^T a_j >= 0 with <e, mu> = b_j - <a_j, r>.
  const Index me = e.rows();
  for (const auto& h : slack_facets(p)) {
    const RatVector g = r.transpose() * h.a;
    const Rational c0 = h.b - h.a.dot(lift.offset);
    RatMatrix lp = RatMatrix::Zero(kl + 1, 2 * me + kl);
    lp.block(0, 0, kl, me) = e.transpose();
    lp.block(0, me, kl, me) = -e.transpose();
    lp.block(0, 2 * me, kl, kl) = -RatMatrix::Identity(kl, kl);
    lp.block(kl, 0, 1, me) = lift.e_rhs.transpose();
    lp.block(kl, me, 1, me) = -lift.e_rhs.transpose();
    RatVector rhs(kl + 1);
    rhs << g, c0;
    const auto x = nonneg_solve(lp, rhs);
    if (!x) throw Error(ErrorCode::NotProper, "no exact multipliers for a facet inequality");
    f.b_list.emplace_back(remap_point(RatVector(x->tail(kl)), live, k));
  }
  if (!verify_factorization(slack_matrix(p, p.origin_interior).matrix, f))
    throw Error(ErrorCode::FactorizationInvalid, "extracted factorization does not verify");
  return f;
}

AffineLift lift_product(const AffineLift& l1, const AffineLift& l2) {
  const bool orthant = l1.cone.kind == ConeKind::Orthant && l2.cone.kind == ConeKind::Orthant;
  const AffineLift a = orthant ? l1 : as_psd(l1);
  const AffineLift b = orthant ? l2 : as_psd(l2);
  if (a.cone.kind != b.cone.kind) throw Error(ErrorCode::InvalidInput, "lift products need orthant or psd cones");
  const Index k1 = a.cone.size;
  const Index k2 = b.cone.size;
  AffineLift out;
  out.cone = {a.cone.kind, k1 + k2};
  const Index cols = cone_coords(out.cone);
  std::vector<Index> to1, to2, off;
  if (orthant) {
    for (Index t = 0; t < k1; ++t) to1.push_back(t);
    for (Index t = 0; t < k2; ++t) to2.push_back(k1 + t);
  } else {
    for (const auto& [i, j] : flat_entries(k1)) to1.push_back(flat_index(i, j, k1 + k2));
    for (const auto& [i, j] : flat_entries(k2)) to2.push_back(flat_index(k1 + i, k1 + j, k1 + k2));
    for (Index i = 0; i < k1; ++i)
      for (Index j = k1; j < k1 + k2; ++j) off.push_back(flat_index(i, j, k1 + k2));
  }
  out.e_mat = stack(stack(remap_columns(a.e_mat, to1, cols), remap_columns(b.e_mat, to2, cols)), zero_rows(off, cols));
  out.e_rhs = stack(stack(a.e_rhs, b.e_rhs), RatVector(RatVector::Zero(static_cast<Index>(off.size()))));
  const Index n1 = a.ambient();
  const Index n2 = b.ambient();
  out.recovery = RatMatrix::Zero(n1 + n2, cols);
  out.recovery.topRows(n1) = remap_columns(a.recovery, to1, cols);
  out.recovery.bottomRows(n2) = remap_columns(b.recovery, to2, cols);
  out.offset = stack(a.offset, b.offset);
  for (const auto& z1 : a.preimages)
    for (const auto& z2 : b.preimages) out.preimages.push_back(remap_point(z1, to1, cols) + remap_point(z2, to2, cols));
  out.notes = a.notes;
  out.notes.insert(out.notes.end(), b.notes.begin(), b.notes.end());
  return out;
}

AffineLift lift_linear_image(const AffineLift& lift, const RatMatrix& t) {
  if (t.cols() != lift.ambient()) throw Error(ErrorCode::ShapeMismatch, "linear map has wrong source dimension");
  AffineLift out = lift;
  out.recovery = t * lift.recovery;
  out.offset = t * lift.offset;
  return out;
}

AffineLift lift_face_restriction(const AffineLift& lift, const Halfspace& h) {
  if (h.a.size() != lift.ambient()) throw Error(ErrorCode::ShapeMismatch, "face equation has wrong dimension");
  AffineLift out = lift;
  out.e_mat = stack(lift.e_mat, RatMatrix(h.a.transpose() * lift.recovery));
  RatVector extra(1);
  extra << h.b - h.a.dot(lift.offset);
  out.e_rhs = stack(lift.e_rhs, extra);
  out.preimages.clear();
  for (const auto& z : lift.preimages)
    if (h.a.dot(lift.recover(z)) == h.b) out.preimages.push_back(z);
  return out;
}

AffineLift lift_projective(const AffineLift& lift, const RatMatrix& pmat, const RatVector& c) {
  const Index n = lift.ambient();
  if (pmat.rows() != n || pmat.cols() != n || c.size() != n)
    throw Error(ErrorCode::ShapeMismatch, "projective map has wrong dimensions");
  if (rank(pmat) != n) throw Error(ErrorCode::DegenerateImage, "projective map is singular");
  const Rational ee = lift.e_rhs.squaredNorm();
  if (ee == 0) throw Error(ErrorCode::DegenerateImage, "slice contains the origin of the cone coordinates");
  // w . z = 1 on the slice, so 1 + <c, x> = d . z is linear there.
  const RatVector w = lift.e_mat.transpose() * lift.e_rhs / ee;
  const RatVector d = w * (1 + c.dot(lift.offset)) + lift.recovery.transpose() * c;
  AffineLift out;
  out.cone = lift.cone;
  out.e_mat = stack(RatMatrix(lift.e_mat - lift.e_rhs * w.transpose()), RatMatrix(d.transpose()));
  out.e_rhs = RatVector::Zero(out.e_mat.rows());
  out.e_rhs(out.e_rhs.size() - 1) = 1;
  out.recovery = pmat * (lift.recovery + lift.offset * w.transpose());
  out.offset = RatVector::Zero(n);
  for (const auto& z : lift.preimages) {
    const Rational den = d.dot(z);
    if (den <= 0) throw Error(ErrorCode::ProjectiveDenominatorVanishes, "1 + <c, x> must be positive on the polytope");
    out.preimages.push_back(z / den);
  }
  out.notes = lift.notes;
  return out;
}

Polytope cross_polytope(Index n) {
  std::vector<RatVector> pts;
  for (Index i = 0; i < n; ++i)
    for (int s : {1, -1}) {
      RatVector v = RatVector::Zero(n);
      v(i) = s;
      pts.push_back(v);
    }
  return from_vertices(pts);
}

AffineLift cross_polytope_lift(Index n) {
  AffineLift out;
  out.cone = {ConeKind::Orthant, 2 * n};
  out.e_mat = RatMatrix::Constant(1, 2 * n, Rational(1, 2));
  out.e_rhs = RatVector::Ones(1);
  out.recovery = RatMatrix::Zero(n, 2 * n);
  out.offset = RatVector::Zero(n);
  for (Index i = 0; i < n; ++i) {
    out.recovery(i, 2 * i) = Rational(-1, 2);
    out.recovery(i, 2 * i + 1) = Rational(1, 2);
  }
  for (Index i = 0; i < n; ++i)
    for (int s : {1, -1}) {
      RatVector z = RatVector::Zero(2 * n);
      z(s > 0 ? 2 * i + 1 : 2 * i) = 2;
      out.preimages.push_back(z);
    }
  return out;
}

}  // namespace conelift
