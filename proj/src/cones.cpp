#include <conelift/cones.hpp>
#include <conelift/error.hpp>
#include <conelift/linalg.hpp>
#include <conelift/lp.hpp>

namespace conelift {

bool psd_check_exact(const SymmetricMatrix& s) {
  RatMatrix m = s.matrix();
  const Index n = m.rows();
  // Positive rescaling to integers keeps the Bareiss divisions exact and preserves the answer.
  Integer l = 1;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) l = boost::multiprecision::lcm(l, denominator(m(i, j)));
  m *= Rational(l);

  Rational prev(1);
  for (Index k = 0; k < n; ++k) {
    Index piv = k;
    while (piv < n && m(piv, piv) == 0) ++piv;
    if (piv == n) {
      // All remaining diagonal entries vanish: psd only if the remaining block is zero.
      for (Index i = k; i < n; ++i)
        for (Index j = k; j < n; ++j)
          if (m(i, j) != 0) return false;
      return true;
    }
    if (m(piv, piv) < 0) return false;
    if (piv != k) {
      m.row(piv).swap(m.row(k));
      m.col(piv).swap(m.col(k));
    }
    const Rational p = m(k, k);
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j) m(i, j) = (p * m(i, j) - m(i, k) * m(k, j)) / prev;
    for (Index i = k + 1; i < n; ++i) m(i, k) = m(k, i) = 0;
    prev = p;
  }
  return true;
}

CopositivityVerdict copositive_check_exact(const SymmetricMatrix& m, Index limit) {
  const Index n = m.dim();
  if (n > limit) throw Error(ErrorCode::DimensionTooLarge, "copositivity check limited to dimension " + std::to_string(limit));
  const RatMatrix& a = m.matrix();
  const std::uint64_t supports = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < supports; ++mask) {
    std::vector<Index> s;
    for (Index i = 0; i < n; ++i)
      if (mask >> i & 1U) s.push_back(i);
    const Index k = static_cast<Index>(s.size());
    // Unknowns (u, lambda): M_S u - lambda 1 = 0, 1^T u = 1.
    RatMatrix sys = RatMatrix::Zero(k + 1, k + 1);
    RatVector rhs = RatVector::Zero(k + 1);
    for (Index i = 0; i < k; ++i) {
      for (Index j = 0; j < k; ++j) sys(i, j) = a(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(j)]);
      sys(i, k) = -1;
      sys(k, i) = 1;
    }
    rhs(k) = 1;
    const auto particular = solve_affine(sys, rhs);
    if (!particular) continue;
    // lambda is constant on the solution set, and equals u^T M_S u there.
    const Rational lambda = (*particular)(k);
    if (lambda >= 0) continue;

    std::optional<RatVector> u;
    if (rank(sys) == k + 1) {
      if (((*particular).head(k).array() >= 0).all()) u = (*particular).head(k);
    } else {
      RatMatrix g(k + 1, k);
      g.topRows(k) = a(s, s);
      g.row(k).setOnes();
      RatVector h(k + 1);
      h.head(k).setConstant(lambda);
      h(k) = 1;
      u = nonneg_solve(g, h);
    }
    if (!u) continue;
    RatVector x = RatVector::Zero(n);
    for (Index i = 0; i < k; ++i) x(s[static_cast<std::size_t>(i)]) = (*u)(i);
    return {CopositivityStatus::NotCopositive, x};
  }
  return {CopositivityStatus::Copositive, std::nullopt};
}

std::optional<SymmetricMatrix> copositive_reduction(const SymmetricMatrix& m) {
  const Index n = m.dim();
  if (n < 2 || m(0, 0) <= 0) return std::nullopt;
  const RatVector b = m.matrix().col(0).tail(n - 1);
  if ((b.array() > 0).any()) return std::nullopt;
  RatMatrix red = m(0, 0) * m.matrix().bottomRightCorner(n - 1, n - 1) - b * b.transpose();
  return SymmetricMatrix(std::move(red));
}

bool cp_check(const SymmetricMatrix& m, const std::optional<RatMatrix>& certificate) {
  if (certificate) {
    const RatMatrix& nmat = *certificate;
    if (nmat.cols() != m.dim() || (nmat.array() < 0).any()) return false;
    return RatMatrix(nmat.transpose() * nmat) == m.matrix();
  }
  if ((m.matrix().array() < 0).any()) return false;
  const Index r = rank(m.matrix());
  return r == 0 || (r == 1 && psd_check_exact(m));
}

}  // namespace conelift
