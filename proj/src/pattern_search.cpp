#include <conelift/error.hpp>
#include <conelift/factorize.hpp>
#include <conelift/linalg.hpp>
#include <conelift/lp.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <map>
#include <thread>

namespace conelift {

namespace {

using Mask = std::uint64_t;

std::size_t usize(Index i) { return static_cast<std::size_t>(i); }

struct Rect {
  Mask rows = 0;
  Mask cols = 0;
};

enum class Outcome { Solved, RatioRefuted, LpRefuted, Undecided };

struct PatternOutcome {
  Outcome outcome = Outcome::Undecided;
  std::optional<ConeFactorization> factorization;
};

// Values of one column of A (or row of B) fixed by the entries covered by that term alone.
// Rows of the term are linked when they share a uniquely covered column; along a link the
// ratio of the two A-entries equals the ratio of the two M-entries.
struct Forcing {
  bool consistent = true;
  bool forced = false;          // one component spans all rows of the term
  std::vector<Rational> value;  // 0 where unreached
};

Forcing force_side(const RatMatrix& m, const BoolMatrix& pa, const BoolMatrix& pb, const std::vector<std::vector<int>>& cover,
                   Index r) {
  // cover[i][j] = index of the unique term covering (i, j), -1 if none or several.
  const Index p = m.rows();
  const Index q = m.cols();
  Forcing out;
  out.value.assign(usize(p), Rational(0));
  std::vector<Index> rows;
  for (Index i = 0; i < p; ++i)
    if (pa(i, r)) rows.push_back(i);
  if (rows.empty()) {
    out.forced = true;
    return out;
  }
  std::vector<int> comp(usize(p), -1);
  int components = 0;
  for (Index start : rows) {
    if (comp[usize(start)] >= 0) continue;
    comp[usize(start)] = components;
    out.value[usize(start)] = 1;
    std::vector<Index> stack{start};
    while (!stack.empty()) {
      const Index i = stack.back();
      stack.pop_back();
      for (Index j = 0; j < q; ++j) {
        if (!pb(r, j) || cover[usize(i)][usize(j)] != r) continue;
        for (Index i2 : rows) {
          if (i2 == i || cover[usize(i2)][usize(j)] != r) continue;
          const Rational v = out.value[usize(i)] * m(i2, j) / m(i, j);
          if (comp[usize(i2)] < 0) {
            comp[usize(i2)] = components;
            out.value[usize(i2)] = v;
            stack.push_back(i2);
          } else if (out.value[usize(i2)] != v) {
            out.consistent = false;
            return out;
          }
        }
      }
    }
    ++components;
  }
  out.forced = components == 1;
  return out;
}

std::vector<std::vector<int>> unique_cover(const RatMatrix& m, const BoolMatrix& pa, const BoolMatrix& pb) {
  const Index p = m.rows();
  const Index q = m.cols();
  const Index k = pa.cols();
  std::vector<std::vector<int>> cover(usize(p), std::vector<int>(usize(q), -1));
  for (Index i = 0; i < p; ++i) {
    for (Index j = 0; j < q; ++j) {
      if (m(i, j) == 0) continue;
      int found = -1;
      int count = 0;
      for (Index r = 0; r < k; ++r) {
        if (pa(i, r) && pb(r, j)) {
          found = static_cast<int>(r);
          ++count;
        }
      }
      if (count == 1) cover[usize(i)][usize(j)] = found;
    }
  }
  return cover;
}

// B >= 0 with a B = m, B supported on pb; nullopt when infeasible.
std::optional<RatMatrix> solve_other_side(const RatMatrix& m, const RatMatrix& a, const BoolMatrix& pb) {
  const Index k = a.cols();
  RatMatrix b = RatMatrix::Zero(k, m.cols());
  for (Index j = 0; j < m.cols(); ++j) {
    std::vector<Index> allowed;
    for (Index r = 0; r < k; ++r)
      if (pb(r, j)) allowed.push_back(r);
    RatMatrix g(m.rows(), static_cast<Index>(allowed.size()));
    for (std::size_t t = 0; t < allowed.size(); ++t) g.col(static_cast<Index>(t)) = a.col(allowed[t]);
    auto x = nonneg_solve(g, RatVector(m.col(j)));
    if (!x) return std::nullopt;
    for (std::size_t t = 0; t < allowed.size(); ++t) b(allowed[t], j) = (*x)(static_cast<Index>(t));
  }
  return b;
}

PatternOutcome decide_pattern(const RatMatrix& m, const BoolMatrix& pa, const BoolMatrix& pb) {
  const Index k = pa.cols();
  const RatMatrix mt = m.transpose();
  const BoolMatrix pat = pb.transpose();
  const BoolMatrix pbt = pa.transpose();
  const auto cover = unique_cover(m, pa, pb);
  const auto cover_t = unique_cover(mt, pat, pbt);

  std::vector<Forcing> fa, fb;
  bool a_forced = true, b_forced = true;
  for (Index r = 0; r < k; ++r) {
    fa.push_back(force_side(m, pa, pb, cover, r));
    fb.push_back(force_side(mt, pat, pbt, cover_t, r));
    if (!fa.back().consistent || !fb.back().consistent) return {Outcome::RatioRefuted, std::nullopt};
    a_forced = a_forced && fa.back().forced;
    b_forced = b_forced && fb.back().forced;
  }

  auto seeded = [&](const std::vector<Forcing>& f, const BoolMatrix& pattern) {
    RatMatrix s = RatMatrix::Zero(pattern.rows(), k);
    for (Index r = 0; r < k; ++r)
      for (Index i = 0; i < pattern.rows(); ++i)
        if (pattern(i, r)) s(i, r) = f[usize(r)].value[usize(i)] != 0 ? f[usize(r)].value[usize(i)] : Rational(1);
    return s;
  };
  const RatMatrix a0 = seeded(fa, pa);
  const RatMatrix b0t = seeded(fb, pat);

  if (auto b = solve_other_side(m, a0, pb)) return {Outcome::Solved, orthant_factorization(a0, *b)};
  if (a_forced) return {Outcome::LpRefuted, std::nullopt};
  if (auto at = solve_other_side(mt, b0t, pbt)) {
    return {Outcome::Solved, orthant_factorization(RatMatrix(at->transpose()), RatMatrix(b0t.transpose()))};
  }
  if (b_forced) return {Outcome::LpRefuted, std::nullopt};

  // Alternate from the all-ones seed: each exact solve is restricted to the support of the
  // previous solution on the other side.
  RatMatrix a = RatMatrix::Zero(m.rows(), k);
  for (Index i = 0; i < m.rows(); ++i)
    for (Index r = 0; r < k; ++r)
      if (pa(i, r)) a(i, r) = 1;
  for (int round = 0; round < 4; ++round) {
    if (auto b = solve_other_side(m, a, pb)) return {Outcome::Solved, orthant_factorization(a, *b)};
    RatMatrix bt = RatMatrix::Zero(m.cols(), k);
    for (Index j = 0; j < m.cols(); ++j)
      for (Index r = 0; r < k; ++r)
        if (pb(r, j)) bt(j, r) = 1 + round;
    auto at = solve_other_side(mt, bt, pbt);
    if (!at) break;
    a = at->transpose();
    for (Index i = 0; i < a.rows(); ++i)
      for (Index r = 0; r < k; ++r)
        if (pa(i, r) && a(i, r) == 0) a(i, r) = Rational(1, 2);
  }
  return {Outcome::Undecided, std::nullopt};
}

struct Problem {
  const RatMatrix& m;
  Index p, q, k;
  std::vector<Mask> row_support;
  std::vector<Rect> rects;
};

std::vector<Rect> maximal_rectangles(const std::vector<Mask>& row_support, Index p) {
  std::vector<Mask> closed;
  std::vector<Mask> queue;
  auto add = [&](Mask c) {
    if (c == 0 || std::find(closed.begin(), closed.end(), c) != closed.end()) return;
    closed.push_back(c);
    queue.push_back(c);
  };
  for (Mask s : row_support) add(s);
  while (!queue.empty()) {
    const Mask c = queue.back();
    queue.pop_back();
    for (Mask s : row_support) add(c & s);
  }
  std::vector<Rect> out;
  for (Mask c : closed) {
    Rect r;
    r.cols = c;
    for (Index i = 0; i < p; ++i)
      if ((row_support[usize(i)] & c) == c) r.rows |= Mask{1} << i;
    out.push_back(r);
  }
  std::sort(out.begin(), out.end(), [](const Rect& a, const Rect& b) {
    return a.cols != b.cols ? a.cols < b.cols : a.rows < b.rows;
  });
  return out;
}

// Square submatrices of M with nonzero determinant, memoized per worker.
class RankOracle {
 public:
  explicit RankOracle(const RatMatrix& m) : m_(m) {}

  bool nonsingular(Mask rows, Mask cols) {
    const auto key = std::make_pair(rows, cols);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const int s = std::popcount(rows);
    RatMatrix sub(s, s);
    Index a = 0;
    for (Index i = 0; i < m_.rows(); ++i) {
      if (!(rows >> i & 1)) continue;
      Index b = 0;
      for (Index j = 0; j < m_.cols(); ++j)
        if (cols >> j & 1) sub(a, b++) = m_(i, j);
      ++a;
    }
    const bool r = rank(sub) == s;
    memo_.emplace(key, r);
    return r;
  }

 private:
  const RatMatrix& m_;
  std::map<std::pair<Mask, Mask>, bool> memo_;
};

std::vector<Mask> subsets_of_size(Index n, int s) {
  std::vector<Mask> out;
  if (s > n) return out;
  Mask x = (Mask{1} << s) - 1;
  const Mask limit = n == 64 ? ~Mask{0} : (Mask{1} << n);
  while (x < limit && x != 0) {
    out.push_back(x);
    const Mask c = x & -x;
    const Mask r = x + c;
    if (r == 0) break;
    x = (((r ^ x) >> 2) / c) | r;
  }
  return out;
}

// Some square nonsingular submatrix meets fewer terms than its size: the cover cannot carry M.
bool rank_refutes(const std::vector<Rect>& cover, RankOracle& oracle, int max_size,
                  const std::vector<std::vector<Mask>>& row_sets, const std::vector<std::vector<Mask>>& col_sets,
                  std::int64_t& work) {
  for (int s = 1; s <= max_size; ++s) {
    for (Mask rows : row_sets[usize(s)]) {
      std::vector<Mask> meeting_cols;
      for (const Rect& r : cover)
        if (r.rows & rows) meeting_cols.push_back(r.cols);
      for (Mask cols : col_sets[usize(s)]) {
        int count = 0;
        for (Mask c : meeting_cols) count += (c & cols) != 0;
        ++work;
        if (count < s && oracle.nonsingular(rows, cols)) return true;
      }
    }
  }
  return false;
}

}  // namespace

std::optional<ConeFactorization> solve_orthant_pattern(const RatMatrix& m, const BooleanFactorization& pattern) {
  if (pattern.a.rows() != m.rows() || pattern.b.cols() != m.cols() || pattern.a.cols() != pattern.b.rows())
    throw Error(ErrorCode::ShapeMismatch, "pattern does not match the matrix");
  auto res = decide_pattern(m, pattern.a, pattern.b);
  if (res.outcome == Outcome::Solved && verify_factorization(m, *res.factorization)) return res.factorization;
  return std::nullopt;
}

PatternSearchResult orthant_pattern_search(const RatMatrix& m, Index k, std::int64_t budget, int threads) {
  if ((m.array() < 0).any()) throw Error(ErrorCode::NegativeEntry, "matrix has a negative entry");
  const Index p = m.rows();
  const Index q = m.cols();
  PatternSearchResult result;
  if (k >= std::min(p, q) || m.isZero()) {
    const ConeFactorization t = trivial_orthant_factorization(m);
    if (t.cone.size <= k) {
      result.status = SearchStatus::Found;
      result.factorization = pad_orthant(t, k);
      return result;
    }
  }
  if (k < 0 || rank(m) > k) {
    result.status = SearchStatus::None;
    return result;
  }
  if (p > 63 || q > 63) throw Error(ErrorCode::TooLarge, "pattern search supports at most 63 rows and columns");

  Problem pr{m, p, q, k, {}, {}};
  for (Index i = 0; i < p; ++i) {
    Mask s = 0;
    for (Index j = 0; j < q; ++j)
      if (m(i, j) != 0) s |= Mask{1} << j;
    pr.row_support.push_back(s);
  }
  pr.rects = maximal_rectangles(pr.row_support, p);
  result.stats.rectangles = static_cast<std::int64_t>(pr.rects.size());
  const auto nr = pr.rects.size();

  // Multisets of k rectangles covering supp(M), in lexicographic order.
  std::vector<std::vector<std::size_t>> last_cover(usize(p), std::vector<std::size_t>(usize(q), 0));
  for (std::size_t c = 0; c < nr; ++c)
    for (Index i = 0; i < p; ++i)
      for (Index j = 0; j < q; ++j)
        if ((pr.rects[c].rows >> i & 1) && (pr.rects[c].cols >> j & 1)) last_cover[usize(i)][usize(j)] = c;
  std::vector<std::vector<std::size_t>> covers;
  std::vector<std::size_t> pick;
  std::vector<Mask> covered(usize(p), 0);
  bool over_budget = false;
  std::function<void(std::size_t)> enumerate = [&](std::size_t start) {
    if (over_budget) return;
    if (++result.stats.nodes > budget) {
      over_budget = true;
      return;
    }
    Index first_row = -1;
    for (Index i = 0; i < p && first_row < 0; ++i)
      if (covered[usize(i)] != pr.row_support[usize(i)]) first_row = i;
    if (static_cast<Index>(pick.size()) == k) {
      if (first_row < 0) covers.push_back(pick);
      return;
    }
    std::size_t reach = nr - 1;
    if (first_row >= 0) {
      const int col = std::countr_zero(pr.row_support[usize(first_row)] & ~covered[usize(first_row)]);
      reach = last_cover[usize(first_row)][static_cast<std::size_t>(col)];
    }
    // Some later pick must cover the first uncovered cell; past its last cover nothing can.
    for (std::size_t c = start; c <= reach && c < nr; ++c) {
      const std::vector<Mask> saved = covered;
      for (Index i = 0; i < p; ++i)
        if (pr.rects[c].rows >> i & 1) covered[usize(i)] |= pr.rects[c].cols;
      pick.push_back(c);
      enumerate(c);
      pick.pop_back();
      covered = saved;
      if (over_budget) return;
    }
  };
  enumerate(0);
  result.stats.covers = static_cast<std::int64_t>(covers.size());
  if (over_budget) {
    result.status = SearchStatus::BudgetExceeded;
    return result;
  }

  const int max_size = static_cast<int>(std::min({p, q, k + 1, rank(m)}));
  std::vector<std::vector<Mask>> row_sets(usize(max_size) + 1), col_sets(usize(max_size) + 1);
  for (int s = 1; s <= max_size; ++s) {
    row_sets[usize(s)] = subsets_of_size(p, s);
    col_sets[usize(s)] = subsets_of_size(q, s);
  }

  enum : int { kPending, kSolved, kRank, kRatio, kLp, kUndecided, kSkipped };
  std::vector<int> verdict(covers.size(), kPending);
  std::vector<std::optional<ConeFactorization>> solutions(covers.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{covers.size()};
  std::atomic<std::int64_t> work{result.stats.nodes};
  std::atomic<bool> exhausted{false};

  auto worker = [&]() {
    RankOracle oracle(m);
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= covers.size()) return;
      if (idx > best.load() || exhausted.load()) {
        verdict[idx] = kSkipped;
        continue;
      }
      std::vector<Rect> cover;
      for (std::size_t c : covers[idx]) cover.push_back(pr.rects[c]);
      std::int64_t local = 0;
      const bool refuted = rank_refutes(cover, oracle, max_size, row_sets, col_sets, local);
      if (work.fetch_add(local + 1) + local + 1 > budget) exhausted = true;
      if (refuted) {
        verdict[idx] = kRank;
        continue;
      }
      BoolMatrix pa = BoolMatrix::Constant(p, k, false);
      BoolMatrix pb = BoolMatrix::Constant(k, q, false);
      for (Index r = 0; r < k; ++r) {
        for (Index i = 0; i < p; ++i) pa(i, r) = cover[usize(r)].rows >> i & 1;
        for (Index j = 0; j < q; ++j) pb(r, j) = cover[usize(r)].cols >> j & 1;
      }
      auto res = decide_pattern(m, pa, pb);
      switch (res.outcome) {
        case Outcome::Solved:
          if (verify_factorization(m, *res.factorization)) {
            solutions[idx] = std::move(res.factorization);
            verdict[idx] = kSolved;
            std::size_t cur = best.load();
            while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
            }
          } else {
            verdict[idx] = kUndecided;
          }
          break;
        case Outcome::RatioRefuted: verdict[idx] = kRatio; break;
        case Outcome::LpRefuted: verdict[idx] = kLp; break;
        case Outcome::Undecided: verdict[idx] = kUndecided; break;
      }
    }
  };

  const int nthreads = std::max(1, threads);
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  result.stats.nodes = work.load();

  for (std::size_t idx = 0; idx < covers.size(); ++idx) {
    switch (verdict[idx]) {
      case kSolved:
        if (idx == best.load()) {
          result.status = SearchStatus::Found;
          result.factorization = std::move(solutions[idx]);
          return result;
        }
        break;
      case kRank: ++result.stats.rank_refuted; break;
      case kRatio: ++result.stats.ratio_refuted; break;
      case kLp: ++result.stats.lp_refuted; break;
      case kUndecided: ++result.stats.undecided; break;
      default: break;
    }
  }
  if (best.load() < covers.size()) {
    result.status = SearchStatus::Found;
    result.factorization = std::move(solutions[best.load()]);
    return result;
  }
  result.status = (result.stats.undecided > 0 || exhausted.load()) ? SearchStatus::BudgetExceeded : SearchStatus::None;
  return result;
}

namespace {

// Exact columns a_r in the column space of m, zero where the numeric column w_r is below cut and
// close to w_r elsewhere. Nothing when some column comes out negative.
std::optional<RatMatrix> column_space_side(const RatMatrix& m, const Eigen::MatrixXd& w, double cut, int bits) {
  const auto piv = rref(m).pivots;
  RatMatrix c(m.rows(), static_cast<Index>(piv.size()));
  for (std::size_t t = 0; t < piv.size(); ++t) c.col(static_cast<Index>(t)) = m.col(piv[t]);
  RatMatrix a(m.rows(), w.cols());
  for (Index r = 0; r < w.cols(); ++r) {
    std::vector<Index> zero_rows;
    for (Index i = 0; i < m.rows(); ++i)
      if (w(i, r) <= cut) zero_rows.push_back(i);
    RatMatrix cz(static_cast<Index>(zero_rows.size()), c.cols());
    for (std::size_t t = 0; t < zero_rows.size(); ++t) cz.row(static_cast<Index>(t)) = c.row(zero_rows[t]);
    const RatMatrix g = zero_rows.empty() ? c : RatMatrix(c * nullspace(cz));
    if (g.cols() == 0) {
      a.col(r).setZero();
      continue;
    }
    Eigen::MatrixXd gd(g.rows(), g.cols());
    for (Index i = 0; i < g.rows(); ++i)
      for (Index j = 0; j < g.cols(); ++j) gd(i, j) = to_double(g(i, j));
    const Eigen::VectorXd t = gd.colPivHouseholderQr().solve(w.col(r));
    RatVector tr(t.size());
    for (Index j = 0; j < t.size(); ++j) tr(j) = rationalize(t(j), bits);
    a.col(r) = g * tr;
    if ((a.col(r).array() < 0).any()) return std::nullopt;
  }
  return a;
}

}  // namespace

std::optional<ConeFactorization> promote_orthant(const RatMatrix& m, const NumericFactorization& f, int bits) {
  if (f.cone.kind != ConeKind::Orthant) throw Error(ErrorCode::InvalidInput, "not an orthant factorization");
  const Index k = f.cone.size;
  const Index p = m.rows();
  const Index q = m.cols();
  if (static_cast<Index>(f.a_list.size()) != p || static_cast<Index>(f.b_list.size()) != q)
    throw Error(ErrorCode::ShapeMismatch, "numeric factorization does not match the matrix");
  const Rational floor_value(1, Integer(1) << bits);
  auto snap = [&](double x) {
    Rational r = rationalize(std::max(0.0, x), bits);
    return r <= floor_value ? Rational(0) : r;
  };
  RatMatrix a(p, k), bt(q, k);
  for (Index i = 0; i < p; ++i)
    for (Index r = 0; r < k; ++r) a(i, r) = snap(f.a_list[static_cast<std::size_t>(i)](r, 0));
  for (Index j = 0; j < q; ++j)
    for (Index r = 0; r < k; ++r) bt(j, r) = snap(f.b_list[static_cast<std::size_t>(j)](r, 0));

  const BoolMatrix all_b = BoolMatrix::Constant(k, q, true);
  const BoolMatrix all_a = BoolMatrix::Constant(k, p, true);
  if (auto b = solve_other_side(m, a, all_b)) {
    auto out = orthant_factorization(a, *b);
    if (verify_factorization(m, out)) return out;
  }
  const RatMatrix mt = m.transpose();
  if (auto at = solve_other_side(mt, bt, all_a)) {
    auto out = orthant_factorization(RatMatrix(at->transpose()), RatMatrix(bt.transpose()));
    if (verify_factorization(m, out)) return out;
  }
  double scale = 0;
  for (Index i = 0; i < p; ++i) scale = std::max(scale, f.a_list[static_cast<std::size_t>(i)].maxCoeff());
  for (Index j = 0; j < q; ++j) scale = std::max(scale, f.b_list[static_cast<std::size_t>(j)].maxCoeff());
  const double cut = 1e-6 * std::max(scale, 1.0);
  // Rebuild one side exactly inside the column (row) space of m with the numeric zero pattern.
  Eigen::MatrixXd wa(p, k), wb(q, k);
  for (Index i = 0; i < p; ++i) wa.row(i) = f.a_list[static_cast<std::size_t>(i)].col(0).transpose();
  for (Index j = 0; j < q; ++j) wb.row(j) = f.b_list[static_cast<std::size_t>(j)].col(0).transpose();
  if (auto ea = column_space_side(m, wa, cut, bits)) {
    if (auto b = solve_other_side(m, *ea, all_b)) {
      auto out = orthant_factorization(*ea, *b);
      if (verify_factorization(m, out)) return out;
    }
  }
  if (auto eb = column_space_side(mt, wb, cut, bits)) {
    if (auto at = solve_other_side(mt, *eb, all_a)) {
      auto out = orthant_factorization(RatMatrix(at->transpose()), RatMatrix(eb->transpose()));
      if (verify_factorization(m, out)) return out;
    }
  }
  // Fall back to the support pattern of the numeric factors.
  BooleanFactorization pattern{BoolMatrix(p, k), BoolMatrix(k, q)};
  for (Index i = 0; i < p; ++i)
    for (Index r = 0; r < k; ++r) pattern.a(i, r) = f.a_list[static_cast<std::size_t>(i)](r, 0) > cut;
  for (Index j = 0; j < q; ++j)
    for (Index r = 0; r < k; ++r) pattern.b(r, j) = f.b_list[static_cast<std::size_t>(j)](r, 0) > cut;
  return solve_orthant_pattern(m, pattern);
}

}  // namespace conelift
