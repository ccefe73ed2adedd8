#include <conelift/bounds.hpp>
#include <conelift/error.hpp>
#include <conelift/linalg.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>

namespace conelift {

namespace {

std::size_t usize(Index i) { return static_cast<std::size_t>(i); }

struct Rect {
  Bitset rows;
  Bitset cols;
};

class CoverSearch {
 public:
  CoverSearch(const BoolMatrix& s, std::int64_t budget) : s_(s), p_(s.rows()), q_(s.cols()), budget_(budget) {
    for (Index i = 0; i < p_; ++i) {
      Bitset r(usize(q_));
      for (Index j = 0; j < q_; ++j)
        if (s(i, j)) r.set(usize(j));
      row_support_.push_back(r);
    }
    for (Index j = 0; j < q_; ++j) {
      Bitset c(usize(p_));
      for (Index i = 0; i < p_; ++i)
        if (s(i, j)) c.set(usize(i));
      col_support_.push_back(c);
    }
  }

  BooleanRankResult run() {
    BooleanRankResult out;
    std::vector<Bitset> uncovered = row_support_;
    if (count(uncovered) == 0) {
      out.exact = true;
      out.cover = to_factorization({});
      return out;
    }
    const bool all_rects = enumerate_rectangles();
    best_ = greedy_cover();
    if (const auto trivial = trivial_cover(); trivial.size() < best_.size()) best_ = trivial;
    const Index root_lower = lower_bound(uncovered);
    if (all_rects && root_lower < static_cast<Index>(best_.size())) {
      index_cells();
      forbidden_.assign(rects_.size(), false);
      std::vector<int> chosen;
      search(uncovered, chosen);
    }
    const bool complete = all_rects && !aborted_;
    out.exact = complete || root_lower == static_cast<Index>(best_.size());
    out.upper = static_cast<Index>(best_.size());
    out.lower = out.exact ? out.upper : root_lower;
    out.cover = to_factorization(best_);
    out.nodes = nodes_;
    return out;
  }

 private:
  static Index count(const std::vector<Bitset>& rows) {
    Index n = 0;
    for (const auto& r : rows) n += static_cast<Index>(r.count());
    return n;
  }

  // Maximal all-ones rectangles: column sets closed under intersection with row supports.
  bool enumerate_rectangles() {
    std::set<Bitset> closed;
    std::vector<Bitset> queue;
    auto add = [&](const Bitset& c) {
      if (c.none() || !closed.insert(c).second) return;
      queue.push_back(c);
    };
    for (const auto& r : row_support_) add(r);
    while (!queue.empty()) {
      if (++nodes_ > budget_) break;
      const Bitset c = queue.back();
      queue.pop_back();
      for (const auto& r : row_support_) add(c & r);
    }
    const bool done = queue.empty();
    for (const auto& c : closed) {
      Rect r{Bitset(usize(p_)), c};
      for (Index i = 0; i < p_; ++i)
        if (c.is_subset_of(row_support_[usize(i)])) r.rows.set(usize(i));
      rects_.push_back(r);
    }
    if (!done) {
      // Row- and column-generated rectangles still cover every entry, enough for the greedy cover.
      for (const auto& c : row_support_)
        if (c.any()) rects_.push_back(rectangle_from_cols(c));
      for (Index j = 0; j < q_; ++j) {
        Bitset rows(usize(p_));
        for (Index i = 0; i < p_; ++i)
          if (s_(i, j)) rows.set(usize(i));
        if (rows.none()) continue;
        Bitset cols(usize(q_));
        cols.set();
        for (Index i = 0; i < p_; ++i)
          if (rows.test(usize(i))) cols &= row_support_[usize(i)];
        rects_.push_back(rectangle_from_cols(cols));
      }
    }
    return done;
  }

  Rect rectangle_from_cols(const Bitset& c) const {
    Rect r{Bitset(usize(p_)), c};
    for (Index i = 0; i < p_; ++i)
      if (c.is_subset_of(row_support_[usize(i)])) r.rows.set(usize(i));
    return r;
  }

  // One rectangle per nonzero row, or per nonzero column, whichever is fewer.
  std::vector<int> trivial_cover() const {
    std::vector<int> by_row, by_col;
    for (Index i = 0; i < p_; ++i) {
      if (row_support_[usize(i)].none()) continue;
      for (std::size_t t = 0; t < rects_.size(); ++t)
        if (rects_[t].rows.test(usize(i)) && rects_[t].cols == row_support_[usize(i)]) {
          by_row.push_back(static_cast<int>(t));
          break;
        }
    }
    for (Index j = 0; j < q_; ++j) {
      Bitset rows(usize(p_));
      for (Index i = 0; i < p_; ++i)
        if (s_(i, j)) rows.set(usize(i));
      if (rows.none()) continue;
      for (std::size_t t = 0; t < rects_.size(); ++t)
        if (rects_[t].cols.test(usize(j)) && rects_[t].rows == rows) {
          by_col.push_back(static_cast<int>(t));
          break;
        }
    }
    return by_col.size() < by_row.size() ? by_col : by_row;
  }

  Index gain(const Rect& r, const std::vector<Bitset>& uncovered) const {
    Index g = 0;
    for (Index i = 0; i < p_; ++i)
      if (r.rows.test(usize(i))) g += static_cast<Index>((uncovered[usize(i)] & r.cols).count());
    return g;
  }

  void apply(const Rect& r, std::vector<Bitset>& uncovered) const {
    for (Index i = 0; i < p_; ++i)
      if (r.rows.test(usize(i))) uncovered[usize(i)] -= r.cols;
  }

  std::vector<int> greedy_cover() const {
    std::vector<Bitset> uncovered = row_support_;
    std::vector<int> chosen;
    while (count(uncovered) > 0) {
      int best = -1;
      Index best_gain = 0;
      for (std::size_t t = 0; t < rects_.size(); ++t) {
        const Index g = gain(rects_[t], uncovered);
        if (g > best_gain) {
          best_gain = g;
          best = static_cast<int>(t);
        }
      }
      chosen.push_back(best);
      apply(rects_[usize(best)], uncovered);
    }
    return chosen;
  }

  // Greedy set of uncovered entries, no two of which fit in one all-ones rectangle.
  Index fooling_set(const std::vector<Bitset>& uncovered) const {
    std::vector<std::pair<Index, Index>> chosen;
    for (Index i = 0; i < p_; ++i) {
      for (Index j = 0; j < q_; ++j) {
        if (!uncovered[usize(i)].test(usize(j))) continue;
        bool ok = true;
        for (const auto& [k, l] : chosen)
          if (s_(i, l) && s_(k, j)) {
            ok = false;
            break;
          }
        if (ok) chosen.emplace_back(i, j);
      }
    }
    return static_cast<Index>(chosen.size());
  }

  // Rows i, i' with uncovered entries outside each other's support need incomparable sets of the
  // remaining rectangles, so a family of such rows forces the Sperner bound of its size. Same for columns.
  Index antichain_bound(const std::vector<Bitset>& uncovered) const {
    std::vector<Index> rows;
    for (Index i = 0; i < p_; ++i) {
      if (uncovered[usize(i)].none()) continue;
      bool ok = true;
      for (Index k : rows)
        if (uncovered[usize(i)].is_subset_of(row_support_[usize(k)]) ||
            uncovered[usize(k)].is_subset_of(row_support_[usize(i)])) {
          ok = false;
          break;
        }
      if (ok) rows.push_back(i);
    }
    std::vector<Bitset> col_unc(usize(q_), Bitset(usize(p_)));
    for (Index i = 0; i < p_; ++i)
      for (Index j = 0; j < q_; ++j)
        if (uncovered[usize(i)].test(usize(j))) col_unc[usize(j)].set(usize(i));
    std::vector<Index> cols;
    for (Index j = 0; j < q_; ++j) {
      if (col_unc[usize(j)].none()) continue;
      bool ok = true;
      for (Index l : cols)
        if (col_unc[usize(j)].is_subset_of(col_support_[usize(l)]) ||
            col_unc[usize(l)].is_subset_of(col_support_[usize(j)])) {
          ok = false;
          break;
        }
      if (ok) cols.push_back(j);
    }
    const auto n = static_cast<Index>(std::max(rows.size(), cols.size()));
    return n == 0 ? 0 : sperner_bound(n);
  }

  Index lower_bound(const std::vector<Bitset>& uncovered) const {
    return std::max(fooling_set(uncovered), antichain_bound(uncovered));
  }

  void index_cells() {
    cell_rects_.assign(usize(p_ * q_), {});
    for (std::size_t t = 0; t < rects_.size(); ++t)
      for (Index i = 0; i < p_; ++i)
        if (rects_[t].rows.test(usize(i)))
          for (Index j = 0; j < q_; ++j)
            if (rects_[t].cols.test(usize(j))) cell_rects_[usize(i * q_ + j)].push_back(static_cast<int>(t));
  }

  // Branches on the uncovered entry with the fewest usable rectangles. A rectangle tried for that
  // entry is forbidden in the later branches: any cover using it was searched in its own branch.
  void search(std::vector<Bitset>& uncovered, std::vector<int>& chosen) {
    if (aborted_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    Index cell = -1;
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    for (Index i = 0; i < p_ && fewest > 0; ++i)
      for (Index j = 0; j < q_; ++j) {
        if (!uncovered[usize(i)].test(usize(j))) continue;
        std::size_t usable = 0;
        for (int t : cell_rects_[usize(i * q_ + j)]) usable += forbidden_[usize(t)] ? 0 : 1;
        if (usable < fewest) {
          fewest = usable;
          cell = i * q_ + j;
        }
      }
    if (cell < 0) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    if (fewest == 0) return;
    if (static_cast<Index>(chosen.size()) + lower_bound(uncovered) >= static_cast<Index>(best_.size())) return;
    std::vector<std::pair<Index, int>> order;
    for (int t : cell_rects_[usize(cell)])
      if (!forbidden_[usize(t)]) order.emplace_back(-gain(rects_[usize(t)], uncovered), t);
    std::sort(order.begin(), order.end());
    std::vector<int> tried;
    for (const auto& [neg_gain, t] : order) {
      const std::vector<Bitset> saved = uncovered;
      apply(rects_[usize(t)], uncovered);
      chosen.push_back(t);
      search(uncovered, chosen);
      chosen.pop_back();
      uncovered = saved;
      forbidden_[usize(t)] = true;
      tried.push_back(t);
      if (aborted_) break;
    }
    for (int t : tried) forbidden_[usize(t)] = false;
  }

  BooleanFactorization to_factorization(const std::vector<int>& chosen) const {
    const Index k = static_cast<Index>(chosen.size());
    BooleanFactorization f{BoolMatrix::Zero(p_, k), BoolMatrix::Zero(k, q_)};
    for (Index r = 0; r < k; ++r) {
      const Rect& rect = rects_[usize(chosen[usize(r)])];
      for (Index i = 0; i < p_; ++i) f.a(i, r) = rect.rows.test(usize(i));
      for (Index j = 0; j < q_; ++j) f.b(r, j) = rect.cols.test(usize(j));
    }
    return f;
  }

  const BoolMatrix& s_;
  Index p_, q_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<Bitset> row_support_;
  std::vector<Bitset> col_support_;
  std::vector<Rect> rects_;
  std::vector<std::vector<int>> cell_rects_;
  std::vector<bool> forbidden_;
  std::vector<int> best_;
};

std::vector<Bitset> facet_sets(const BoolMatrix& inc) {
  std::vector<Bitset> out;
  for (Index j = 0; j < inc.cols(); ++j) {
    Bitset f(usize(inc.rows()));
    for (Index i = 0; i < inc.rows(); ++i)
      if (inc(i, j)) f.set(usize(i));
    out.push_back(f);
  }
  return out;
}

Bitset singleton(Index n, Index i) {
  Bitset b(usize(n));
  b.set(usize(i));
  return b;
}

bool perfect_square(const Integer& n, Integer& root) {
  if (n < 0) return false;
  root = boost::multiprecision::sqrt(n);
  return root * root == n;
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  Integer a, b;
  if (!perfect_square(boost::multiprecision::numerator(x), a)) return std::nullopt;
  if (!perfect_square(boost::multiprecision::denominator(x), b)) return std::nullopt;
  return Rational(a, b);
}

// Lower-bound candidates coming from a polytope.
struct PolytopeExtras {
  std::vector<Bound> boolean_lower;  // valid for the Boolean rank of the support, hence for rank_+
  std::optional<Index> simple_vertex;
};

void raise(Bound& b, Index value, std::string_view rule) {
  if (value > b.value) b = {value, std::string(rule)};
}

void settle(RankReport& r) {
  if (r.lower.value == r.upper.value) r.exact = r.lower.value;
}

// Verified orthant factorizations from promoted heuristics, sizes probed by bisection between the
// current bounds. A failed probe proves nothing, so the result is only an upper bound.
void heuristic_upper(const RatMatrix& m, RankReport& r, const RankReportOptions& opts) {
  HeuristicOptions h;
  h.seed = opts.seed;
  Index lo = std::max<Index>(r.lower.value, 1);
  Index hi = r.upper.value;
  while (lo < hi) {
    const Index k = lo + (hi - lo) / 2;
    std::optional<ConeFactorization> exact;
    if (const auto numeric = nmf_heuristic(m, k, h)) exact = promote_orthant(m, *numeric);
    if (exact && verify_factorization(m, *exact)) {
      r.upper = {k, "nmf_promoted"};
      r.witness = std::move(exact);
      hi = k;
    } else {
      lo = k + 1;
    }
  }
}

RankReport report(const RatMatrix& m, RankTarget target, const RankReportOptions& opts, const PolytopeExtras& extras) {
  if ((m.array() < 0).any()) throw Error(ErrorCode::NegativeEntry, "matrix has a negative entry");
  RankReport r;
  r.target = target;
  const Index rk = rank(m);
  const BooleanRankResult br = boolean_rank(support(m), opts.budget);

  if (target == RankTarget::BooleanRank) {
    r.lower = {br.lower, br.exact ? "boolean_rank" : "cover_bound"};
    for (const auto& b : extras.boolean_lower) raise(r.lower, b.value, b.rule);
    r.upper = {br.upper, br.exact ? "boolean_rank" : "greedy_cover"};
    r.boolean_witness = br.cover;
    settle(r);
    return r;
  }

  // Upper bounds shared by both cone ranks.
  r.upper = {std::min(m.rows(), m.cols()), "trivial"};
  r.witness = trivial_orthant_factorization(m);
  if (r.witness->cone.size != r.upper.value) r.upper.value = r.witness->cone.size;

  if (target == RankTarget::NonnegativeRank) {
    r.lower = {rk, "rank"};
    raise(r.lower, br.lower, br.exact ? "boolean_rank" : "cover_bound");
    for (const auto& b : extras.boolean_lower) raise(r.lower, b.value, b.rule);
    if (opts.heuristics) heuristic_upper(m, r, opts);
    if (opts.search) {
      for (Index k = r.lower.value; k < r.upper.value; ++k) {
        auto res = orthant_pattern_search(m, k, opts.budget, opts.threads);
        if (res.status == SearchStatus::Found) {
          r.upper = {k, "pattern_search"};
          r.witness = std::move(res.factorization);
          break;
        }
        if (res.status != SearchStatus::None) break;
        r.lower = {k + 1, "pattern_search"};
      }
    }
    settle(r);
    return r;
  }

  // Psd rank: the square-root factorization first, the nonnegative rank only when still open.
  r.lower = {psd_lower_from_rank(rk), "psd_from_rank"};
  if (extras.simple_vertex) raise(r.lower, *extras.simple_vertex, "simple_vertex");
  r.witness = orthant_as_psd(*r.witness);
  if (auto root = signed_square_root(m)) {
    if (rank(*root) < r.upper.value) {
      auto f = squared_factorization(*root);
      if (verify_factorization(m, f)) {
        r.upper = {f.cone.size, "square_root"};
        r.witness = std::move(f);
      }
    }
  }
  if (r.lower.value < r.upper.value) {
    const RankReport nonneg = report(m, RankTarget::NonnegativeRank, opts, extras);
    if (nonneg.upper.value < r.upper.value) {
      r.upper = {nonneg.upper.value, "nonnegative_" + nonneg.upper.rule};
      r.witness = orthant_as_psd(*nonneg.witness);
    }
  }
  settle(r);
  return r;
}

}  // namespace

BooleanRankResult boolean_rank(const BoolMatrix& s, std::int64_t budget) { return CoverSearch(s, budget).run(); }

Index sperner_bound(Index p) {
  if (p < 1) throw Error(ErrorCode::InvalidInput, "sperner bound needs p >= 1");
  for (Index k = 0;; ++k) {
    unsigned __int128 c = 1;
    for (Index t = 1; t <= k / 2; ++t) c = c * static_cast<unsigned>(k - k / 2 + t) / static_cast<unsigned>(t);
    if (c >= static_cast<unsigned __int128>(p)) return k;
  }
}

LogBound goemans_bound(Index faces) {
  if (faces < 1) throw Error(ErrorCode::InvalidInput, "face count must be positive");
  LogBound out;
  out.faces = faces;
  while ((Index{1} << out.integer_bound) < faces) ++out.integer_bound;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6Lf", std::log2(static_cast<long double>(faces)));
  out.decimal = buf;
  return out;
}

Index psd_lower_from_rank(Index r) {
  if (r < 0) throw Error(ErrorCode::InvalidInput, "rank must be nonnegative");
  Index t = 0;
  while (t * (t + 1) / 2 < r) ++t;
  return t;
}

bool verify_embedding(const LatticeEmbedding& e) {
  const auto& faces = e.lattice.faces;
  if (e.assignment.size() != faces.size()) return false;
  for (const auto& a : e.assignment)
    if (static_cast<Index>(a.size()) != e.dim) return false;
  for (std::size_t x = 0; x < faces.size(); ++x)
    for (std::size_t y = 0; y < faces.size(); ++y)
      if (faces[x].is_subset_of(faces[y]) != e.assignment[x].is_subset_of(e.assignment[y])) return false;
  return true;
}

LatticeEmbedding lattice_embedding_from_boolean(const BooleanFactorization& f, const BoolMatrix& inc) {
  const BoolMatrix s = (!inc.array()).matrix();
  if (f.a.rows() != inc.rows() || f.b.cols() != inc.cols() || !verify_boolean(s, f))
    throw Error(ErrorCode::InvalidInput, "not a Boolean factorization of the slack support");
  LatticeEmbedding e;
  e.lattice = face_lattice(inc);
  e.dim = f.size();
  for (const auto& face : e.lattice.faces) {
    Bitset img(usize(e.dim));
    for (Index v = 0; v < inc.rows(); ++v)
      if (face.test(usize(v)))
        for (Index r = 0; r < e.dim; ++r)
          if (f.a(v, r)) img.set(usize(r));
    e.assignment.push_back(img);
  }
  if (!verify_embedding(e)) throw Error(ErrorCode::InvalidInput, "construction did not give an order embedding");
  return e;
}

BooleanFactorization boolean_from_lattice_embedding(const LatticeEmbedding& e, const BoolMatrix& inc) {
  if (!verify_embedding(e)) throw Error(ErrorCode::InvalidInput, "not an order embedding");
  const Index nv = inc.rows();
  if (e.lattice.num_vertices != nv) throw Error(ErrorCode::InvalidInput, "vertex count differs from the lattice");
  BooleanFactorization f{BoolMatrix::Zero(nv, e.dim), BoolMatrix::Zero(e.dim, inc.cols())};
  for (Index v = 0; v < nv; ++v) {
    const Index at = e.lattice.find(singleton(nv, v));
    if (at < 0) throw Error(ErrorCode::InvalidInput, "vertex missing from the lattice");
    for (Index r = 0; r < e.dim; ++r) f.a(v, r) = e.assignment[usize(at)].test(usize(r));
  }
  const auto facets = facet_sets(inc);
  for (Index j = 0; j < inc.cols(); ++j) {
    const Index at = e.lattice.find(facets[usize(j)]);
    if (at < 0) throw Error(ErrorCode::InvalidInput, "facet missing from the lattice");
    for (Index r = 0; r < e.dim; ++r) f.b(r, j) = !e.assignment[usize(at)].test(usize(r));
  }
  if (!verify_boolean((!inc.array()).matrix(), f))
    throw Error(ErrorCode::InvalidInput, "embedding does not factor the slack support");
  return f;
}

std::optional<Index> psd_simple_vertex_bound(const Polytope& p) {
  const BoolMatrix inc = incidence(p);
  const Index n = p.affine_dim();
  const Index nv = inc.rows();
  const Index nf = inc.cols();
  for (Index v = 0; v < nv; ++v) {
    std::vector<Index> on;
    for (Index j = 0; j < nf; ++j)
      if (inc(v, j)) on.push_back(j);
    if (static_cast<Index>(on.size()) != n || static_cast<Index>(on.size()) == nf) continue;
    bool ok = true;
    for (Index f : on) {
      bool found = false;
      for (Index w = 0; w < nv && !found; ++w) {
        if (w == v || inc(w, f)) continue;
        found = std::all_of(on.begin(), on.end(), [&](Index g) { return g == f || inc(w, g); });
      }
      if (!found) {
        ok = false;
        break;
      }
    }
    if (ok) return n + 1;
  }
  return std::nullopt;
}

std::optional<RatMatrix> signed_square_root(const RatMatrix& m) {
  RatMatrix a(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      auto r = rational_sqrt(m(i, j));
      if (!r) return std::nullopt;
      a(i, j) = *r;
    }
  constexpr Index kMaxSignBits = 12;
  RatMatrix out(m.rows(), m.cols());
  std::vector<RatVector> basis;
  for (Index i = 0; i < m.rows(); ++i) {
    const RatVector row = a.row(i).transpose();
    std::optional<RatVector> fit;
    if (!basis.empty()) {
      const RatMatrix b = from_rows(basis, m.cols());
      const auto piv = rref(b).pivots;
      std::vector<Index> free_signs;
      for (Index c : piv)
        if (row(c) != 0) free_signs.push_back(c);
      if (static_cast<Index>(free_signs.size()) <= kMaxSignBits) {
        const Index r = static_cast<Index>(piv.size());
        RatMatrix sub(r, r);
        for (Index t = 0; t < r; ++t) sub.col(t) = b.col(piv[usize(t)]);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_signs.size()) && !fit; ++mask) {
          RatVector target(r);
          for (Index t = 0; t < r; ++t) target(t) = row(piv[usize(t)]);
          for (std::size_t s = 0; s < free_signs.size(); ++s)
            if (mask >> s & 1) {
              const auto pos = std::find(piv.begin(), piv.end(), free_signs[s]) - piv.begin();
              target(pos) = -target(pos);
            }
          const auto x = solve_affine(RatMatrix(sub.transpose()), target);
          if (!x) continue;
          const RatVector y = b.transpose() * *x;
          bool match = true;
          for (Index j = 0; j < m.cols() && match; ++j) match = abs(y(j)) == row(j);
          if (match) fit = y;
        }
      }
    }
    if (fit) {
      out.row(i) = fit->transpose();
    } else {
      out.row(i) = row.transpose();
      if (!row.isZero()) basis.push_back(row);
    }
  }
  return out;
}

std::string_view to_string(RankTarget t) {
  switch (t) {
    case RankTarget::NonnegativeRank: return "nonnegative";
    case RankTarget::PsdRank: return "psd";
    case RankTarget::BooleanRank: return "boolean";
  }
  return "?";
}

RankTarget parse_rank_target(std::string_view text) {
  if (text == "nonnegative" || text == "nonneg" || text == "orthant") return RankTarget::NonnegativeRank;
  if (text == "psd") return RankTarget::PsdRank;
  if (text == "boolean") return RankTarget::BooleanRank;
  throw Error(ErrorCode::ParseError, "unknown rank target '" + std::string(text) + "'");
}

RankReport rank_report(const RatMatrix& m, RankTarget target, const RankReportOptions& opts) {
  return report(m, target, opts, {});
}

RankReport rank_report(const Polytope& p, RankTarget target, const RankReportOptions& opts) {
  const RatMatrix s = slack_matrix(p, p.origin_interior).matrix;
  PolytopeExtras extras;
  extras.simple_vertex = psd_simple_vertex_bound(p);
  // A point has no facets; its two faces would not embed into 2^[0].
  if (p.facets.empty()) return report(s, target, opts, extras);
  const FaceLattice lattice = face_lattice(p);
  extras.boolean_lower.push_back({sperner_bound(max_antichain(lattice)), "sperner"});
  extras.boolean_lower.push_back({goemans_bound(static_cast<Index>(lattice.size())).integer_bound, "log_faces"});
  return report(s, target, opts, extras);
}

}  // namespace conelift
