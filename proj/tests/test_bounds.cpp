#include <conelift/bounds.hpp>
#include <conelift/error.hpp>
#include <conelift/linalg.hpp>

#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace conelift;
using namespace fixture;

namespace {

BoolMatrix bool_matrix(std::initializer_list<std::initializer_list<int>> rows) {
  BoolMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& r : rows) {
    Index j = 0;
    for (int x : r) m(i, j++) = x != 0;
    ++i;
  }
  return m;
}

BoolMatrix off_diagonal(Index n) {
  BoolMatrix m = BoolMatrix::Constant(n, n, true);
  for (Index i = 0; i < n; ++i) m(i, i) = false;
  return m;
}

Polytope unit_square() { return from_vertices(points({{0, 0}, {1, 0}, {1, 1}, {0, 1}})); }

Polytope triangle() { return from_vertices(points({{0, 0}, {1, 0}, {0, 1}})); }

Polytope stab_c5() {
  std::vector<RatVector> pts;
  for (int m = 0; m < 32; ++m) {
    bool stable = true;
    for (int i = 0; i < 5; ++i)
      if ((m >> i & 1) && (m >> ((i + 1) % 5) & 1)) stable = false;
    if (!stable) continue;
    RatVector v(5);
    for (int i = 0; i < 5; ++i) v(i) = m >> i & 1;
    pts.push_back(v);
  }
  return from_vertices(pts);
}

// Rows and columns of S forming [[+, 0], [*, D]] with D positive diagonal and zero off its diagonal.
bool brute_simple_vertex_block(const RatMatrix& s, int n) {
  const Index p = s.rows();
  const Index q = s.cols();
  for (Index v = 0; v < p; ++v) {
    std::vector<Index> zeros;
    bool miss = false;
    for (Index j = 0; j < q; ++j) {
      if (s(v, j) == 0)
        zeros.push_back(j);
      else
        miss = true;
    }
    if (!miss || static_cast<int>(zeros.size()) < n) continue;
    // Choose n zero columns, then a distinct row for each.
    std::vector<Index> cols;
    std::function<bool(std::size_t)> pick_cols = [&](std::size_t from) -> bool {
      if (static_cast<int>(cols.size()) == n) {
        std::vector<Index> rows;
        std::function<bool()> pick_rows = [&]() -> bool {
          const std::size_t i = rows.size();
          if (static_cast<int>(i) == n) return true;
          for (Index w = 0; w < p; ++w) {
            if (w == v || std::find(rows.begin(), rows.end(), w) != rows.end()) continue;
            bool ok = s(w, cols[i]) > 0;
            for (std::size_t t = 0; t < cols.size() && ok; ++t)
              if (t != i && s(w, cols[t]) != 0) ok = false;
            if (!ok) continue;
            rows.push_back(w);
            if (pick_rows()) return true;
            rows.pop_back();
          }
          return false;
        };
        return pick_rows();
      }
      for (std::size_t t = from; t < zeros.size(); ++t) {
        cols.push_back(zeros[t]);
        if (pick_cols(t + 1)) return true;
        cols.pop_back();
      }
      return false;
    };
    if (pick_cols(0)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("boolean rank examples") {
  const auto i3 = boolean_rank(BoolMatrix::Identity(3, 3));
  CHECK(i3.exact);
  CHECK(i3.upper == 3);

  const auto m4 = boolean_rank(off_diagonal(4));
  CHECK(m4.exact);
  CHECK(m4.upper == 4);
  CHECK(oracle::brute_boolean_rank(off_diagonal(4)) == 4);
  CHECK(verify_boolean(off_diagonal(4), m4.cover));

  const BoolMatrix sh = support(hexagon_slack());
  const auto h = boolean_rank(sh);
  CHECK(h.exact);
  CHECK(h.upper == oracle::brute_boolean_rank(sh));
  CHECK(verify_boolean(sh, h.cover));
  CHECK(h.upper == 5);

  const auto zero = boolean_rank(BoolMatrix::Zero(2, 3));
  CHECK(zero.exact);
  CHECK(zero.upper == 0);
  CHECK(zero.cover.size() == 0);

  const auto empty = boolean_rank(BoolMatrix(1, 0));
  CHECK(empty.exact);
  CHECK(empty.upper == 0);

  CHECK(boolean_rank(bool_matrix({{1, 1}, {1, 1}})).upper == 1);
  CHECK(boolean_rank(bool_matrix({{1, 1, 0}, {0, 1, 1}})).upper == 2);
}

TEST_CASE("boolean rank matches the brute-force cover oracle") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const Index p = 1 + static_cast<Index>(rng() % 6);
    const Index q = 1 + static_cast<Index>(rng() % 6);
    const double density = 0.3 + 0.5 * static_cast<double>(rng() % 100) / 100;
    BoolMatrix s(p, q);
    for (Index i = 0; i < p; ++i)
      for (Index j = 0; j < q; ++j) s(i, j) = static_cast<double>(rng() % 1000) / 1000 < density;
    const auto r = boolean_rank(s);
    CAPTURE(trial);
    REQUIRE(r.exact);
    CHECK(verify_boolean(s, r.cover));
    CHECK(r.cover.size() == r.upper);
    CHECK(r.upper == oracle::brute_boolean_rank(s));
  }
}

TEST_CASE("boolean rank under a small budget is an honest interval") {
  const BoolMatrix s = off_diagonal(7);
  const auto r = boolean_rank(s, 50);
  CHECK(r.lower <= r.upper);
  CHECK(verify_boolean(s, r.cover));
  CHECK(r.cover.size() == r.upper);
  CHECK(r.upper >= sperner_bound(7));
  const auto full = boolean_rank(s);
  CHECK(full.exact);
  CHECK(full.upper == sperner_bound(7));
  CHECK(r.lower <= full.upper);
  CHECK(full.upper <= r.upper);
}

TEST_CASE("sperner bound") {
  CHECK(sperner_bound(12) == 6);
  CHECK(sperner_bound(4) == 4);
  CHECK(sperner_bound(1) == 0);
  CHECK(sperner_bound(2) == 2);
  CHECK(sperner_bound(3) == 3);
  CHECK_THROWS_AS(sperner_bound(0), Error);
  auto central = [](Index k) {
    Index c = 1;
    for (Index t = 1; t <= k / 2; ++t) c = c * (k - k / 2 + t) / t;
    return c;
  };
  for (Index p = 1; p <= 2000; ++p) {
    const Index k = sperner_bound(p);
    CHECK(p <= central(k));
    if (k > 0) CHECK(p > central(k - 1));
  }
  CHECK(sperner_bound(max_antichain(face_lattice(cube(3)))) == 6);
  CHECK(sperner_bound(max_antichain(face_lattice(unit_square()))) == 4);
}

TEST_CASE("log bound on the number of faces") {
  const auto sq = goemans_bound(10);
  CHECK(sq.integer_bound == 4);
  CHECK(sq.decimal.rfind("3.32", 0) == 0);
  const auto c = goemans_bound(28);
  CHECK(c.decimal == "4.807355");
  CHECK(c.integer_bound == 5);
  const auto one = goemans_bound(1);
  CHECK(one.integer_bound == 0);
  CHECK(one.decimal == "0.000000");
  CHECK(goemans_bound(64).integer_bound == 6);
  CHECK(goemans_bound(65).integer_bound == 7);
  CHECK_THROWS_AS(goemans_bound(0), Error);
  CHECK(face_lattice(unit_square()).size() == 10);
  CHECK(face_lattice(cube(3)).size() == 28);
}

TEST_CASE("psd lower bound from the rank") {
  CHECK(psd_lower_from_rank(3) == 2);
  CHECK(psd_lower_from_rank(1) == 1);
  CHECK(psd_lower_from_rank(10) == 4);
  CHECK(psd_lower_from_rank(0) == 0);
  for (Index r = 0; r <= 500; ++r) {
    const Index t = psd_lower_from_rank(r);
    CHECK(t * (t + 1) / 2 >= r);
    if (t > 0) CHECK((t - 1) * t / 2 < r);
    CHECK(t == static_cast<Index>(std::ceil((std::sqrt(1.0 + 8.0 * static_cast<double>(r)) - 1) / 2 - 1e-9)));
  }
}

TEST_CASE("lattice embeddings and Boolean factorizations") {
  SUBCASE("hexagon factorization gives an embedding into 2^[5]") {
    const Polytope hex = rational_hexagon();
    const BoolMatrix inc = incidence(hex);
    CHECK(((!inc.array()).matrix()) == support(hexagon_slack()));
    const BooleanFactorization f{support(hexagon_a()), support(hexagon_b())};
    REQUIRE(verify_boolean(support(hexagon_slack()), f));
    const LatticeEmbedding e = lattice_embedding_from_boolean(f, inc);
    CHECK(e.lattice.size() == 14);
    CHECK(e.dim == 5);
    CHECK(verify_embedding(e));
    const BooleanFactorization back = boolean_from_lattice_embedding(e, inc);
    CHECK(back.size() == 5);
    CHECK(verify_boolean(support(hexagon_slack()), back));
  }
  SUBCASE("square embedding into 2^[4] gives a factorization of the support") {
    const Polytope sq = unit_square();
    const LatticeEmbedding e = facet_embedding(sq);
    CHECK(e.dim == 4);
    CHECK(verify_embedding(e));
    const BoolMatrix inc = incidence(sq);
    const BooleanFactorization f = boolean_from_lattice_embedding(e, inc);
    CHECK(f.size() == 4);
    CHECK(verify_boolean((!inc.array()).matrix(), f));
    CHECK(verify_embedding(lattice_embedding_from_boolean(f, inc)));
  }
  SUBCASE("a point") {
    const Polytope pt = point();
    CHECK(pt.facets.empty());
    const BoolMatrix inc = incidence(pt);
    LatticeEmbedding e;
    e.lattice = face_lattice(inc);
    e.dim = 0;
    e.assignment.assign(e.lattice.size(), Bitset(0));
    CHECK(e.lattice.size() == 2);
    CHECK_FALSE(verify_embedding(e));
    CHECK(boolean_rank(support(slack_matrix(pt, false).matrix)).upper == 0);
    e.dim = 1;
    e.assignment = {Bitset(1), Bitset(1, 1)};
    CHECK(verify_embedding(e));
  }
  SUBCASE("invalid inputs") {
    const Polytope sq = unit_square();
    const BoolMatrix inc = incidence(sq);
    BooleanFactorization bad{BoolMatrix::Identity(4, 4), BoolMatrix::Identity(4, 4)};
    CHECK_THROWS_AS(lattice_embedding_from_boolean(bad, inc), Error);
    LatticeEmbedding e = facet_embedding(sq);
    std::swap(e.assignment.front(), e.assignment.back());
    CHECK_FALSE(verify_embedding(e));
    CHECK_THROWS_AS(boolean_from_lattice_embedding(e, inc), Error);
  }
}

TEST_CASE("lattice embeddings round trip on small polytopes") {
  std::mt19937_64 rng(7);
  std::vector<Polytope> polys = {rational_hexagon(), segment(), cube(2),
                                 triangle(),
                                 from_vertices(points({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}))};
  for (int t = 0; t < 12; ++t) {
    std::vector<RatVector> pts;
    for (int i = 0; i < 7; ++i) pts.push_back(make_vector({static_cast<int>(rng() % 9), static_cast<int>(rng() % 9)}));
    polys.push_back(from_vertices(pts));
  }
  for (const auto& p : polys) {
    const BoolMatrix inc = incidence(p);
    const BoolMatrix s = (!inc.array()).matrix();
    if (face_lattice(inc).size() > 20) continue;
    const auto br = boolean_rank(s);
    REQUIRE(br.exact);
    const LatticeEmbedding e = lattice_embedding_from_boolean(br.cover, inc);
    CHECK(e.dim == br.upper);
    CHECK(verify_embedding(e));
    const BooleanFactorization f = boolean_from_lattice_embedding(e, inc);
    CHECK(f.size() == br.upper);
    CHECK(verify_boolean(s, f));
    const BooleanFactorization g = boolean_from_lattice_embedding(facet_embedding(p), inc);
    CHECK(verify_boolean(s, g));
    CHECK(lattice_embedding_from_boolean(g, inc).dim == g.size());
    // An embedding of L into 2^[k] needs k >= log2 |L| and k >= the Sperner bound of its widest antichain.
    CHECK(br.upper >= goemans_bound(static_cast<Index>(e.lattice.size())).integer_bound);
    CHECK(br.upper >= sperner_bound(max_antichain(e.lattice)));
  }
}

TEST_CASE("simple vertex psd bound") {
  CHECK(psd_simple_vertex_bound(stab_c5()) == 6);
  CHECK(psd_simple_vertex_bound(rational_hexagon()) == 3);
  CHECK(psd_simple_vertex_bound(segment()) == 2);
  CHECK_FALSE(psd_simple_vertex_bound(point()).has_value());
  CHECK(psd_simple_vertex_bound(cube(3)) == 4);
  CHECK(psd_simple_vertex_bound(triangle()) == 3);

  std::mt19937_64 rng(11);
  for (int t = 0; t < 15; ++t) {
    std::vector<RatVector> pts;
    const int dim = 2 + t % 2;
    for (int i = 0; i < 6; ++i) {
      RatVector v(dim);
      for (int c = 0; c < dim; ++c) v(c) = static_cast<int>(rng() % 7);
      pts.push_back(v);
    }
    const Polytope p = from_vertices(pts);
    const auto b = psd_simple_vertex_bound(p);
    const RatMatrix s = slack_matrix(p, false).matrix;
    const int n = static_cast<int>(p.affine_dim());
    CAPTURE(t);
    CHECK(b.has_value() == brute_simple_vertex_block(s, n));
    if (b) CHECK(*b == n + 1);
  }
}

TEST_CASE("signed square roots") {
  const auto r = signed_square_root(squared_distance(10));
  REQUIRE(r.has_value());
  CHECK(rank(*r) == 2);
  CHECK(entrywise_square(*r) == squared_distance(10));
  CHECK_FALSE(signed_square_root(hexagon_slack()).has_value());
  const RatMatrix quarter = make_matrix({{Rational(1, 4), Rational(9, 16)}});
  CHECK(signed_square_root(quarter).has_value());

  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const RatMatrix n = oracle::random_matrix(rng, 5, 2, 3, 1) * oracle::random_matrix(rng, 2, 6, 3, 2);
    const RatMatrix m = entrywise_square(n);
    const auto root = signed_square_root(m);
    REQUIRE(root.has_value());
    CHECK(entrywise_square(*root) == m);
    CHECK(verify_factorization(m, squared_factorization(*root)));
  }
}

TEST_CASE("rank reports") {
  SUBCASE("hexagon nonnegative rank is five") {
    const RankReport r = rank_report(hexagon_slack(), RankTarget::NonnegativeRank);
    REQUIRE(r.exact.has_value());
    CHECK(*r.exact == 5);
    CHECK(r.lower.rule == "boolean_rank");
    CHECK(r.upper.value == 5);
    REQUIRE(r.witness.has_value());
    CHECK(verify_factorization(hexagon_slack(), *r.witness));
    CHECK(r.witness->cone.size == 5);
  }
  SUBCASE("squared distance matrix has psd rank two") {
    const RankReport r = rank_report(squared_distance(10), RankTarget::PsdRank);
    REQUIRE(r.exact.has_value());
    CHECK(*r.exact == 2);
    CHECK(r.upper.rule == "square_root");
    CHECK(verify_factorization(squared_distance(10), *r.witness));
  }
  SUBCASE("hexagon psd rank is an interval") {
    const RankReport r = rank_report(rational_hexagon(), RankTarget::PsdRank);
    CHECK(r.lower.value == 3);
    CHECK(r.lower.rule == "simple_vertex");
    CHECK(r.upper.value <= 5);
    CHECK(r.lower.value <= r.upper.value);
  }
  SUBCASE("32-gon lower bound") {
    RankReportOptions opts;
    opts.search = false;
    opts.heuristics = false;
    opts.budget = 20'000;
    const RankReport r = rank_report(rational_cyclic_polygon(32), RankTarget::NonnegativeRank, opts);
    CHECK(r.lower.value >= 5);
    CHECK(r.lower.value <= r.upper.value);
    CHECK(goemans_bound(66).integer_bound >= 5);
  }
  SUBCASE("boolean target") {
    const RankReport r = rank_report(hexagon_slack(), RankTarget::BooleanRank);
    CHECK(r.exact == 5);
    CHECK(verify_boolean(support(hexagon_slack()), *r.boolean_witness));
  }
  SUBCASE("zero matrix and point") {
    CHECK(rank_report(RatMatrix(RatMatrix::Zero(2, 2)), RankTarget::NonnegativeRank).exact == 0);
    CHECK(rank_report(RatMatrix(RatMatrix::Zero(2, 2)), RankTarget::PsdRank).exact == 0);
    CHECK(rank_report(point(), RankTarget::NonnegativeRank).exact == 0);
  }
  SUBCASE("negative entry") {
    const RatMatrix neg = make_matrix({{1, -1}});
    CHECK_THROWS_AS(rank_report(neg, RankTarget::NonnegativeRank), Error);
  }
}

TEST_CASE("rank report invariants on seeded matrices") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 12; ++t) {
    const Index p = 2 + static_cast<Index>(rng() % 4);
    const Index q = 2 + static_cast<Index>(rng() % 4);
    const Index k = 1 + static_cast<Index>(rng() % 3);
    RatMatrix a(p, k), b(k, q);
    for (Index i = 0; i < a.size(); ++i) a.data()[i] = static_cast<int>(rng() % 3);
    for (Index i = 0; i < b.size(); ++i) b.data()[i] = static_cast<int>(rng() % 3);
    const RatMatrix m = a * b;
    CAPTURE(t);
    for (auto target : {RankTarget::NonnegativeRank, RankTarget::PsdRank, RankTarget::BooleanRank}) {
      const RankReport r = rank_report(m, target);
      CHECK(r.lower.value <= r.upper.value);
      CHECK_FALSE(r.lower.rule.empty());
      CHECK_FALSE(r.upper.rule.empty());
      if (r.exact) CHECK(*r.exact == r.upper.value);
      if (target == RankTarget::BooleanRank) {
        CHECK(verify_boolean(support(m), *r.boolean_witness));
        continue;
      }
      REQUIRE(r.witness.has_value());
      CHECK(verify_factorization(m, *r.witness));
      CHECK(r.witness->cone.size == r.upper.value);
      if (target == RankTarget::NonnegativeRank) {
        // The planted factorization has size k.
        CHECK(r.upper.value <= k);
        CHECK(rank(m) <= r.upper.value);
        CHECK(boolean_rank(support(m)).upper <= r.upper.value);
      } else {
        CHECK(psd_lower_from_rank(rank(m)) <= r.upper.value);
      }
    }
  }
}

TEST_CASE("lattice bounds stay below decided nonnegative ranks") {
  const std::vector<Polytope> polys = {rational_hexagon(), cube(2), cube(3), segment(),
                                       triangle()};
  for (const auto& p : polys) {
    const RankReport r = rank_report(p, RankTarget::NonnegativeRank);
    REQUIRE(r.exact.has_value());
    const FaceLattice l = face_lattice(p);
    CHECK(sperner_bound(max_antichain(l)) <= *r.exact);
    CHECK(goemans_bound(static_cast<Index>(l.size())).integer_bound <= *r.exact);
    CHECK(rank(slack_matrix(p, p.origin_interior).matrix) <= *r.exact);
  }
}
