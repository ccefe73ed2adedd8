#include <conelift/combin.hpp>
#include <conelift/error.hpp>

#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"

using namespace conelift;
using namespace fixture;

namespace {

Graph random_graph(std::mt19937_64& rng, Index n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<Index, Index>> e;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return make_graph(n, e);
}

Index brute_stable_count(const Graph& g) {
  Index count = 0;
  for (std::uint32_t m = 0; m < (1u << g.n); ++m) {
    bool stable = true;
    for (auto [i, j] : g.edges) stable = stable && !((m >> i & 1) && (m >> j & 1));
    count += stable ? 1 : 0;
  }
  return count;
}

// Facets as primitive (a, b) vectors, for comparison up to order.
std::set<std::vector<Rational>> facet_set(const std::vector<Halfspace>& facets) {
  std::set<std::vector<Rational>> out;
  for (const auto& h : facets) {
    RatVector ab(h.a.size() + 1);
    ab << h.a, h.b;
    ab = primitive(ab);
    out.insert(std::vector<Rational>(ab.data(), ab.data() + ab.size()));
  }
  return out;
}

RatVector unit(Index n, Index i) {
  RatVector e = RatVector::Zero(n);
  e(i) = 1;
  return e;
}

// Least degree of a permutation whose order is divisible by n, over all partitions of k.
Index brute_permutation_degree(Index n) {
  for (Index k = 1;; ++k) {
    bool found = false;
    std::function<void(Index, Index, Index)> parts = [&](Index left, Index max_part, Index l) {
      if (found) return;
      if (left == 0) {
        found = l % n == 0;
        return;
      }
      for (Index p = std::min(left, max_part); p >= 1; --p) parts(left - p, p, std::lcm(l, p));
    };
    parts(k, k, 1);
    if (found) return k;
  }
}

Index brute_factorial_index(Index n) {
  Integer f = 1;
  for (Index k = 1;; ++k) {
    f *= k;
    if (f % (2 * n) == 0) return k;
  }
}

}  // namespace

TEST_CASE("graphs") {
  const Graph c5 = cycle_graph(5);
  CHECK(c5.edges.size() == 5);
  CHECK(c5.adjacent(4, 0));
  CHECK(c5.adjacent(0, 4));
  CHECK_FALSE(c5.adjacent(0, 2));
  CHECK(complete_graph(4).edges.size() == 6);
  CHECK(path_graph(3).edges.size() == 2);
  CHECK_THROWS_AS_CODE(make_graph(3, {{0, 0}}), ErrorCode::InvalidInput);
  CHECK_THROWS_AS_CODE(make_graph(3, {{0, 1}, {1, 0}}), ErrorCode::InvalidInput);
  CHECK_THROWS_AS_CODE(make_graph(3, {{0, 3}}), ErrorCode::InvalidInput);
}

TEST_CASE("stable sets") {
  const auto c5 = stable_sets(cycle_graph(5));
  CHECK(c5.sets.size() == 11);
  CHECK(c5.sets.front().empty());
  for (std::size_t i = 1; i <= 5; ++i) CHECK(c5.sets[i].size() == 1);
  for (std::size_t i = 6; i < 11; ++i) CHECK(c5.sets[i].size() == 2);
  CHECK(stable_sets(complete_graph(3)).sets.size() == 4);
  CHECK(stable_sets(empty_graph(3)).sets.size() == 8);
  CHECK_THROWS_AS_CODE(stable_sets(empty_graph(26)), ErrorCode::TooLarge);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Index n = 1 + trial % 12;
    const Graph g = random_graph(rng, n, 0.2 + 0.05 * (trial % 10));
    const auto fam = stable_sets(g);
    CHECK(static_cast<Index>(fam.sets.size()) == brute_stable_count(g));
    for (const auto& s : fam.sets)
      for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b) CHECK_FALSE(g.adjacent(s[a], s[b]));
  }
}

TEST_CASE("stable set polytopes") {
  const Polytope c5 = stab_polytope(cycle_graph(5));
  CHECK(c5.vertices.size() == 11);
  CHECK(c5.facets.size() == 11);
  std::vector<Halfspace> expected;
  for (Index i = 0; i < 5; ++i) expected.push_back({-unit(5, i), 0});
  for (Index i = 0; i < 5; ++i) expected.push_back({unit(5, i) + unit(5, (i + 1) % 5), 1});
  expected.push_back({RatVector::Ones(5), 2});
  CHECK(facet_set(c5.facets) == facet_set(expected));
  // Facets come out primitive already.
  for (const auto& h : c5.facets) CHECK(facet_set({h}).begin()->back() == h.b);

  const Polytope k3 = stab_polytope(complete_graph(3));
  const Polytope simplex =
      from_inequalities({{make_vector({-1, 0, 0}), 0}, {make_vector({0, -1, 0}), 0}, {make_vector({0, 0, -1}), 0},
                         {make_vector({1, 1, 1}), 1}});
  CHECK(facet_set(k3.facets) == facet_set(simplex.facets));
  CHECK(k3.vertices.size() == simplex.vertices.size());

  const Polytope edge = stab_polytope(path_graph(2));
  CHECK(facet_set(edge.facets) ==
        facet_set({{make_vector({-1, 0}), 0}, {make_vector({0, -1}), 0}, {make_vector({1, 1}), 1}}));
  CHECK_THROWS_AS_CODE(stab_polytope(empty_graph(21)), ErrorCode::TooLarge);

  // Zero pattern of the slack matrix against direct substitution of the incidence vectors.
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 8; ++trial) {
    const Graph g = random_graph(rng, 3 + trial % 4, 0.4);
    const Polytope p = stab_polytope(g);
    const RatMatrix s = slack_matrix(p, false).matrix;
    const auto fam = stable_sets(g);
    REQUIRE(p.vertices.size() == fam.sets.size());
    for (std::size_t i = 0; i < fam.sets.size(); ++i) {
      const RatVector x = characteristic_vector(fam.sets[i], g.n);
      CHECK(p.vertices[i] == x);
      for (std::size_t j = 0; j < p.facets.size(); ++j)
        CHECK((s(static_cast<Index>(i), static_cast<Index>(j)) == 0) == (p.facets[j].a.dot(x) == p.facets[j].b));
    }
  }
}

TEST_CASE("theta lift") {
  const AffineLift c5 = theta_lift(cycle_graph(5));
  CHECK(c5.cone.kind == ConeKind::Psd);
  CHECK(c5.cone.size == 6);
  CHECK(c5.e_mat.rows() == 11);
  CHECK(c5.preimages.size() == 11);
  CHECK(theta_lift(empty_graph(4)).e_mat.rows() == 5);
  CHECK_FALSE(c5.notes.empty());

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = random_graph(rng, 2 + trial % 5, 0.4);
    const AffineLift l = theta_lift(g);
    CHECK(l.e_mat.rows() == 1 + g.n + static_cast<Index>(g.edges.size()));
    const auto fam = stable_sets(g);
    for (std::size_t i = 0; i < fam.sets.size(); ++i) {
      RatVector w(g.n + 1);
      w << 1, characteristic_vector(fam.sets[i], g.n);
      const SymmetricMatrix x(RatMatrix(w * w.transpose()));
      CHECK(psd_check_exact(x));
      CHECK(RatVector(l.e_mat * flatten(x)) == l.e_rhs);
      CHECK(l.recover(flatten(x)) == characteristic_vector(fam.sets[i], g.n));
    }
  }

  const Graph p3 = path_graph(3);
  const LiftVerdict v = verify_lift(stab_polytope(p3), theta_lift(p3), 2);
  CHECK(v.status == LiftStatus::PartialWitness);
  CHECK(verify_lift(stab_polytope(cycle_graph(5)), c5).status == LiftStatus::PartialWitness);
  // A matrix with a nonzero edge entry is cut off.
  RatMatrix bad = RatMatrix::Zero(4, 4);
  bad(0, 0) = 1;
  bad(1, 1) = bad(0, 1) = bad(1, 0) = 1;
  bad(2, 2) = bad(0, 2) = bad(2, 0) = 1;
  bad(1, 2) = bad(2, 1) = 1;
  const AffineLift lp3 = theta_lift(p3);
  CHECK(RatVector(lp3.e_mat * flatten(SymmetricMatrix(bad))) != lp3.e_rhs);
}

TEST_CASE("psd lower bound for stable set polytopes") {
  CHECK(psd_stab_lower(cycle_graph(5)) == 6);
  CHECK(psd_stab_lower(complete_graph(3)) == 4);
  CHECK(psd_stab_lower(empty_graph(1)) == 2);
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 6; ++trial) {
    const Graph g = random_graph(rng, 2 + trial % 4, 0.5);
    CHECK(psd_stab_lower(g) == g.n + 1);
  }
  // The submatrix on rows 0, e_i and columns x_i >= 0 plus one facet missing the origin.
  const Polytope c5 = stab_polytope(cycle_graph(5));
  const RatMatrix s = slack_matrix(c5, false).matrix;
  std::vector<Index> nonneg(5, -1);
  Index away = -1;
  for (Index j = 0; j < static_cast<Index>(c5.facets.size()); ++j) {
    const auto& h = c5.facets[static_cast<std::size_t>(j)];
    if (h.b == 0)
      for (Index i = 0; i < 5; ++i)
        if (h.a == -unit(5, i)) nonneg[static_cast<std::size_t>(i)] = j;
    if (h.b != 0 && away < 0) away = j;
  }
  REQUIRE(away >= 0);
  CHECK(s(0, away) != 0);
  for (Index i = 0; i < 5; ++i) {
    REQUIRE(nonneg[static_cast<std::size_t>(i)] >= 0);
    CHECK(s(0, nonneg[static_cast<std::size_t>(i)]) == 0);
    for (Index k = 0; k < 5; ++k) CHECK(s(1 + i, nonneg[static_cast<std::size_t>(k)]) == (i == k ? 1 : 0));
  }
}

TEST_CASE("C5 completely positive factorization") {
  const Polytope p = c5_stab_polytope();
  CHECK(p.vertices.size() == 11);
  CHECK(p.vertices[6] == unit(5, 0) + unit(5, 2));
  const RatMatrix s = slack_matrix(p, false).matrix;
  const ConeFactorization f = c5_burer_factorization();
  CHECK(f.cone.kind == ConeKind::CompletelyPositive);
  CHECK(f.cone.size == 6);
  CHECK(f.rows() == 11);
  CHECK(f.cols() == 11);
  CHECK(verify_factorization(s, f));
  CHECK(product_matrix(f) == s);
  CHECK(inner(f.a_list[0], f.b_list[10]) == 2);
  CHECK(inner(f.a_list[6], f.b_list[10]) == 0);
  for (std::size_t j = 0; j < 10; ++j) CHECK(psd_check_exact(std::get<SymmetricMatrix>(f.b_list[j])));
  for (const auto& b : f.b_list) CHECK(in_dual_cone(b, f.cone));

  const CopositivityCrossCheck odd = copositivity_cross_check(c5_odd_cycle_matrix());
  CHECK(odd.reduced == CopositivityStatus::Copositive);
  CHECK(odd.direct == CopositivityStatus::Copositive);
  CHECK(odd.agree());
  const auto horn = copositive_reduction(SymmetricMatrix(c5_odd_cycle_matrix()));
  REQUIRE(horn);
  CHECK(horn->matrix() == make_matrix({{1, 1, -1, -1, 1},
                                       {1, 1, 1, -1, -1},
                                       {-1, 1, 1, 1, -1},
                                       {-1, -1, 1, 1, 1},
                                       {1, -1, -1, 1, 1}}));
  CHECK_FALSE(psd_check_exact(*horn));

  RatMatrix weak = c5_odd_cycle_matrix();
  weak(0, 0) = 1;
  const auto verdict = copositive_check_exact(SymmetricMatrix(weak));
  CHECK(verdict.status == CopositivityStatus::NotCopositive);
  REQUIRE(verdict.witness);
  CHECK((verdict.witness->array() >= 0).all());
  CHECK(verdict.witness->dot(weak * *verdict.witness) < 0);
  const CopositivityCrossCheck weak_check = copositivity_cross_check(weak);
  CHECK(weak_check.agree());
  CHECK(weak_check.direct == CopositivityStatus::NotCopositive);
  CHECK_THROWS_AS_CODE(copositivity_cross_check(-c5_odd_cycle_matrix()), ErrorCode::InvalidInput);
}

TEST_CASE("symmetric orthant lower bound") {
  CHECK(symmetric_orthant_lower_bound(5) == 5);
  CHECK(symmetric_orthant_lower_bound(7) == 7);
  CHECK(symmetric_orthant_lower_bound(8) == 8);
  CHECK(symmetric_orthant_lower_bound(6) == 5);
  for (Index p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) CHECK(symmetric_orthant_lower_bound(p) == p);
  for (Index n = 3; n <= 40; ++n) {
    CAPTURE(n);
    CHECK(symmetric_orthant_lower_bound(n) == std::max(brute_factorial_index(n), brute_permutation_degree(n)));
  }
  CHECK_THROWS_AS_CODE(symmetric_orthant_lower_bound(2), ErrorCode::InvalidInput);
}
