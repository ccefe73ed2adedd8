#include <conelift/bounds.hpp>
#include <conelift/catalog.hpp>
#include <conelift/checks.hpp>
#include <conelift/combin.hpp>
#include <conelift/cones.hpp>
#include <conelift/error.hpp>
#include <conelift/lift.hpp>
#include <conelift/linalg.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

namespace conelift {

namespace {

using namespace catalog;

// Runs one check, turning a library error into a failure with its message.
CheckResult timed(int id, std::string name, const std::function<bool(std::ostringstream&)>& body) {
  CheckResult r;
  r.id = id;
  r.name = std::move(name);
  std::ostringstream detail;
  const auto start = std::chrono::steady_clock::now();
  try {
    r.pass = body(detail);
  } catch (const std::exception& e) {
    r.pass = false;
    detail << "error: " << e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.detail = detail.str();
  return r;
}

bool hexagon_slack_check(std::ostringstream& out) {
  const RatMatrix s = slack_matrix(regular_hexagon(), true).matrix;
  out << "first row";
  for (Index j = 0; j < s.cols(); ++j) out << ' ' << to_string(s(0, j));
  return s == hexagon_slack();
}

bool hexagon_factorization_check(std::ostringstream& out) {
  const ConeFactorization f = orthant_factorization(hexagon_factor_a(), hexagon_factor_b());
  out << "size " << f.cone.size << ", A B = S_H exactly";
  return f.cone.size == 5 && verify_factorization(hexagon_slack(), f);
}

bool hexagon_lift_check(std::ostringstream& out) {
  const Polytope h = regular_hexagon();
  const AffineLift l = build_lift(h, orthant_factorization(hexagon_factor_a(), hexagon_factor_b()));
  // Reference system with its coordinates y1..y5 = our y3, y5, y1, y4, y2.
  const RatMatrix reference = make_matrix({{1, 1, 1, 0, 1}, {0, 0, 1, 1, 1}});
  const std::vector<Index> ours = {2, 4, 0, 3, 1};
  RatMatrix relabeled(2, 5);
  for (Index j = 0; j < 5; ++j) relabeled.col(ours[static_cast<std::size_t>(j)]) = reference.col(j);
  const RatVector rhs = make_vector({2, 1});
  const bool same = same_affine_system(l.e_mat, l.e_rhs, relabeled, rhs);
  const bool direct = same_affine_system(l.e_mat, l.e_rhs, make_matrix({{1, 1, 1, 0, 1}, {1, 1, 0, 1, 0}}), rhs);
  const LiftVerdict v = verify_lift(h, l);
  out << "slice {y1+y2+y3+y5 = 2, y1+y2+y4 = 1}, equal to the reference system after relabeling (y1 y3)(y2 y5): "
      << (same ? "yes" : "no") << "; verify_lift " << to_string(v.status);
  return same && direct && v.status == LiftStatus::Verified;
}

bool irregular_hexagon_check(std::ostringstream& out, int threads) {
  const auto r = orthant_pattern_search(irregular_hexagon_matrix(), 5, kDefaultPatternBudget, threads);
  const auto& s = r.stats;
  out << "status " << to_string(r.status) << ", " << s.covers << " covers: " << s.rank_refuted << " by rank, "
      << s.ratio_refuted << " by ratios, " << s.lp_refuted << " by LP, " << s.undecided << " undecided";
  return r.status == SearchStatus::None && s.undecided == 0 &&
         s.rank_refuted + s.ratio_refuted + s.lp_refuted == s.covers;
}

bool polygon_rank_check(std::ostringstream& out) {
  bool ok = true;
  out << "rank";
  for (Index n = 4; n <= 12; ++n) {
    const Index r = rank(slack_matrix(cyclic_polygon(n), true).matrix);
    out << ' ' << r;
    ok = ok && r == 3;
  }
  out << " for n = 4..12";
  return ok;
}

bool squared_distance_check(std::ostringstream& out) {
  bool ok = true;
  RankReportOptions opts;
  opts.heuristics = false;
  opts.search = false;
  for (Index n = 4; n <= 10; ++n) {
    const RatMatrix m = squared_distance(n);
    const ConeFactorization f = squared_factorization(difference_matrix(n));
    const RankReport rep = rank_report(m, RankTarget::NonnegativeRank, opts);
    const bool good = rank(m) == 3 && f.cone.kind == ConeKind::Psd && f.cone.size == 2 &&
                      verify_factorization(m, f) && rep.lower.value == sperner_bound(n);
    if (!good) out << "n = " << n << " fails (rank " << rank(m) << ", lower " << rep.lower.value << "); ";
    ok = ok && good;
  }
  out << "rank 3, psd factorization of size 2, rank_+ lower bound = sperner_bound(n) for n = 4..10";
  return ok;
}

bool bounds_table_check(std::ostringstream& out) {
  const Polytope sq = cube(2);
  const Polytope c3 = cube(3);
  const FaceLattice lsq = face_lattice(sq);
  const FaceLattice lc3 = face_lattice(c3);
  const LogBound gsq = goemans_bound(static_cast<Index>(lsq.size()));
  const LogBound gc3 = goemans_bound(static_cast<Index>(lc3.size()));
  const Index asq = max_antichain(lsq);
  const Index ac3 = max_antichain(lc3);
  out << "square: log2(" << gsq.faces << ") = " << gsq.decimal << " -> " << gsq.integer_bound << ", antichain " << asq
      << " -> " << sperner_bound(asq) << "; 3-cube: log2(" << gc3.faces << ") = " << gc3.decimal << " -> "
      << gc3.integer_bound << ", antichain " << ac3 << " -> " << sperner_bound(ac3);
  return gsq.decimal.rfind("3.32", 0) == 0 && gsq.integer_bound == 4 && sperner_bound(asq) == 4 &&
         gc3.decimal == "4.807355" && gc3.integer_bound == 5 && ac3 == 12 && sperner_bound(ac3) == 6;
}

bool cross_polytope_check(std::ostringstream& out) {
  const Polytope c3 = cross_polytope(3);
  const AffineLift q = cross_polytope_lift(3);
  const LiftVerdict v = verify_lift(c3, q);
  const ConeFactorization f = factorization_from_orthant_lift(c3, q);
  const bool ok = verify_factorization(slack_matrix(c3, true).matrix, f);
  out << "verify_lift " << to_string(v.status) << "; extracted orthant-" << f.cone.size << " factorization "
      << (ok ? "verifies" : "fails");
  return v.status == LiftStatus::Verified && f.cone.kind == ConeKind::Orthant && f.cone.size == 6 && ok;
}

bool stab_c5_check(std::ostringstream& out) {
  const Polytope p = stab_polytope(cycle_graph(5));
  std::vector<Halfspace> expected;
  for (Index i = 0; i < 5; ++i) {
    RatVector a = RatVector::Zero(5);
    a(i) = -1;
    expected.push_back({a, 0});
    RatVector e = RatVector::Zero(5);
    e(i) = 1;
    e((i + 1) % 5) = 1;
    expected.push_back({e, 1});
  }
  expected.push_back({RatVector::Ones(5), 2});
  bool match = p.facets.size() == expected.size();
  try {
    align_facets(p, expected);
  } catch (const Error&) {
    match = false;
  }
  const Index lower = psd_stab_lower(cycle_graph(5));
  out << p.vertices.size() << " vertices, " << p.facets.size() << " facets, facets "
      << (match ? "match" : "differ") << "; psd lower bound " << lower;
  return p.vertices.size() == 11 && match && lower == 6;
}

bool burer_check(std::ostringstream& out) {
  const ConeFactorization f = c5_burer_factorization();
  const bool fact = verify_factorization(slack_matrix(c5_stab_polytope(), false).matrix, f);
  const auto horn = copositive_reduction(SymmetricMatrix(c5_odd_cycle_matrix()));
  const bool horn_ok = horn && copositive_check_exact(*horn).status == CopositivityStatus::Copositive;
  const CopositivityCrossCheck both = copositivity_cross_check(c5_odd_cycle_matrix());
  out << "factorization " << (fact ? "verifies" : "fails") << "; Horn form "
      << (horn_ok ? "copositive" : "not certified") << "; odd-cycle matrix direct "
      << (both.direct == CopositivityStatus::Copositive ? "copositive" : "not certified") << ", reduced "
      << (both.reduced == CopositivityStatus::Copositive ? "copositive" : "not certified");
  return fact && horn_ok && both.agree() && both.direct == CopositivityStatus::Copositive;
}

bool symmetric_check(std::ostringstream& out) {
  const Index b5 = symmetric_orthant_lower_bound(5);
  const Index b7 = symmetric_orthant_lower_bound(7);
  const Index b8 = symmetric_orthant_lower_bound(8);
  out << "n = 5 -> " << b5 << ", n = 7 -> " << b7 << ", n = 8 -> " << b8;
  return b5 == 5 && b7 == 7 && b8 == 8;
}

bool disk_check(std::ostringstream& out) {
  std::vector<RatVector> pts;
  for (const Rational& t : {Rational(0), Rational(1), Rational(-1), Rational(1, 2), Rational(-1, 3), Rational(2),
                           Rational(-3, 2), Rational(5, 7)})
    pts.push_back(circle_point(t));
  int good = 0;
  bool psd = true;
  for (const auto& p : pts) {
    psd = psd && psd_check_exact(disk_a(p)) && psd_check_exact(disk_b(p));
    for (const auto& q : pts) {
      const Rational lhs = (disk_a(p).matrix() * disk_b(q).matrix()).trace();
      good += lhs == 1 - p.dot(q) ? 1 : 0;
    }
  }
  out << good << " of 64 pairs satisfy <A(p), B(q)> = 1 - <p, q>; factors psd: " << (psd ? "yes" : "no");
  return good == 64 && psd;
}

}  // namespace

std::vector<CheckResult> run_example_checks(const CheckOptions& opts) {
  std::vector<CheckResult> out;
  out.push_back(timed(1, "hexagon slack matrix", hexagon_slack_check));
  out.push_back(timed(2, "hexagon factorization", hexagon_factorization_check));
  out.push_back(timed(3, "hexagon lift", hexagon_lift_check));
  out.push_back(timed(4, "irregular hexagon has no size-5 factorization",
                      [&](std::ostringstream& o) { return irregular_hexagon_check(o, opts.threads); }));
  out.push_back(timed(5, "polygon slack ranks", polygon_rank_check));
  out.push_back(timed(6, "squared distance matrices", squared_distance_check));
  out.push_back(timed(7, "face lattice bounds", bounds_table_check));
  out.push_back(timed(8, "cross-polytope lift", cross_polytope_check));
  out.push_back(timed(9, "stable set polytope of C5", stab_c5_check));
  out.push_back(timed(10, "completely positive factorization for C5", burer_check));
  out.push_back(timed(11, "symmetric lift bounds", symmetric_check));
  out.push_back(timed(12, "unit disk factorization", disk_check));
  return out;
}

std::string format_check(const CheckResult& r) {
  char time[32];
  std::snprintf(time, sizeof time, "%.2f s", r.seconds);
  return std::string(r.pass ? "PASS" : "FAIL") + " " + (r.id < 10 ? " " : "") + std::to_string(r.id) + " " + r.name +
         " (" + time + "): " + r.detail;
}

}  // namespace conelift
