// Acceptance run: one PASS/FAIL line per criterion. Exit status 0 only when all pass.

#include <conelift/bounds.hpp>
#include <conelift/catalog.hpp>
#include <conelift/checks.hpp>
#include <conelift/cones.hpp>
#include <conelift/error.hpp>
#include <conelift/factorize.hpp>
#include <conelift/lift.hpp>
#include <conelift/linalg.hpp>
#include <conelift/polytope.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace conelift;

namespace {

// Seconds allowed for criteria 1 to 12.
constexpr double kLimits[] = {1, 1, 5, 300, 10, 10, 5, 5, 10, 120, 1, 1};
constexpr double kSuiteLimit = 600;

struct Suite {
  std::string name;
  int instances = 0;
  int failures = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++instances;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }

  // Runs body, counting a thrown error as a failure.
  void run(const std::string& what, const std::function<bool()>& body) {
    bool ok = false;
    std::string why = what;
    try {
      ok = body();
    } catch (const std::exception& e) {
      why += ": " + std::string(e.what());
    }
    record(ok, why);
  }

  bool pass(int minimum) const { return failures == 0 && instances >= minimum; }
};

Polytope random_polytope(std::mt19937_64& rng, int dim, int count, int shift, int range = 3) {
  std::uniform_int_distribution<int> coord(-range, range);
  while (true) {
    std::vector<RatVector> pts;
    for (int i = 0; i < count; ++i) {
      RatVector v(dim);
      for (int d = 0; d < dim; ++d) v(d) = coord(rng) + shift;
      pts.push_back(v);
    }
    Polytope p = from_vertices(pts);
    if (p.affine_dim() == dim) return p;
  }
}

// Same polytope translated so that its vertex barycenter is the origin.
Polytope centered(const Polytope& p) {
  RatVector mean = RatVector::Zero(p.dim);
  for (const auto& v : p.vertices) mean += v;
  mean /= Rational(static_cast<long>(p.vertices.size()));
  std::vector<RatVector> pts;
  for (const auto& v : p.vertices) pts.push_back(v - mean);
  return from_vertices(pts);
}

RatMatrix canonical_slack(const Polytope& p) { return slack_matrix(p, p.origin_interior).matrix; }

struct LiftCase {
  std::string label;
  Polytope polytope;
  ConeFactorization factorization;
};

std::vector<LiftCase> lift_cases() {
  std::vector<LiftCase> out;
  const Polytope hex = catalog::regular_hexagon();
  out.push_back({"regular hexagon", hex, orthant_factorization(catalog::hexagon_factor_a(), catalog::hexagon_factor_b())});
  const Polytope irr = catalog::irregular_hexagon();
  out.push_back({"irregular hexagon", irr, trivial_orthant_factorization(canonical_slack(irr))});
  for (Index n = 1; n <= 4; ++n) {
    const Polytope c = cross_polytope(n);
    const std::string label = "cross-polytope " + std::to_string(n);
    out.push_back({label + " slack", c, trivial_orthant_factorization(canonical_slack(c))});
    if (n >= 2)
      out.push_back({label + " small lift", c, factorization_from_orthant_lift(c, cross_polytope_lift(n))});
  }
  std::mt19937_64 rng(2718);
  for (int t = 0; static_cast<int>(out.size()) < 210; ++t) {
    const int dim = 2 + t % 2;
    const Polytope p = random_polytope(rng, dim, 5 + t % 4, t % 5 == 0 ? 4 : 0);
    const ConeFactorization f = trivial_orthant_factorization(canonical_slack(p));
    const std::string label = "random polytope " + std::to_string(t);
    if (t % 3 == 0)
      out.push_back({label + " padded", p, pad_orthant(f, f.cone.size + 1)});
    else
      out.push_back({label, p, f});
  }
  return out;
}

void roundtrip_suites(Suite& a, Suite& b) {
  for (const auto& c : lift_cases()) {
    const RatMatrix s = canonical_slack(c.polytope);
    if (!verify_factorization(s, c.factorization)) {
      a.record(false, c.label + ": input factorization does not verify");
      continue;
    }
    std::optional<AffineLift> lift;
    a.run(c.label, [&] {
      lift = build_lift(c.polytope, c.factorization);
      return verify_lift(c.polytope, *lift).status == LiftStatus::Verified;
    });
    if (!lift) continue;
    b.run(c.label, [&] {
      return verify_factorization(s, factorization_from_orthant_lift(c.polytope, *lift));
    });
  }
  for (Index n = 1; n <= 4; ++n)
    b.run("cross-polytope lift " + std::to_string(n), [&] {
      const Polytope c = cross_polytope(n);
      const AffineLift l = cross_polytope_lift(n);
      return verify_lift(c, l).status == LiftStatus::Verified &&
             verify_factorization(canonical_slack(c), factorization_from_orthant_lift(c, l));
    });
}

void polar_suite(Suite& s) {
  std::mt19937_64 rng(43);
  for (int t = 0; s.instances < 200; ++t) {
    const int dim = 2 + t % 3;
    const Polytope p = centered(random_polytope(rng, dim, dim + 2 + t % 5, 0, 6));
    s.run("polytope " + std::to_string(t), [&] {
      const RatMatrix sp = slack_matrix(p, true).matrix;
      return slack_matrix(polar(p), true).matrix == RatMatrix(sp.transpose());
    });
  }
}

void dd_suite(Suite& s) {
  std::mt19937_64 rng(41);
  for (int t = 0; s.instances < 200; ++t) {
    const int dim = 2 + t % 3;
    const Polytope p = random_polytope(rng, dim, dim + 2 + t % 6, t % 4, 6);
    s.run("polytope " + std::to_string(t), [&] {
      const Polytope q = from_inequalities(from_vertices(p.vertices).facets);
      return oracle::same_set(q.vertices, p.vertices);
    });
  }
}

void psd_suite(Suite& s) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> dimd(1, 4);
  for (int t = 0; t < 300; ++t) {
    const Index n = dimd(rng);
    RatMatrix m;
    if (t % 3 == 0) {
      m = oracle::random_symmetric(rng, n);
    } else {
      const RatMatrix g = oracle::random_matrix(rng, t % 3 == 1 ? std::max<Index>(n - 1, 1) : n, n, 2, 1);
      m = g.transpose() * g;
      if (t % 3 == 2) m(0, 0) -= Rational(static_cast<int>(rng() % 3));
    }
    s.run("matrix " + std::to_string(t),
          [&] { return psd_check_exact(SymmetricMatrix(m)) == oracle::psd_by_charpoly(m); });
  }
}

void copositive_suite(Suite& s) {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> dimd(2, 4);
  for (int t = 0; t < 240; ++t) {
    const Index n = dimd(rng);
    RatMatrix m;
    if (t % 4 == 0) {
      const RatMatrix g = oracle::random_matrix(rng, n, n, 3, 2);
      m = g.transpose() * g;
    } else {
      m = oracle::random_symmetric(rng, n, 3);
      for (Index i = 0; i < n; ++i) m(i, i) = abs(m(i, i));
    }
    s.run("matrix " + std::to_string(t), [&] {
      const auto v = copositive_check_exact(SymmetricMatrix(m));
      const Rational grid = oracle::grid_min(m, n == 4 ? 24 : 48);
      if (v.status == CopositivityStatus::Degenerate) return false;
      if (grid < 0 && v.status != CopositivityStatus::NotCopositive) return false;
      if (v.status == CopositivityStatus::NotCopositive) {
        const RatVector& x = *v.witness;
        return (x.array() >= 0).all() && x.dot(m * x) < 0;
      }
      return true;
    });
  }
}

void boolean_suite(Suite& s) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 200; ++t) {
    const Index p = 1 + static_cast<Index>(rng() % 6);
    const Index q = 1 + static_cast<Index>(rng() % 6);
    const int density = 30 + static_cast<int>(rng() % 50);
    BoolMatrix m(p, q);
    for (Index i = 0; i < p; ++i)
      for (Index j = 0; j < q; ++j) m(i, j) = static_cast<int>(rng() % 100) < density;
    s.run("matrix " + std::to_string(t), [&] {
      const auto r = boolean_rank(m);
      return r.exact && verify_boolean(m, r.cover) && r.cover.size() == r.upper &&
             r.upper == oracle::brute_boolean_rank(m);
    });
  }
}

void lattice_suite(Suite& s) {
  std::mt19937_64 rng(7);
  std::vector<Polytope> polys = {catalog::regular_hexagon(), catalog::cube(2), cross_polytope(1)};
  for (int t = 0; polys.size() < 200; ++t) {
    const int dim = t % 4 == 3 ? 3 : 2;
    const Polytope p = random_polytope(rng, dim, dim == 3 ? 4 + t % 2 : 3 + t % 6, 0, 4);
    if (face_lattice(incidence(p)).size() <= 20) polys.push_back(p);
  }
  for (std::size_t t = 0; t < polys.size(); ++t) {
    const Polytope& p = polys[t];
    s.run("polytope " + std::to_string(t), [&] {
      const BoolMatrix inc = incidence(p);
      const BoolMatrix sup = (!inc.array()).matrix();
      const auto br = boolean_rank(sup);
      if (!br.exact) return false;
      // Boolean factorization to embedding and back.
      const LatticeEmbedding e = lattice_embedding_from_boolean(br.cover, inc);
      const BooleanFactorization f = boolean_from_lattice_embedding(e, inc);
      // Embedding to factorization and back, starting from the facet embedding.
      const LatticeEmbedding fe = fixture::facet_embedding(p);
      const BooleanFactorization g = boolean_from_lattice_embedding(fe, inc);
      const LatticeEmbedding ge = lattice_embedding_from_boolean(g, inc);
      return e.dim == br.upper && verify_embedding(e) && f.size() == br.upper && verify_boolean(sup, f) &&
             verify_embedding(fe) && g.size() == fe.dim && verify_boolean(sup, g) && ge.dim == g.size() &&
             verify_embedding(ge);
    });
  }
}

std::string summary(const Suite& s) {
  std::ostringstream out;
  out << s.name << ' ' << s.instances - s.failures << '/' << s.instances;
  if (s.failures > 0) out << " (first failure: " << s.first_failure << ")";
  return out.str();
}

std::string line(bool pass, int id, const std::string& name, double seconds, const std::string& detail) {
  char time[32];
  std::snprintf(time, sizeof time, "%.2f s", seconds);
  return std::string(pass ? "PASS" : "FAIL") + " " + (id < 10 ? " " : "") + std::to_string(id) + " " + name + " (" +
         time + "): " + detail;
}

}  // namespace

int main() {
  bool all = true;
  for (const CheckResult& r : run_example_checks()) {
    const double limit = kLimits[r.id - 1];
    const bool pass = r.pass && r.seconds < limit;
    std::string detail = r.detail;
    if (r.pass && !pass) detail += "; over the time limit";
    std::cout << line(pass, r.id, r.name, r.seconds, detail) << std::endl;
    all = all && pass;
  }

  const auto start = std::chrono::steady_clock::now();
  std::vector<Suite> suites(8);
  const char* names[] = {"lift from factorization",
                         "factorization from lift",
                         "polar transposes slack",
                         "double description",
                         "psd vs characteristic polynomial",
                         "copositivity vs grid",
                         "Boolean rank vs covers",
                         "lattice embeddings vs Boolean factorizations"};
  for (std::size_t i = 0; i < suites.size(); ++i) suites[i].name = names[i];
  roundtrip_suites(suites[0], suites[1]);
  polar_suite(suites[2]);
  dd_suite(suites[3]);
  psd_suite(suites[4]);
  copositive_suite(suites[5]);
  boolean_suite(suites[6]);
  lattice_suite(suites[7]);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  bool props = seconds < kSuiteLimit;
  std::string detail;
  for (const auto& s : suites) {
    props = props && s.pass(200);
    detail += (detail.empty() ? "" : "; ") + summary(s);
  }
  std::cout << line(props, 13, "property suites", seconds, detail) << std::endl;
  all = all && props;
  return all ? 0 : 1;
}
