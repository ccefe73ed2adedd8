// Command-line front end: JSON in, JSON out.
// Exit codes: 0 success, 2 malformed input, 3 refuted or no factorization, 4 budget exhausted or nothing found.

#include <conelift/bounds.hpp>
#include <conelift/checks.hpp>
#include <conelift/combin.hpp>
#include <conelift/error.hpp>
#include <conelift/json_io.hpp>
#include <conelift/lift.hpp>
#include <conelift/linalg.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>

using namespace conelift;
using io::Json;

namespace {

constexpr int kOk = 0;
constexpr int kMalformed = 2;
constexpr int kRefuted = 3;
constexpr int kBudget = 4;

struct JobConfig {
  std::string input;
  std::string second;  // factorization or lift file
  std::string output;
  std::uint64_t seed = 0;
  std::int64_t budget = 0;
  int threads = 1;
};

int thread_cap() {
  const char* env = std::getenv("CONELIFT_THREADS");
  if (!env) return 0;
  try {
    return std::max(1, std::stoi(env));
  } catch (const std::exception&) {
    return 0;
  }
}

void emit(const JobConfig& job, const Json& j) {
  if (job.output.empty())
    std::cout << io::dump(j);
  else
    io::write_file(job.output, j);
}

bool is_polytope(const Json& j) { return j.is_object() && (j.contains("vertices") || j.contains("facets")); }

// A matrix file, or a polytope file standing for its slack matrix (canonical when possible).
RatMatrix load_matrix(const std::string& path) {
  const Json j = io::read_file(path);
  if (!is_polytope(j)) return io::matrix_from_json(j);
  const Polytope p = io::polytope_from_json(j);
  return slack_matrix(p, p.origin_interior).matrix;
}

RatVector rationalized(const Eigen::MatrixXd& m) {
  RatVector v(m.size());
  for (Index i = 0; i < m.size(); ++i) v(i) = rationalize(m.data()[i], 40);
  return v;
}

Json numeric_to_json(const NumericFactorization& f) {
  Json a = Json::array(), b = Json::array();
  for (const auto& x : f.a_list) a.push_back(io::to_json(rationalized(x)));
  for (const auto& x : f.b_list) b.push_back(io::to_json(rationalized(x)));
  return {{"cone", io::to_json(f.cone)}, {"A", a}, {"B", b}, {"residual", f.residual}, {"seed", f.seed}};
}

int cmd_convert(const JobConfig& job) {
  emit(job, io::to_json(io::polytope_from_json(io::read_file(job.input))));
  return kOk;
}

int cmd_slack(const JobConfig& job, bool canonical) {
  const Polytope p = io::polytope_from_json(io::read_file(job.input));
  const SlackMatrix s = slack_matrix(p, canonical);
  Json out = io::to_json(s.matrix);
  out["canonical"] = canonical;
  emit(job, out);
  return kOk;
}

int cmd_rank(const JobConfig& job, const std::string& target, bool heuristics, bool search) {
  RankReportOptions opts;
  if (job.budget > 0) opts.budget = job.budget;
  opts.seed = job.seed;
  opts.threads = job.threads;
  opts.heuristics = heuristics;
  opts.search = search;
  const Json j = io::read_file(job.input);
  const RankTarget t = parse_rank_target(target);
  const RankReport r = is_polytope(j) ? rank_report(io::polytope_from_json(j), t, opts)
                                      : rank_report(io::matrix_from_json(j), t, opts);
  emit(job, io::to_json(r));
  return kOk;
}

int cmd_bounds(const JobConfig& job) {
  const Polytope p = io::polytope_from_json(io::read_file(job.input));
  const RatMatrix s = slack_matrix(p, p.origin_interior).matrix;
  Json out = {{"vertices", p.vertices.size()}, {"facets", p.facets.size()}, {"rank", rank(s)}};
  out["psd_from_rank"] = psd_lower_from_rank(rank(s));
  if (!p.facets.empty()) {
    const FaceLattice lattice = face_lattice(p);
    const LogBound g = goemans_bound(static_cast<Index>(lattice.size()));
    const Index antichain = max_antichain(lattice);
    out["faces"] = g.faces;
    out["log_faces"] = {{"log2", g.decimal}, {"bound", g.integer_bound}};
    out["antichain"] = {{"size", antichain}, {"bound", sperner_bound(antichain)}};
  }
  const auto simple = psd_simple_vertex_bound(p);
  out["psd_simple_vertex"] = simple ? Json(*simple) : Json();
  const BooleanRankResult b = boolean_rank(support(s), job.budget > 0 ? job.budget : 1'000'000);
  out["boolean_rank"] = {{"lower", b.lower}, {"upper", b.upper}, {"exact", b.exact}};
  emit(job, out);
  return kOk;
}

int cmd_factorize(const JobConfig& job, const std::string& cone_text, bool exact) {
  const RatMatrix m = load_matrix(job.input);
  const ConeDescriptor cone = io::parse_cone(cone_text);
  if (exact) {
    if (cone.kind != ConeKind::Orthant) throw Error(ErrorCode::InvalidInput, "exact search is for the orthant only");
    const auto r = orthant_pattern_search(m, cone.size, job.budget > 0 ? job.budget : kDefaultPatternBudget, job.threads);
    Json out = {{"result", r.status == SearchStatus::Found ? "found" : r.status == SearchStatus::None ? "none" : "budget_exceeded"}};
    out["stats"] = {{"rectangles", r.stats.rectangles}, {"covers", r.stats.covers},
                    {"rank_refuted", r.stats.rank_refuted}, {"ratio_refuted", r.stats.ratio_refuted},
                    {"lp_refuted", r.stats.lp_refuted}, {"undecided", r.stats.undecided}, {"nodes", r.stats.nodes}};
    if (r.factorization) out["factorization"] = io::to_json(*r.factorization);
    emit(job, out);
    return r.status == SearchStatus::Found ? kOk : r.status == SearchStatus::None ? kRefuted : kBudget;
  }
  HeuristicOptions h;
  h.seed = job.seed;
  if (cone.kind == ConeKind::Orthant) {
    const auto num = nmf_heuristic(m, cone.size, h);
    if (num) {
      if (const auto ex = promote_orthant(m, *num)) {
        emit(job, {{"result", "exact"}, {"factorization", io::to_json(*ex)}});
        return kOk;
      }
      emit(job, {{"result", "numeric"}, {"factorization", numeric_to_json(*num)}});
      return kOk;
    }
  } else if (cone.kind == ConeKind::Psd) {
    if (const auto num = psd_heuristic(m, cone.size, h)) {
      emit(job, {{"result", "numeric"}, {"factorization", numeric_to_json(*num)}});
      return kOk;
    }
  } else {
    throw Error(ErrorCode::InvalidInput, "no heuristic for the completely positive cone");
  }
  emit(job, {{"result", "not_found"}});
  return kBudget;
}

int cmd_verify_fact(const JobConfig& job) {
  const RatMatrix m = load_matrix(job.input);
  const ConeFactorization f = io::factorization_from_json(io::read_file(job.second));
  const bool ok = verify_factorization(m, f);
  emit(job, {{"result", ok ? "verified" : "refuted"}});
  return ok ? kOk : kRefuted;
}

int cmd_lift_build(const JobConfig& job) {
  const Polytope p = io::polytope_from_json(io::read_file(job.input));
  const ConeFactorization f = io::factorization_from_json(io::read_file(job.second));
  emit(job, io::to_json(build_lift(p, f)));
  return kOk;
}

int cmd_lift_verify(const JobConfig& job) {
  const Polytope p = io::polytope_from_json(io::read_file(job.input));
  const AffineLift l = io::lift_from_json(io::read_file(job.second));
  const LiftVerdict v = verify_lift(p, l, job.seed);
  emit(job, {{"result", std::string(to_string(v.status))}, {"detail", v.detail}});
  return v.status == LiftStatus::Refuted ? kRefuted : kOk;
}

int cmd_lift_extract(const JobConfig& job, bool require_proper) {
  const Polytope p = io::polytope_from_json(io::read_file(job.input));
  const AffineLift l = io::lift_from_json(io::read_file(job.second));
  std::vector<std::string> notes;
  const ConeFactorization f = factorization_from_orthant_lift(p, l, !require_proper, &notes);
  emit(job, {{"factorization", io::to_json(f)}, {"notes", notes}});
  return kOk;
}

int cmd_stab(const JobConfig& job) {
  const Graph g = io::graph_from_json(io::read_file(job.input));
  const Polytope p = stab_polytope(g);
  emit(job, {{"graph", io::to_json(g)}, {"stable_sets", p.vertices.size()}, {"polytope", io::to_json(p)},
             {"psd_lower_bound", psd_stab_lower(g)}});
  return kOk;
}

int cmd_theta(const JobConfig& job) {
  const Graph g = io::graph_from_json(io::read_file(job.input));
  emit(job, io::to_json(theta_lift(g)));
  return kOk;
}

int cmd_c5_burer(const JobConfig& job) {
  const Polytope p = c5_stab_polytope();
  const ConeFactorization f = c5_burer_factorization();
  const CopositivityCrossCheck c = copositivity_cross_check(c5_odd_cycle_matrix());
  auto name = [](CopositivityStatus s) {
    return s == CopositivityStatus::Copositive ? "copositive" : s == CopositivityStatus::NotCopositive ? "not_copositive" : "degenerate";
  };
  const bool ok = verify_factorization(slack_matrix(p, false).matrix, f);
  emit(job, {{"polytope", io::to_json(p)},
             {"factorization", io::to_json(f)},
             {"verified", ok},
             {"odd_cycle_copositivity", {{"direct", name(c.direct)}, {"reduced", name(c.reduced)}}}});
  return ok && c.agree() && c.direct == CopositivityStatus::Copositive ? kOk : kRefuted;
}

int cmd_symgon(const JobConfig& job, Index n) {
  emit(job, {{"n", n}, {"bound", symmetric_orthant_lower_bound(n)}});
  return kOk;
}

int cmd_examples(const JobConfig& job) {
  CheckOptions opts;
  opts.threads = job.threads;
  const auto results = run_example_checks(opts);
  bool all = true;
  Json report = Json::array();
  for (const auto& r : results) {
    std::cerr << format_check(r) << "\n";
    all = all && r.pass;
    report.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  }
  emit(job, {{"passed", all}, {"checks", report}});
  return all ? kOk : kRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cone factorizations, lifts and rank bounds of polytopes"};
  app.require_subcommand(1);
  JobConfig job;
  int threads_opt = 0;
  auto common = [&](CLI::App* c, bool needs_input) {
    auto* in = c->add_option("--in", job.input, "input JSON file");
    if (needs_input) in->required()->check(CLI::ExistingFile);
    c->add_option("--out", job.output, "output file (default stdout)");
    c->add_option("--seed", job.seed, "seed for randomized steps")->default_val(0);
    c->add_option("--budget", job.budget, "node budget (0 = default)")->default_val(0);
    c->add_option("--threads", threads_opt, "worker threads (capped by CONELIFT_THREADS)")->default_val(0);
  };

  auto* convert = app.add_subcommand("convert", "polytope in both representations");
  common(convert, true);
  bool canonical = false;
  auto* slack = app.add_subcommand("slack", "slack matrix of a polytope");
  common(slack, true);
  slack->add_flag("--canonical", canonical, "scale facets to right-hand side 1");
  std::string target = "nonnegative";
  bool no_heuristics = false, no_search = false;
  auto* rank_cmd = app.add_subcommand("rank", "rank bounds of a matrix or polytope");
  common(rank_cmd, true);
  rank_cmd->add_option("--target", target, "nonnegative, psd or boolean");
  rank_cmd->add_flag("--no-heuristics", no_heuristics, "skip numeric upper bounds");
  rank_cmd->add_flag("--no-search", no_search, "skip the exact pattern search");
  auto* bounds = app.add_subcommand("bounds", "lattice and rank lower bounds of a polytope");
  common(bounds, true);
  std::string cone_text;
  bool exact = false;
  auto* factorize = app.add_subcommand("factorize", "search for a cone factorization");
  common(factorize, true);
  factorize->add_option("--cone", cone_text, "kind:size, e.g. orthant:5")->required();
  factorize->add_flag("--exact", exact, "exact pattern search instead of a heuristic");
  auto* verify_fact = app.add_subcommand("verify-fact", "check a factorization exactly");
  common(verify_fact, true);
  verify_fact->add_option("--fact", job.second, "factorization JSON")->required()->check(CLI::ExistingFile);
  auto* lift_build = app.add_subcommand("lift-build", "lift of a polytope from a factorization");
  common(lift_build, true);
  lift_build->add_option("--fact", job.second, "factorization JSON")->required()->check(CLI::ExistingFile);
  auto* lift_verify = app.add_subcommand("lift-verify", "check that a lift projects onto a polytope");
  common(lift_verify, true);
  lift_verify->add_option("--lift", job.second, "lift JSON")->required()->check(CLI::ExistingFile);
  bool proper = false;
  auto* lift_extract = app.add_subcommand("lift-extract", "factorization from an orthant lift");
  common(lift_extract, true);
  lift_extract->add_option("--lift", job.second, "lift JSON")->required()->check(CLI::ExistingFile);
  lift_extract->add_flag("--proper", proper, "fail instead of restricting to a face of the orthant");
  auto* stab = app.add_subcommand("stab", "stable set polytope of a graph");
  common(stab, true);
  auto* theta = app.add_subcommand("theta", "theta-body lift of a graph");
  common(theta, true);
  auto* burer = app.add_subcommand("c5-burer", "completely positive factorization for the 5-cycle");
  common(burer, false);
  Index gon = 0;
  auto* symgon = app.add_subcommand("symgon", "lower bound for symmetric orthant lifts of n-gons");
  common(symgon, false);
  symgon->add_option("--n", gon, "number of vertices")->required();
  auto* examples = app.add_subcommand("examples", "regenerate and check the worked examples");
  common(examples, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kMalformed;
  }

  const int cap = thread_cap();
  job.threads = threads_opt > 0 ? threads_opt : (cap > 0 ? cap : 1);
  if (cap > 0) job.threads = std::min(job.threads, cap);

  try {
    if (*convert) return cmd_convert(job);
    if (*slack) return cmd_slack(job, canonical);
    if (*rank_cmd) return cmd_rank(job, target, !no_heuristics, !no_search);
    if (*bounds) return cmd_bounds(job);
    if (*factorize) return cmd_factorize(job, cone_text, exact);
    if (*verify_fact) return cmd_verify_fact(job);
    if (*lift_build) return cmd_lift_build(job);
    if (*lift_verify) return cmd_lift_verify(job);
    if (*lift_extract) return cmd_lift_extract(job, proper);
    if (*stab) return cmd_stab(job);
    if (*theta) return cmd_theta(job);
    if (*burer) return cmd_c5_burer(job);
    if (*symgon) return cmd_symgon(job, gon);
    if (*examples) return cmd_examples(job);
  } catch (const Error& e) {
    std::cerr << "conelift: " << e.what() << "\n";
    return kMalformed;
  }
  return kMalformed;
}
