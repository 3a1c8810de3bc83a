// setopt: command-line front end for the set optimization library.
//
// Exit codes: 0 success, 1 the analysis ran and found a hypothesis violation,
// 2 usage or operational error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "setopt/setopt.hpp"

namespace fs = std::filesystem;
using namespace setopt;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kError = 2;

struct Globals {
  std::optional<double> epsilon;
  std::string report_path = "setopt_report.json";
  bool no_report = false;
};

Instance load(const std::string& path, const Globals& g) {
  Instance inst = load_instance(path);
  return g.epsilon ? inst.with_epsilon(*g.epsilon) : inst;
}

void emit(const Json& report, const Globals& g) {
  if (g.no_report) return;
  write_text(g.report_path, pretty_json(report));
  std::cerr << "report: " << g.report_path << "\n";
}

std::string join(const std::vector<std::string>& ids) {
  std::string out;
  for (const auto& id : ids) out += (out.empty() ? "" : ",") + id;
  return out;
}

Vector parse_point(const std::string& text) {
  std::vector<double> xs;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      xs.push_back(std::stod(tok));
    } catch (const std::exception&) {
      raise(ErrorCode::InvalidArgument, "bad coordinate '" + tok + "'");
    }
  }
  if (xs.empty()) raise(ErrorCode::InvalidArgument, "empty point");
  return Eigen::Map<Vector>(xs.data(), static_cast<Eigen::Index>(xs.size()));
}

// ---- relate / scalarize -----------------------------------------------------

struct RelateArgs {
  std::string instance, a, b, order = "l";
  bool strict = false;
};

int run_relate(const RelateArgs& args, const Globals& g) {
  const Instance inst = load(args.instance, g);
  const OrderKind kind(parse_order(args.order), args.strict);
  const bool result = relate(inst.cone(), inst.value(args.a), inst.value(args.b), kind);
  std::cout << "F(" << args.a << ") " << to_string(kind) << " F(" << args.b << "): " << (result ? "true" : "false")
            << "\n";
  Json report = make_report(inst);
  report["sections"].push_back(Json{{"analysis", "relate"}, {"a", args.a}, {"b", args.b},
                                    {"relation", to_string(kind)}, {"result", result}});
  emit(report, g);
  return kOk;
}

struct ScalarizeArgs {
  std::string instance, a, b, point;
};

Json scalar_json(const char* name, const ScalarResult& r) {
  Json out{{"function", name}, {"value", r.value}, {"witness_inner", r.witness_inner}};
  if (r.witness_outer) out["witness_outer"] = *r.witness_outer;
  return out;
}

int run_scalarize(const ScalarizeArgs& args, const Globals& g) {
  const Instance inst = load(args.instance, g);
  const auto& cone = inst.cone();
  const FiniteSet& a = inst.value(args.a);
  Json section{{"analysis", "scalarize"}, {"a", args.a}, {"results", Json::array()}};
  std::vector<std::pair<const char*, ScalarResult>> results;
  if (!args.point.empty()) {
    const Vector y = parse_point(args.point);
    section["point"] = to_json(y);
    results.emplace_back("phi_l", phi_l(cone, a, y));
    results.emplace_back("phi_u", phi_u(cone, a, y));
  }
  if (!args.b.empty()) {
    section["b"] = args.b;
    const FiniteSet& b = inst.value(args.b);
    results.emplace_back("G_e", sup_phi_l(cone, a, b));
    results.emplace_back("H_w", sup_phi_u(cone, a, b));
  }
  if (results.empty()) raise(ErrorCode::InvalidArgument, "give --b and/or --point");
  for (const auto& [name, r] : results) {
    std::cout << name << " = " << r.value << "\n";
    section["results"].push_back(scalar_json(name, r));
  }
  Json report = make_report(inst);
  report["sections"].push_back(section);
  emit(report, g);
  return kOk;
}

// ---- solve ------------------------------------------------------------------

struct SolveArgs {
  std::string instance, order = "l", kind = "weak", method = "brute";
};

int run_solve(const SolveArgs& args, const Globals& g) {
  const Instance inst = load(args.instance, g);
  const Order order = parse_order(args.order);
  const SolutionKind kind = parse_solution_kind(args.kind);
  SolutionReport sol;
  if (args.method == "brute") {
    sol = solve_bruteforce(inst, order, kind);
  } else if (args.method == "scalar") {
    if (kind != SolutionKind::WeakMinimal)
      raise(ErrorCode::InvalidArgument, "the scalar method characterizes weak minimal solutions only");
    sol = weak_minimal_characterized(inst, order);
  } else {
    raise(ErrorCode::InvalidArgument, "unknown method '" + args.method + "'");
  }
  std::cout << to_string(sol.kind) << " " << to_string(sol.order.tag) << " (" << to_string(sol.method)
            << "): " << join(sol.members) << "\n";
  for (const auto& ex : sol.exclusions)
    std::cout << "  " << ex.id << " excluded by " << ex.dominator << " (" << to_string(ex.relation) << ")\n";
  Json report = make_report(inst);
  report["sections"].push_back(to_json(sol));
  emit(report, g);
  return kOk;
}

// ---- certify ----------------------------------------------------------------

struct CertifyArgs {
  std::string instance, property = "strictQuasiSConvexlike", order = "l";
};

int run_certify(const CertifyArgs& args, const Globals& g) {
  const Instance inst = load(args.instance, g);
  const auto cert = certify(inst, parse_property(args.property), parse_order(args.order));
  std::cout << to_string(cert.property) << " " << to_string(cert.order) << ": "
            << (cert.holds() ? "holds" : "FAILS") << " (" << cert.pairs.size() << " pairs, " << cert.failure_count()
            << " failing)\n";
  for (const auto& p : cert.pairs) {
    if (p.holds) continue;
    std::cout << "  pair (" << p.x1 << ", " << p.x2 << ") uncovered t in " << (p.uncovered->lo_open ? "(" : "[")
              << p.uncovered->lo << ", " << p.uncovered->hi << (p.uncovered->hi_open ? ")" : "]") << "\n";
  }
  Json report = make_report(inst);
  report["sections"].push_back(to_json(cert));
  emit(report, g);
  return cert.holds() ? kOk : kViolation;
}

// ---- contract ---------------------------------------------------------------

struct ContractArgs {
  std::string instance, order = "l", csv;
  int steps = 0;
  bool refine = false;
  bool force = false;
};

int run_contract(const ContractArgs& args, const Globals& g) {
  const Instance inst = load(args.instance, g);
  const Order order = parse_order(args.order);
  if (order != Order::L && order != Order::U) raise(ErrorCode::InvalidArgument, "contract supports --order l|u");
  const int steps = args.steps > 0 ? args.steps : inst.lambda_steps().value_or(8);

  Json report = make_report(inst);
  const auto cert = certify(inst, Property::StrictQuasiSConvexlike, order);
  report["sections"].push_back(to_json(cert));
  bool hypotheses = cert.holds();
  if (!cert.holds()) std::cerr << "instance is not strictly quasi " << to_string(order) << "-convexlike\n";
  if (order == Order::U && !has_apex_values(inst)) {
    std::cerr << "values are not apex-generated (-C-convex)\n";
    hypotheses = false;
  }
  if (!hypotheses && !args.force) {
    std::cerr << "refusing to trace; rerun with --force\n";
    emit(report, g);
    return kViolation;
  }

  const auto trace = trace_contraction(inst, order, steps);
  report["sections"].push_back(to_json(trace));
  std::cout << "W = {" << join(trace.weak_members) << "}, " << trace.table.size() << " cells\n"
            << "endpoint identity: " << trace.endpoint_identity << "\nconstant base: " << trace.constant_base
            << "\nmembership: " << trace.membership << "\nties: " << trace.tie_events
            << "\nmax step: " << trace.max_step << "\n";
  bool ok = trace.certified();
  if (args.refine) {
    const auto check = refinement_check(inst, order, steps);
    report["sections"].back()["refinement"] = to_json(check);
    std::cout << "refinement " << steps << " -> " << 2 * steps << ": " << check.coarse_max_step << " -> "
              << check.fine_max_step << (check.ok() ? " ok" : " GREW") << "\n";
    ok = ok && check.ok();
  }
  if (!args.csv.empty()) {
    std::ofstream out(args.csv);
    if (!out) raise(ErrorCode::InvalidArgument, "cannot write '" + args.csv + "'");
    write_contraction_csv(trace, out);
  }
  emit(report, g);
  return ok && hypotheses ? kOk : kViolation;
}

// ---- punion -----------------------------------------------------------------

struct PunionArgs {
  std::string instance;
  int resolution = 64;
};

int run_punion(const PunionArgs& args, const Globals& g) {
  const Instance inst = load(args.instance, g);
  const auto r = weak_p_union(inst, args.resolution);
  std::cout << "U(" << r.resolution << ") = {" << join(r.union_members) << "}\nW_p = {" << join(r.weak_p_members)
            << "}\nU \\ W_p = {" << join(r.union_minus_weak_p) << "}\nW_p \\ U = {" << join(r.weak_p_minus_union)
            << "}\nties: " << r.tie_count << ", empty: " << r.empty_count << "\n";
  if (r.max_jump) std::cout << "max jump along the dual path: " << *r.max_jump << "\n";
  Json report = make_report(inst);
  report["sections"].push_back(to_json(r));
  emit(report, g);
  return r.union_included() ? kOk : kViolation;
}

// ---- gen --------------------------------------------------------------------

struct GenArgs {
  std::string family, out, cone = "orthant";
  std::uint64_t seed = 0;
  std::size_t m = 2, points = 5, decision_dim = 1, set_size = 0;
};

int run_gen(const GenArgs& args) {
  GenParams p;
  p.m = args.m;
  p.points = args.points;
  p.decision_dim = args.decision_dim;
  if (args.set_size > 0) p.set_size = args.set_size;
  p.cone = parse_cone_kind(args.cone);
  const Instance inst = generate(args.family, p, args.seed);
  if (args.out.empty()) {
    std::cout << dump_instance(inst);
  } else {
    save_instance(inst, args.out);
  }
  return kOk;
}

// ---- selftest ---------------------------------------------------------------

struct Suite {
  int passed = 0;
  int failed = 0;
  Json log = Json::array();

  void check(const std::string& fixture, const std::string& name, bool ok) {
    (ok ? passed : failed)++;
    std::cout << (ok ? "  ok    " : "  FAIL  ") << fixture << ": " << name << "\n";
    log.push_back(Json{{"fixture", fixture}, {"check", name}, {"ok", ok}});
  }
};

void selftest_instance(const std::string& name, const Instance& inst, Suite& suite) {
  for (Order order : {Order::L, Order::U}) {
    const std::string o = to_string(order);
    const auto brute = solve_bruteforce(inst, order, SolutionKind::WeakMinimal);
    const auto scalar = weak_minimal_characterized(inst, order);
    suite.check(name, "weak " + o + " routes agree", brute.members == scalar.members);
    bool replays = true;
    for (const auto& ex : brute.exclusions) replays = replays && replay_exclusion(inst, ex);
    suite.check(name, "weak " + o + " exclusions replay", replays);

    const auto cert = certify(inst, Property::StrictQuasiSConvexlike, order);
    suite.check(name, "strictQuasi " + o + " certificate replays", replay_certificate(inst, cert));
    const bool apex_ok = order == Order::L || has_apex_values(inst);
    if (cert.holds() && apex_ok) {
      const auto minimal = solve_bruteforce(inst, order, SolutionKind::Minimal);
      suite.check(name, "minimal = weak minimal for " + o, minimal.members == brute.members);
      if (inst.star_center()) {
        const auto trace = trace_contraction(inst, order, inst.lambda_steps().value_or(8));
        suite.check(name, "contraction " + o + " certified", trace.certified());
        suite.check(name, "contraction " + o + " refinement", refinement_check(inst, order, 8).ok());
      }
    }
  }
  if (inst.cone().simplicial()) {
    const auto r = weak_p_union(inst, 16);
    suite.check(name, "U(16) within W_p", r.union_included());
    if (inst.single_valued()) {
      const auto cert = certify(inst, Property::StrictQuasiSConvexlike, Order::P);
      if (cert.holds()) {
        suite.check(name, "Q(f) singletons", r.tie_count == 0);
        const auto minimal = solve_bruteforce(inst, Order::P, SolutionKind::Minimal);
        suite.check(name, "minimal = weak minimal for p", minimal.members == r.weak_p_members);
      }
    }
  }
  if (inst.single_valued()) {
    suite.check(name, "vop agrees with l",
                vop_solve(inst, VopKind::Efficient).members ==
                    solve_bruteforce(inst, Order::L, SolutionKind::Minimal).members);
  }
  suite.check(name, "round trip", dump_instance(parse_instance(dump_instance(inst))) == dump_instance(inst));
}

int run_selftest(const std::string& dir, const Globals& g) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) raise(ErrorCode::InvalidArgument, "no fixtures in '" + dir + "'");
  Suite suite;
  for (const auto& f : files) {
    const Instance inst = load(f.string(), g);
    selftest_instance(f.stem().string(), inst, suite);
  }
  std::cout << "selftest: " << suite.passed << " passed, " << suite.failed << " failed\n";
  if (!g.no_report) {
    write_text(g.report_path, pretty_json(Json{{"version", kReportVersion},
                                                {"analysis", "selftest"},
                                                {"passed", suite.passed},
                                                {"failed", suite.failed},
                                                {"checks", suite.log}}));
  }
  return suite.failed == 0 ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Set optimization laboratory"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  Globals g;
  double eps = 0.0;
  app.add_option("--epsilon", eps, "comparison tolerance (default 1e-9)")->check(CLI::PositiveNumber);
  app.add_option("--report", g.report_path, "report file")->capture_default_str();
  app.add_flag("--no-report", g.no_report, "do not write a report file");

  RelateArgs relate_args;
  auto* relate_cmd = app.add_subcommand("relate", "decide a set relation between two values");
  relate_cmd->add_option("instance", relate_args.instance)->required()->check(CLI::ExistingFile);
  relate_cmd->add_option("--a", relate_args.a)->required();
  relate_cmd->add_option("--b", relate_args.b)->required();
  relate_cmd->add_option("--order", relate_args.order)->check(CLI::IsMember({"l", "u", "h", "p"}));
  relate_cmd->add_flag("--strict", relate_args.strict);

  ScalarizeArgs scalar_args;
  auto* scalar_cmd = app.add_subcommand("scalarize", "evaluate phi_l, phi_u, G_e and H_w");
  scalar_cmd->add_option("instance", scalar_args.instance)->required()->check(CLI::ExistingFile);
  scalar_cmd->add_option("--a", scalar_args.a)->required();
  scalar_cmd->add_option("--b", scalar_args.b, "second decision point (G_e, H_w)");
  scalar_cmd->add_option("--point", scalar_args.point, "comma separated outcome vector (phi_l, phi_u)");

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "enumerate (weak) minimal solutions");
  solve_cmd->add_option("instance", solve_args.instance)->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--order", solve_args.order)->check(CLI::IsMember({"l", "u", "p"}));
  solve_cmd->add_option("--kind", solve_args.kind)->check(CLI::IsMember({"min", "weak"}));
  solve_cmd->add_option("--method", solve_args.method)->check(CLI::IsMember({"brute", "scalar"}));

  CertifyArgs cert_args;
  auto* cert_cmd = app.add_subcommand("certify", "certify a convexlikeness property");
  cert_cmd->add_option("instance", cert_args.instance)->required()->check(CLI::ExistingFile);
  cert_cmd->add_option("--property", cert_args.property)
      ->check(CLI::IsMember({"sConvexlike", "strictSConvexlike", "strictQuasiSConvexlike"}));
  cert_cmd->add_option("--order", cert_args.order)->check(CLI::IsMember({"l", "u", "p"}));

  ContractArgs contract_args;
  auto* contract_cmd = app.add_subcommand("contract", "trace the contraction of the weak minimal set");
  contract_cmd->add_option("instance", contract_args.instance)->required()->check(CLI::ExistingFile);
  contract_cmd->add_option("--order", contract_args.order)->check(CLI::IsMember({"l", "u"}));
  contract_cmd->add_option("--steps", contract_args.steps)->check(CLI::PositiveNumber);
  contract_cmd->add_flag("--refine", contract_args.refine, "compare against twice as many steps");
  contract_cmd->add_option("--csv", contract_args.csv, "write the table as CSV");
  contract_cmd->add_flag("--force", contract_args.force, "trace even if the hypotheses fail");

  PunionArgs punion_args;
  auto* punion_cmd = app.add_subcommand("punion", "union of Q(f) over a dual grid versus weak p solutions");
  punion_cmd->add_option("instance", punion_args.instance)->required()->check(CLI::ExistingFile);
  punion_cmd->add_option("--resolution", punion_args.resolution)->check(CLI::PositiveNumber);

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "generate an instance");
  gen_cmd->add_option("--family", gen_args.family)->required()->check(CLI::IsMember(family_names()));
  gen_cmd->add_option("--seed", gen_args.seed);
  gen_cmd->add_option("--m", gen_args.m);
  gen_cmd->add_option("--points", gen_args.points);
  gen_cmd->add_option("--decision-dim", gen_args.decision_dim);
  gen_cmd->add_option("--set-size", gen_args.set_size);
  gen_cmd->add_option("--cone", gen_args.cone)->check(CLI::IsMember({"orthant", "simplicial", "polyhedral"}));
  gen_cmd->add_option("--out", gen_args.out, "output file (stdout if omitted)");

  std::string fixtures = "fixtures";
  auto* self_cmd = app.add_subcommand("selftest", "run the invariant suite on shipped fixtures");
  self_cmd->add_option("--fixtures", fixtures)->check(CLI::ExistingDirectory);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }
  if (eps > 0.0) g.epsilon = eps;

  try {
    if (*relate_cmd) return run_relate(relate_args, g);
    if (*scalar_cmd) return run_scalarize(scalar_args, g);
    if (*solve_cmd) return run_solve(solve_args, g);
    if (*cert_cmd) return run_certify(cert_args, g);
    if (*contract_cmd) return run_contract(contract_args, g);
    if (*punion_cmd) return run_punion(punion_args, g);
    if (*gen_cmd) return run_gen(gen_args);
    if (*self_cmd) return run_selftest(fixtures, g);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
