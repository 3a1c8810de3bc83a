#pragma once

#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "setopt/contraction.hpp"
#include "setopt/convexlike.hpp"
#include "setopt/io.hpp"
#include "setopt/solution_sets.hpp"

namespace setopt {

inline constexpr const char* kReportVersion = "setopt-report/1";

// ---- names ------------------------------------------------------------------

inline Order parse_order(std::string_view s) {
  if (s == "l") return Order::L;
  if (s == "u") return Order::U;
  if (s == "h") return Order::H;
  if (s == "p") return Order::P;
  raise(ErrorCode::InvalidArgument, "unknown order '" + std::string(s) + "'");
}

inline OrderKind parse_order_kind(std::string_view s) {
  constexpr std::string_view suffix = "-strict";
  if (s.size() > suffix.size() && s.substr(s.size() - suffix.size()) == suffix)
    return OrderKind(parse_order(s.substr(0, s.size() - suffix.size())), true);
  return OrderKind(parse_order(s), false);
}

inline SolutionKind parse_solution_kind(std::string_view s) {
  if (s == "min" || s == "minimal") return SolutionKind::Minimal;
  if (s == "weak" || s == "weakMinimal") return SolutionKind::WeakMinimal;
  raise(ErrorCode::InvalidArgument, "unknown solution kind '" + std::string(s) + "'");
}

inline Property parse_property(std::string_view s) {
  for (auto p : {Property::SConvexlike, Property::StrictSConvexlike, Property::StrictQuasiSConvexlike})
    if (s == to_string(p)) return p;
  raise(ErrorCode::InvalidArgument, "unknown property '" + std::string(s) + "'");
}

// ---- sections ---------------------------------------------------------------

inline Json ids_json(const std::vector<std::string>& ids) { return Json(ids); }

inline Json to_json(const SolutionReport& r) {
  Json ex = Json::array();
  for (const auto& e : r.exclusions)
    ex.push_back(Json{{"id", e.id}, {"dominator", e.dominator}, {"relation", to_string(e.relation)}});
  return Json{{"analysis", "solve"},
              {"order", to_string(r.order)},
              {"kind", to_string(r.kind)},
              {"method", to_string(r.method)},
              {"members", ids_json(r.members)},
              {"exclusions", ex}};
}

inline Json to_json(const TInterval& t) {
  return Json{{"lo", t.lo}, {"hi", t.hi}, {"lo_open", t.lo_open}, {"hi_open", t.hi_open}};
}

inline TInterval interval_from(const Json& j) {
  return {j.at("lo").get<double>(), j.at("hi").get<double>(), j.at("lo_open").get<bool>(),
          j.at("hi_open").get<bool>()};
}

inline Json to_json(const ConvexlikeCertificate& c) {
  Json pairs = Json::array();
  for (const auto& p : c.pairs) {
    Json w = Json::array();
    for (const auto& t : p.witnesses) w.push_back(Json{{"x3", t.x3}, {"t", to_json(t.t)}});
    Json entry{{"x1", p.x1}, {"x2", p.x2}, {"holds", p.holds}, {"witnesses", w}};
    if (p.uncovered) entry["uncovered"] = to_json(*p.uncovered);
    pairs.push_back(std::move(entry));
  }
  return Json{{"analysis", "certify"},
              {"property", to_string(c.property)},
              {"order", to_string(c.order)},
              {"holds", c.holds()},
              {"failures", c.failure_count()},
              {"pairs", pairs}};
}

inline ConvexlikeCertificate certificate_from(const Json& j) {
  ConvexlikeCertificate c;
  c.property = parse_property(j.at("property").get<std::string>());
  c.order = parse_order(j.at("order").get<std::string>());
  for (const auto& p : j.at("pairs")) {
    PairCertificate pc{p.at("x1").get<std::string>(), p.at("x2").get<std::string>(), p.at("holds").get<bool>(), {},
                       std::nullopt};
    for (const auto& w : p.at("witnesses")) pc.witnesses.push_back({w.at("x3").get<std::string>(), interval_from(w.at("t"))});
    if (p.contains("uncovered")) pc.uncovered = interval_from(p["uncovered"]);
    c.pairs.push_back(std::move(pc));
  }
  return c;
}

inline Json to_json(const ContractionReport& r) {
  Json table = Json::array();
  for (const auto& row : r.table)
    table.push_back(Json{{"x_id", row.x_id}, {"lambda", row.lambda}, {"h_id", row.h_id}, {"xi_value", row.xi_value}});
  return Json{{"analysis", "contract"},
              {"order", to_string(r.order)},
              {"steps", r.steps},
              {"star_center", r.star_center},
              {"spacing", r.spacing},
              {"weak_members", ids_json(r.weak_members)},
              {"endpoint_identity", r.endpoint_identity},
              {"constant_base", r.constant_base},
              {"membership", r.membership},
              {"tie_events", r.tie_events},
              {"max_step", r.max_step},
              {"certified", r.certified()},
              {"table", table}};
}

inline Json to_json(const RefinementCheck& c) {
  return Json{{"steps", c.steps},
              {"coarse_max_step", c.coarse_max_step},
              {"fine_max_step", c.fine_max_step},
              {"spacing", c.spacing},
              {"ok", c.ok()}};
}

inline Json to_json(const PUnionReport& r) {
  Json path = Json::array();
  for (const auto& f : r.path) path.push_back(Json{{"f", to_json(f.coeffs)}, {"q", ids_json(f.members)}});
  Json out{{"analysis", "punion"},
           {"resolution", r.resolution},
           {"union", ids_json(r.union_members)},
           {"weak_p", ids_json(r.weak_p_members)},
           {"union_minus_weak_p", ids_json(r.union_minus_weak_p)},
           {"weak_p_minus_union", ids_json(r.weak_p_minus_union)},
           {"tie_count", r.tie_count},
           {"empty_count", r.empty_count},
           {"all_singleton", r.all_singleton},
           {"path", path}};
  out["max_jump"] = r.max_jump ? Json(*r.max_jump) : Json(nullptr);
  return out;
}

/// Report skeleton: the instance is embedded so the file replays on its own.
inline Json make_report(const Instance& inst) {
  Json out{{"version", kReportVersion}};
  out["provenance"] = inst.provenance() ? to_json(*inst.provenance()) : Json(nullptr);
  out["instance"] = to_json(inst);
  out["sections"] = Json::array();
  return out;
}

// ---- replay -----------------------------------------------------------------

/// Outcome of replaying a report: one line per failed check.
struct ReplayResult {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond) failures.push_back(what);
  }
};

namespace detail {

inline void replay_solve(const Instance& inst, const Json& s, ReplayResult& out) {
  const OrderKind rel = parse_order_kind(s.at("order").get<std::string>());
  for (const auto& e : s.at("exclusions")) {
    const Exclusion ex{e.at("id").get<std::string>(), e.at("dominator").get<std::string>(),
                       parse_order_kind(e.at("relation").get<std::string>())};
    out.expect(replay_exclusion(inst, ex), "solve: exclusion of '" + ex.id + "' by '" + ex.dominator + "'");
  }
  // members: every x relating to x0 is related back
  for (const auto& m : s.at("members")) {
    const auto id = m.get<std::string>();
    const auto& v0 = inst.value(id);
    bool ok = true;
    for (const auto& v : inst.values())
      if (relate(inst.cone(), v, v0, rel) && !relate(inst.cone(), v0, v, rel)) ok = false;
    out.expect(ok, "solve: member '" + id + "'");
  }
}

inline void replay_contract(const Instance& inst, const Json& s, ReplayResult& out) {
  const Order order = parse_order(s.at("order").get<std::string>());
  const GridDomain domain(inst);
  const double eps = inst.cone().epsilon();
  const auto weak = solve_bruteforce(inst, order, SolutionKind::WeakMinimal);
  for (const auto& row : s.at("table")) {
    const auto x = row.at("x_id").get<std::string>();
    const double lambda = row.at("lambda").get<double>();
    const auto cell = contraction_map(inst, domain, order, inst.index_of(x), lambda);
    const auto h = row.at("h_id").get<std::string>();
    out.expect(inst.id(cell.h) == h && std::abs(cell.value - row.at("xi_value").get<double>()) <= eps,
               "contract: cell (" + x + ", " + std::to_string(lambda) + ")");
    if (s.at("membership").get<bool>()) out.expect(weak.contains(h), "contract: '" + h + "' is weakly minimal");
    if (lambda == 1.0 && s.at("endpoint_identity").get<bool>()) out.expect(h == x, "contract: H(" + x + ", 1)");
  }
}

inline void replay_punion(const Instance& inst, const Json& s, ReplayResult& out) {
  for (const auto& step : s.at("path")) {
    const DualFunctional f{detail::vector_from(step.at("f"), "path.f")};
    const auto q = f_solution_set(inst, f);
    out.expect(Json(q) == step.at("q"), "punion: Q(f) at " + step.at("f").dump());
  }
  const auto weak = solve_bruteforce(inst, Order::P, SolutionKind::WeakMinimal);
  out.expect(Json(weak.members) == s.at("weak_p"), "punion: brute-force weak p set");
}

}  // namespace detail

/// Re-verifies every section of a report using only library operations.
inline ReplayResult replay_report(const Json& report) {
  ReplayResult out;
  try {
    if (report.at("version") != kReportVersion) raise(ErrorCode::ParseError, "not a setopt report");
    const Instance inst = instance_from_json(report.at("instance"));
    for (const auto& s : report.at("sections")) {
      const auto kind = s.at("analysis").get<std::string>();
      if (kind == "solve") {
        detail::replay_solve(inst, s, out);
      } else if (kind == "certify") {
        out.expect(replay_certificate(inst, certificate_from(s)), "certify: witness replay");
      } else if (kind == "contract") {
        detail::replay_contract(inst, s, out);
      } else if (kind == "punion") {
        detail::replay_punion(inst, s, out);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    out.expect(false, std::string("malformed report: ") + e.what());
  } catch (const Error& e) {
    out.expect(false, e.what());
  }
  return out;
}

}  // namespace setopt
