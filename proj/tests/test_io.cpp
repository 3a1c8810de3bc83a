#include <filesystem>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace setopt;
using testing_support::code_of;

namespace {

const char* kValid = R"({
  "version": "setopt-instance/1",
  "cone": {"dim": 2, "dual_generators": [[1,0],[0,1]], "e": [1,1], "w": [1,1]},
  "points": [{"id": "x1", "coords": [0]}, {"id": "x2", "coords": [1]}],
  "values": {"x1": [[0,2]], "x2": [[2,0],[3,-1]]},
  "star_center": "x1",
  "lambda_steps": 4
})";

std::string message_of(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
  const auto pos = s.find(from);
  EXPECT_NE(pos, std::string::npos) << from;
  return s.replace(pos, from.size(), to);
}

}  // namespace

TEST(InstanceIo, ParsesValidFile) {
  const Instance inst = parse_instance(kValid);
  EXPECT_EQ(inst.size(), 2u);
  EXPECT_EQ(inst.value("x2").size(), 2u);
  EXPECT_EQ(inst.star_center(), std::optional<std::string>("x1"));
  EXPECT_EQ(inst.lambda_steps(), std::optional<int>(4));
}

TEST(InstanceIo, RoundTripIsByteStable) {
  const std::string once = dump_instance(parse_instance(kValid));
  EXPECT_EQ(dump_instance(parse_instance(once)), once);
  Rng rng(61);
  for (const auto& family : family_names()) {
    GenParams p;
    if (family == "singleton-p") p.cone = ConeKind::Simplicial;
    const Instance inst = generate(family, p, rng());
    const std::string text = dump_instance(inst);
    const Instance back = parse_instance(text);
    EXPECT_EQ(dump_instance(back), text) << family;
    for (std::size_t i = 0; i < inst.size(); ++i) EXPECT_TRUE(same_points(inst.value(i), back.value(i), 0));
  }
}

TEST(InstanceIo, SaveAndLoadFile) {
  const auto path = std::filesystem::temp_directory_path() / "setopt_io_test.json";
  const Instance inst = parse_instance(kValid);
  save_instance(inst, path.string());
  EXPECT_EQ(dump_instance(load_instance(path.string())), dump_instance(inst));
  std::filesystem::remove(path);
}

TEST(InstanceIo, MissingValueNamesTheId) {
  const std::string text = replace(kValid, R"("x2": [[2,0],[3,-1]])", R"("x9": [[2,0]])");
  const auto code = code_of([&] { parse_instance(text); });
  EXPECT_EQ(code, ErrorCode::ValidationError);
  EXPECT_NE(message_of(text).find("'x2'"), std::string::npos) << message_of(text);
}

TEST(InstanceIo, NonPointedConeIsValidationError) {
  const std::string text = replace(kValid, "[[1,0],[0,1]]", "[[1,1]]");
  EXPECT_EQ(code_of([&] { parse_instance(text); }), ErrorCode::ValidationError);
  EXPECT_NE(message_of(text).find("NotPointed"), std::string::npos) << message_of(text);
}

TEST(InstanceIo, Rejections) {
  EXPECT_EQ(code_of([] { parse_instance("{ not json"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_instance(replace(kValid, "setopt-instance/1", "setopt-instance/9")); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_instance(replace(kValid, R"("coords": [1])", R"("coords": "one")")); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_instance(replace(kValid, R"("id": "x2")", R"("id": "x1")")); }),
            ErrorCode::ValidationError);
  EXPECT_EQ(code_of([] { parse_instance(replace(kValid, R"([[0,2]])", R"([[0,2,5]])")); }),
            ErrorCode::ValidationError);
  EXPECT_EQ(code_of([] { parse_instance(replace(kValid, R"("star_center": "x1")", R"("star_center": "x7")")); }),
            ErrorCode::ValidationError);
  EXPECT_EQ(code_of([] { parse_instance(replace(kValid, "[[1,0],[0,1]]", "[[1,0],[-1,0]]")); }),
            ErrorCode::ValidationError);
}

TEST(Generators, DeterministicPerSeed) {
  for (const auto& family : family_names()) {
    GenParams p;
    p.m = family == "line-1d" ? 2 : 3;
    if (family == "singleton-p") p.cone = ConeKind::Simplicial;
    EXPECT_EQ(dump_instance(generate(family, p, 99)), dump_instance(generate(family, p, 99))) << family;
  }
  GenParams p;
  EXPECT_NE(dump_instance(generate("random-sets", p, 1)), dump_instance(generate("random-sets", p, 2)));
}

TEST(Generators, ProvenanceIsRecorded) {
  GenParams p;
  p.points = 7;
  const Instance inst = generate("apex-u", p, 5);
  ASSERT_TRUE(inst.provenance().has_value());
  EXPECT_EQ(inst.provenance()->generator, "apex-u");
  EXPECT_EQ(inst.provenance()->seed, 5u);
  EXPECT_EQ(inst.size(), 7u);
}

TEST(Generators, QuadLSeed7Certifies) {
  GenParams p;
  p.points = 5;
  const Instance inst = generate("quad-l", p, 7);
  EXPECT_EQ(inst.size(), 5u);
  EXPECT_TRUE(certify(inst, Property::StrictQuasiSConvexlike, Order::L).holds());
}

TEST(Generators, ApexUStructure) {
  GenParams p;
  p.set_size = 5;
  const Instance inst = generate("apex-u", p, 1);
  EXPECT_TRUE(has_apex_values(inst));
  // a random-sets instance generally lacks the structure
  bool some_without = false;
  for (std::uint64_t s = 1; s <= 10 && !some_without; ++s) some_without = !has_apex_values(generate("random-sets", p, s));
  EXPECT_TRUE(some_without);
}

TEST(Generators, BadParams) {
  GenParams p;
  p.m = 4;
  EXPECT_EQ(code_of([&] { generate("quad-l", p, 1); }), ErrorCode::BadParams);
  p = GenParams{};
  p.points = 23;
  p.decision_dim = 2;
  EXPECT_EQ(code_of([&] { generate("quad-l", p, 1); }), ErrorCode::BadParams);
  p = GenParams{};
  p.set_size = 33;
  EXPECT_EQ(code_of([&] { generate("random-sets", p, 1); }), ErrorCode::BadParams);
  p = GenParams{};
  p.set_size = 2;
  EXPECT_EQ(code_of([&] { generate("singleton-p", p, 1); }), ErrorCode::BadParams);
  p = GenParams{};
  p.cone = ConeKind::Polyhedral;
  EXPECT_EQ(code_of([&] { generate("singleton-p", p, 1); }), ErrorCode::BadParams);
  EXPECT_EQ(code_of([&] { generate("nope", GenParams{}, 1); }), ErrorCode::BadParams);
}

TEST(Reports, ReplayAcceptsGenuineAndRejectsTampered) {
  GenParams p;
  p.cone = ConeKind::Simplicial;
  const Instance inst = generate("singleton-p", p, 4);
  Json report = make_report(inst);
  report["sections"].push_back(to_json(solve_bruteforce(inst, Order::P, SolutionKind::WeakMinimal)));
  report["sections"].push_back(to_json(certify(inst, Property::StrictQuasiSConvexlike, Order::L)));
  report["sections"].push_back(to_json(trace_contraction(inst, Order::L, 4)));
  report["sections"].push_back(to_json(weak_p_union(inst, 6)));
  const auto ok = replay_report(Json::parse(pretty_json(report)));
  EXPECT_TRUE(ok.ok()) << (ok.failures.empty() ? "" : ok.failures.front());
  EXPECT_GT(ok.checks, 10u);

  Json tampered = report;
  auto& table = tampered["sections"][2]["table"];
  table[table.size() - 1]["h_id"] = table[0]["x_id"] == "x1" ? "x2" : "x1";
  EXPECT_FALSE(replay_report(tampered).ok());

  tampered = report;
  auto& members = tampered["sections"][0]["members"];
  for (const auto& pt : inst.points())
    if (std::find(members.begin(), members.end(), Json(pt.id)) == members.end()) members.push_back(pt.id);
  EXPECT_FALSE(replay_report(tampered).ok());
}
