#include <doctest.h>

#include <set>

#include "graphlie/report.hpp"
#include "test_helpers.hpp"

using namespace graphlie;
using nlohmann::json;
using test_helpers::cli_available;
using test_helpers::fixture_path;
using test_helpers::run_cli;

TEST_CASE("verify report content at order 5") {
  const json report = run_verify({5, Method::Both, kDefaultBruteCap, true});
  CHECK(report.at("all_pass") == true);
  CHECK(report.at("n") == 5);
  CHECK(report.at("cpa_order") == 20);
  CHECK(report.at("cpa_identified").at("kind") == "holomorph");
  CHECK(report.at("gla_order") == 10);
  CHECK(report.at("gla_identified").at("kind") == "dihedral");
  CHECK(report.at("gla_identified").at("parameter") == 5);
  CHECK(report.at("lie_dimension") == 10);
  CHECK(report.contains("timing_ms"));

  // Every check appears exactly once.
  std::set<std::string> names;
  for (const auto& item : report.at("checks")) {
    CHECK(names.insert(item.at("name").get<std::string>()).second);
    CHECK(item.at("pass") == true);
  }
  CHECK(names.size() == 18);
}

TEST_CASE("verify report orders across methods") {
  const json fast9 = run_verify({9, Method::Fast, kDefaultBruteCap, false});
  CHECK(fast9.at("cpa_order") == 54);
  CHECK(fast9.at("gla_order") == 18);
  CHECK(fast9.at("all_pass") == true);

  const json brute3 = run_verify({3, Method::Brute, kDefaultBruteCap, false});
  CHECK(brute3.at("cpa_order") == 6);
  CHECK(brute3.at("gla_order") == 6);
  CHECK(brute3.at("cpa_identified").at("kind") == "holomorph");
  CHECK(brute3.at("gla_identified").at("kind") == "dihedral");
}

TEST_CASE("verify report is deterministic without timing") {
  const std::string a = run_verify({7, Method::Both, kDefaultBruteCap, false}).dump();
  const std::string b = run_verify({7, Method::Both, kDefaultBruteCap, false}).dump();
  CHECK(a == b);
  CHECK(a.find("timing_ms") == std::string::npos);

  VerifyOptions bad;
  bad.n = 4;
  CHECK_THROWS_AS(run_verify(bad), InputError);
}

TEST_CASE("cli build command") {
  if (!cli_available()) return;

  auto dot = run_cli("build gn 5 --format dot");
  CHECK(dot.exit_code == 0);
  int edge_lines = 0;
  std::set<std::string> colors;
  for (std::size_t pos = 0; (pos = dot.output.find(" -- ", pos)) != std::string::npos; ++pos) {
    ++edge_lines;
  }
  for (int c = 0; c < 5; ++c) {
    if (dot.output.find("color=\"c" + std::to_string(c) + "\"") != std::string::npos) {
      colors.insert(std::to_string(c));
    }
  }
  CHECK(edge_lines == 10);
  CHECK(colors.size() == 5);

  auto hn = run_cli("build hn 5 --format json");
  CHECK(hn.exit_code == 0);
  const json parsed = json::parse(hn.output);
  CHECK(parsed.at("directed") == true);
  CHECK(parsed.at("edges").size() == 10);

  auto bad = run_cli("build gn 4");
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("odd order required") != std::string::npos);
}

TEST_CASE("cli group commands on the fixtures") {
  if (!cli_available()) return;

  auto cpa23 = run_cli("cpa --file " + fixture_path("example23.json"));
  CHECK(cpa23.exit_code == 0);
  json j23 = json::parse(cpa23.output);
  CHECK(j23.at("order") == 4);
  CHECK(j23.at("identification").at("kind") == "other");

  auto cpa25 = run_cli("cpa --file " + fixture_path("example25.json"));
  json j25 = json::parse(cpa25.output);
  CHECK(j25.at("order") == 8);
  CHECK(j25.at("identification").at("kind") == "dihedral");
  CHECK(j25.at("identification").at("parameter") == 4);

  auto gla41 = run_cli("gla --file " + fixture_path("example41.json") + " --witnesses");
  json j41 = json::parse(gla41.output);
  CHECK(j41.at("order") == 4);
  const json elements = j41.at("elements");
  CHECK(std::find(elements.begin(), elements.end(), json({1, 0, 3, 2})) != elements.end());
  CHECK(std::find(elements.begin(), elements.end(), json({1, 2, 3, 0})) == elements.end());
  CHECK(j41.at("witnesses").size() == 4);

  auto missing = run_cli("gla --file /nonexistent.json");
  CHECK(missing.exit_code == 3);
}

TEST_CASE("cli lie and verify commands") {
  if (!cli_available()) return;

  auto dim = run_cli("lie --hn 5 --checks dim");
  CHECK(dim.exit_code == 0);
  CHECK(json::parse(dim.output).at("dimension") == 10);

  auto extend = run_cli("lie --file " + fixture_path("example41.json") + " --checks extend");
  const json extend_json = json::parse(extend.output);
  CHECK(extend_json.at("checks")[0].at("detail") == "extension group order 4");

  auto both = run_cli("lie --hn 7 --checks two-step,jacobi");
  const json both_json = json::parse(both.output);
  CHECK(both_json.at("all_pass") == true);
  CHECK(both_json.at("checks").size() == 2);

  auto verify5 = run_cli("verify 5 --method both --no-timing");
  CHECK(verify5.exit_code == 0);
  CHECK(json::parse(verify5.output).at("all_pass") == true);

  auto verify_even = run_cli("verify 8");
  CHECK(verify_even.exit_code == 2);
}

TEST_CASE("cli verify output is byte-identical across runs") {
  if (!cli_available()) return;
  const auto first = run_cli("verify 7 --method both --no-timing");
  const auto second = run_cli("verify 7 --method both --no-timing");
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
  CHECK_FALSE(first.output.empty());
}

TEST_CASE("cli cap handling") {
  if (!cli_available()) return;
  auto over = run_cli("cpa --gn 11 --method brute");
  CHECK(over.exit_code == 2);  // default cap 9
  auto bad_cap = run_cli("cpa --gn 5 --cap 99");
  CHECK(bad_cap.exit_code == 2);
  auto fast11 = run_cli("cpa --gn 11 --method fast");
  CHECK(fast11.exit_code == 0);
  CHECK(json::parse(fast11.output).at("order") == 110);
}
