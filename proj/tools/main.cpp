#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "graphlie/json_io.hpp"
#include "graphlie/lie.hpp"
#include "graphlie/report.hpp"

namespace {

using graphlie::Method;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitIo = 3;
constexpr int kExitCheckFailed = 4;

struct GlobalOptions {
  std::string out;
  bool pretty = false;
  int cap = graphlie::kDefaultBruteCap;
};

int resolve_cap(const std::optional<int>& flag_cap) {
  int cap = graphlie::kDefaultBruteCap;
  if (const char* env = std::getenv("GRAPHLIE_BRUTE_CAP")) {
    try {
      cap = std::stoi(env);
    } catch (const std::exception&) {
      throw graphlie::InputError("GRAPHLIE_BRUTE_CAP is not an integer");
    }
  }
  if (flag_cap) cap = *flag_cap;  // the flag wins over the environment
  if (cap < 1 || cap > graphlie::kHardBruteCap) {
    throw graphlie::InputError("cap must be between 1 and " +
                               std::to_string(graphlie::kHardBruteCap));
  }
  return cap;
}

void emit(const std::string& text, const GlobalOptions& opts) {
  if (opts.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.out);
  if (!out) throw graphlie::IoError("cannot open " + opts.out + " for writing");
  out << text;
  if (!out) throw graphlie::IoError("failed writing " + opts.out);
}

void emit_json(const json& j, const GlobalOptions& opts) {
  emit((opts.pretty ? j.dump(2) : j.dump()) + "\n", opts);
}

graphlie::EdgeColoredGraph undirected_source(const std::optional<int>& gn,
                                             const std::string& file) {
  if (gn) return graphlie::build_gn(*gn);
  auto any = graphlie::load_graph_file(file);
  if (auto* g = std::get_if<graphlie::EdgeColoredGraph>(&any)) return *g;
  return graphlie::underlying_undirected(std::get<graphlie::DirectedEdgeColoredGraph>(any));
}

graphlie::DirectedEdgeColoredGraph directed_source(const std::optional<int>& hn,
                                                   const std::string& file) {
  if (hn) return graphlie::build_hn(*hn);
  auto any = graphlie::load_graph_file(file);
  if (auto* h = std::get_if<graphlie::DirectedEdgeColoredGraph>(&any)) return *h;
  throw graphlie::InputError(file + ": a directed graph is required");
}

json group_report(const graphlie::PermutationGroup& group, bool with_witnesses,
                  const std::optional<graphlie::EdgeColoredGraph>& cpa_graph,
                  const std::optional<graphlie::DirectedEdgeColoredGraph>& gla_graph) {
  json elements = json::array();
  for (const auto& p : group.elements()) elements.push_back(p.images());
  json generators = json::array();
  for (const auto& p : group.generators()) generators.push_back(p.images());
  json out{{"degree", group.degree()},
           {"order", group.order()},
           {"elements", elements},
           {"generators", generators},
           {"identification", graphlie::identification_to_json(graphlie::identify(group))}};
  if (with_witnesses) {
    json witnesses = json::array();
    for (const auto& p : group.elements()) {
      if (cpa_graph) {
        witnesses.push_back(
            graphlie::cpa_witness_to_json(p, *graphlie::color_permutation_witness(p, *cpa_graph)));
      } else {
        witnesses.push_back(
            graphlie::gla_witness_to_json(p, *graphlie::gla_witness(p, *gla_graph)));
      }
    }
    out["witnesses"] = witnesses;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge-colored graph symmetry groups and 2-step nilpotent Lie algebras"};
  app.require_subcommand(1);

  GlobalOptions global;
  std::optional<int> flag_cap;
  app.add_option("--out", global.out, "Write output to a file instead of stdout");
  app.add_flag("--pretty", global.pretty, "Indent JSON output");
  app.add_option("--cap", flag_cap,
                 "Bound on full S_n scans (default 9, hard max 11; env GRAPHLIE_BRUTE_CAP)");

  // build
  auto* build = app.add_subcommand("build", "Construct a graph family member");
  std::string build_kind;
  int build_n = 0;
  std::string build_format = "json";
  build->add_option("kind", build_kind, "gn or hn")->required()->check(CLI::IsMember({"gn", "hn"}));
  build->add_option("n", build_n, "odd order >= 3")->required();
  build->add_option("--format", build_format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));

  // cpa
  auto* cpa = app.add_subcommand("cpa", "Color permuting automorphism group");
  std::optional<int> cpa_gn;
  std::string cpa_file, cpa_method = "brute";
  bool cpa_witnesses = false;
  cpa->add_option("--gn", cpa_gn, "Use the built-in family of this order");
  cpa->add_option("--file", cpa_file, "Graph JSON file");
  cpa->add_option("--method", cpa_method, "brute, fast or both");
  cpa->add_flag("--witnesses", cpa_witnesses, "Include per-element color witnesses");

  // gla
  auto* gla = app.add_subcommand("gla", "Graph Lie automorphism group");
  std::optional<int> gla_hn;
  std::string gla_file, gla_method = "brute";
  bool gla_witnesses = false;
  gla->add_option("--hn", gla_hn, "Use the built-in directed family of this order");
  gla->add_option("--file", gla_file, "Directed graph JSON file");
  gla->add_option("--method", gla_method, "brute, fast or both");
  gla->add_flag("--witnesses", gla_witnesses, "Include per-element signed color witnesses");

  // lie
  auto* lie = app.add_subcommand("lie", "Build the associated algebra and run checks");
  std::optional<int> lie_hn;
  std::string lie_file, lie_checks = "two-step,jacobi,dim,derived,extend";
  lie->add_option("--hn", lie_hn, "Use the built-in directed family of this order");
  lie->add_option("--file", lie_file, "Directed graph JSON file");
  lie->add_option("--checks", lie_checks,
                  "Comma-separated subset of two-step,jacobi,dim,derived,extend");

  // verify
  auto* verify = app.add_subcommand("verify", "Run the full verification pipeline");
  int verify_n = 0;
  std::string verify_method = "both";
  bool no_timing = false;
  verify->add_option("n", verify_n, "odd order >= 3")->required();
  verify->add_option("--method", verify_method, "brute, fast or both");
  verify->add_flag("--no-timing", no_timing, "Omit the timing block (stable output)");

  // identify
  auto* identify_cmd = app.add_subcommand("identify", "Recognize a permutation group");
  std::string identify_file;
  identify_cmd->add_option("--file", identify_file, "Group JSON file")->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    global.cap = resolve_cap(flag_cap);

    if (*build) {
      if (build_kind == "gn") {
        auto g = graphlie::build_gn(build_n);
        if (build_format == "dot") {
          emit(graphlie::graph_to_dot(g, "gn" + std::to_string(build_n)), global);
        } else {
          emit_json(graphlie::graph_to_json(g), global);
        }
      } else {
        auto h = graphlie::build_hn(build_n);
        if (build_format == "dot") {
          emit(graphlie::graph_to_dot(h, "hn" + std::to_string(build_n)), global);
        } else {
          emit_json(graphlie::graph_to_json(h), global);
        }
      }
      return kExitOk;
    }

    if (*cpa) {
      if (!cpa_gn && cpa_file.empty()) {
        throw graphlie::InputError("cpa needs --gn N or --file PATH");
      }
      auto g = undirected_source(cpa_gn, cpa_file);
      auto group = graphlie::enumerate_cpa(g, graphlie::parse_method(cpa_method), global.cap);
      emit_json(group_report(group, cpa_witnesses, g, std::nullopt), global);
      return kExitOk;
    }

    if (*gla) {
      if (!gla_hn && gla_file.empty()) {
        throw graphlie::InputError("gla needs --hn N or --file PATH");
      }
      auto h = directed_source(gla_hn, gla_file);
      auto group = graphlie::enumerate_gla(h, graphlie::parse_method(gla_method), global.cap);
      emit_json(group_report(group, gla_witnesses, std::nullopt, h), global);
      return kExitOk;
    }

    if (*lie) {
      if (!lie_hn && lie_file.empty()) {
        throw graphlie::InputError("lie needs --hn N or --file PATH");
      }
      auto h = directed_source(lie_hn, lie_file);
      auto alg = graphlie::LieAlgebra2Step::from_graph(h);
      json checks = json::array();
      bool all_pass = true;
      auto add = [&](const std::string& name, bool pass, const std::string& detail) {
        checks.push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
        all_pass = all_pass && pass;
      };
      std::stringstream selected(lie_checks);
      std::string item;
      while (std::getline(selected, item, ',')) {
        if (item == "two-step") {
          add(item, graphlie::check_two_step(alg), "all triple brackets vanish");
        } else if (item == "jacobi") {
          add(item, graphlie::check_jacobi(alg), "Jacobi identity holds on basis triples");
        } else if (item == "dim") {
          add(item, alg.dimension() == alg.dim_v() + alg.dim_w(),
              "dimension " + std::to_string(alg.dimension()));
        } else if (item == "derived") {
          auto derived = graphlie::derived_subalgebra(alg);
          add(item, static_cast<int>(derived.size()) == alg.dim_w(),
              "derived subalgebra spans " + std::to_string(derived.size()) + " of " +
                  std::to_string(alg.dim_w()) + " W basis vectors");
        } else if (item == "extend") {
          auto mats = graphlie::gla_image_group(h, global.cap);
          add(item, true, "extension group order " + std::to_string(mats.size()));
        } else {
          throw graphlie::InputError("unknown check '" + item + "'");
        }
      }
      emit_json(json{{"dim_v", alg.dim_v()},
                     {"dim_w", alg.dim_w()},
                     {"dimension", alg.dimension()},
                     {"checks", checks},
                     {"all_pass", all_pass}},
                global);
      return all_pass ? kExitOk : kExitCheckFailed;
    }

    if (*verify) {
      graphlie::VerifyOptions opts;
      opts.n = verify_n;
      opts.method = graphlie::parse_method(verify_method);
      opts.brute_cap = global.cap;
      opts.with_timing = !no_timing;
      json report = graphlie::run_verify(opts);
      emit_json(report, global);
      return graphlie::report_all_pass(report) ? kExitOk : kExitCheckFailed;
    }

    if (*identify_cmd) {
      std::ifstream in(identify_file);
      if (!in) throw graphlie::IoError("cannot open " + identify_file);
      json j;
      try {
        in >> j;
      } catch (const json::parse_error& err) {
        throw graphlie::InputError(identify_file + ": " + err.what());
      }
      auto group = graphlie::group_from_json(j);
      emit_json(graphlie::identification_to_json(graphlie::identify(group)), global);
      return kExitOk;
    }
  } catch (const graphlie::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const graphlie::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const graphlie::CheckError& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}
