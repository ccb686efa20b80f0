#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "graphlie/json_io.hpp"

namespace test_helpers {

inline std::string fixture_path(const std::string& name) {
  return std::string(GRAPHLIE_FIXTURE_DIR) + "/" + name;
}

inline graphlie::EdgeColoredGraph load_undirected_fixture(const std::string& name) {
  return std::get<graphlie::EdgeColoredGraph>(graphlie::load_graph_file(fixture_path(name)));
}

inline graphlie::DirectedEdgeColoredGraph load_directed_fixture(const std::string& name) {
  return std::get<graphlie::DirectedEdgeColoredGraph>(
      graphlie::load_graph_file(fixture_path(name)));
}

struct CliResult {
  int exit_code;
  std::string output;
};

/// Runs the CLI binary named by GRAPHLIE_BIN; stderr is folded into stdout.
inline CliResult run_cli(const std::string& args) {
  const char* bin = std::getenv("GRAPHLIE_BIN");
  if (!bin) return {-1, ""};
  const std::string cmd = "'" + std::string(bin) + "' " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string output;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

inline bool cli_available() { return std::getenv("GRAPHLIE_BIN") != nullptr; }

}  // namespace test_helpers
