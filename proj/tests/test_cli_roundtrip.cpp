// End-to-end run of the command line tool: solve, check, sample, plus the
// documented exit codes and byte determinism.
//
// usage: gbinterp_cli_roundtrip <cli-binary> <fixture-dir>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "gbinterp/problem_io.hpp"

namespace fs = std::filesystem;

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cerr << "FAILED: " << what << "\n";
  }
}

int run(const std::string& command) {
  int status = std::system(command.c_str());
  if (status == -1) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string quoted(const std::string& s) { return "'" + s + "'"; }

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: gbinterp_cli_roundtrip <cli-binary> <fixture-dir>\n";
    return 2;
  }
  const std::string cli = quoted(argv[1]);
  const fs::path fixtures(argv[2]);
  const fs::path tmp = fs::path("cli_roundtrip_tmp");
  fs::remove_all(tmp);
  fs::create_directories(tmp);

  const std::string problem = quoted((fixtures / "demo_lagrange.json").string());
  const std::string hermite =
      quoted((fixtures / "ellipsoid_hermite1_x.json").string());
  const std::string sol = quoted((tmp / "sol.json").string());
  const std::string sol2 = quoted((tmp / "sol2.json").string());
  const std::string devnull = " > /dev/null 2>&1";

  // Solve, twice: identical bytes.
  expect(run(cli + " solve " + problem + " --out " + sol + devnull) == 0,
         "solve exits 0");
  expect(run(cli + " solve " + problem + " --out " + sol2 + devnull) == 0,
         "second solve exits 0");
  expect(gbinterp::read_text_file((tmp / "sol.json").string()) ==
             gbinterp::read_text_file((tmp / "sol2.json").string()),
         "solve output is byte-identical across runs");

  // Check the solution we just wrote.
  expect(run(cli + " check " + problem + " " + sol + devnull) == 0,
         "check passes on a fresh solution");

  // A hand-edited coefficient must be flagged.
  std::string text = gbinterp::read_text_file((tmp / "sol.json").string());
  auto pos = text.find("\"value\": \"");
  expect(pos != std::string::npos, "solution has a coefficient entry");
  pos += std::string("\"value\": \"").size();
  auto end = text.find('"', pos);
  text.replace(pos, end - pos, "987654321/17");
  gbinterp::write_text_file((tmp / "bad.json").string(), text);
  expect(run(cli + " check " + problem + " " +
             quoted((tmp / "bad.json").string()) + devnull) == 3,
         "check exits 3 on a corrupted coefficient");

  // Sampling a grid, then sampling against that sample as its own
  // reference: zero difference.
  const std::string csv = quoted((tmp / "grid.csv").string());
  expect(run(cli + " sample " + sol + " --grid 0:1:5,0:1:4 --out " + csv +
             devnull) == 0,
         "sample exits 0");
  std::string csv_text = gbinterp::read_text_file((tmp / "grid.csv").string());
  expect(csv_text.rfind("X,Y,P\n", 0) == 0, "sample header");
  expect(run(cli + " sample " + sol + " --grid 0:1:5,0:1:4 --reference " + csv +
             " --out " + quoted((tmp / "diff.csv").string()) + devnull) == 0,
         "sample with reference exits 0");
  std::string diff_text = gbinterp::read_text_file((tmp / "diff.csv").string());
  expect(diff_text.find("max_abs_difference,0\n") != std::string::npos,
         "self-reference difference is zero");

  // Solve-check round trip on a derivative-mode fixture with overrides.
  const std::string hsol = quoted((tmp / "hermite.json").string());
  expect(run(cli + " solve " + hermite + " --order lex --out " + hsol +
             devnull) == 0,
         "hermite solve with order override");
  expect(run(cli + " check " + hermite + " " + hsol + devnull) == 0,
         "hermite check passes");

  // Exit codes: usage, data, solver.
  expect(run(cli + " frobnicate" + devnull) == 1, "unknown subcommand exits 1");
  expect(run(cli + " solve" + devnull) == 1, "missing argument exits 1");
  expect(run(cli + " solve /no/such/file.json" + devnull) == 2,
         "missing file exits 2");
  expect(run(cli + " sample " + sol + " --grid 0:1:5" + devnull) == 2,
         "grid arity mismatch exits 2");
  gbinterp::write_text_file(
      (tmp / "dup.json").string(),
      R"({"variables":["X"],"order":"lex","mode":"lagrange","nodes":[)"
      R"({"point":["1"],"conditions":[{"h":[],"value":"1"}]},)"
      R"({"point":["1"],"conditions":[{"h":[],"value":"2"}]}]})");
  expect(run(cli + " solve " + quoted((tmp / "dup.json").string()) + devnull) ==
             3,
         "duplicate nodes exit 3");

  if (failures == 0) {
    std::cout << "cli roundtrip: all checks passed\n";
    return 0;
  }
  std::cerr << failures << " cli roundtrip checks failed\n";
  return 1;
}
