#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "degcomp/cli.hpp"
#include "degcomp/io.hpp"
#include "support.hpp"

using namespace degcomp;
using namespace degcomp::testing;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "degcomp-cli-test";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

void write(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

}  // namespace

TEST_CASE("solve on the anonymization example emits one arc") {
  const Outcome r = invoke({"solve", "--input", fixture_path("anonymization_example.json"), "--anonymity", "7", "--budget", "1"});
  CHECK(r.code == kExitYes);
  const SolutionFile file = parse_solution(r.out);
  REQUIRE(file.solution);
  CHECK(file.solution->arcs.size() == 1);

  const Outcome no = invoke({"solve", "--input", fixture_path("anonymization_example.json"), "--anonymity", "2", "--budget", "0"});
  CHECK(no.code == kExitNo);
}

TEST_CASE("verify accepts emitted solutions") {
  for (const char* name : {"sequence_example.json", "anonymization_example.json", "constrained_yes.json", "constrained_no.json"}) {
    const std::string solution = scratch(std::string("solution-") + name);
    const Outcome solved = invoke({"solve", "--input", fixture_path(name), "--output", solution});
    CHECK(solved.code != kExitUsage);
    const Outcome verified = invoke({"verify", "--input", fixture_path(name), "--solution", solution});
    CHECK(verified.code == kExitYes);
    CHECK(verified.out == "pass\n");
  }
}

TEST_CASE("verify rejects a wrong solution") {
  const std::string path = scratch("wrong.json");
  Solution wrong;
  wrong.arcs = {{0, 2}};
  write(path, emit_solution(Problem::ddseqc, wrong));
  CHECK(invoke({"verify", "--input", fixture_path("sequence_example.json"), "--solution", path}).code == kExitNo);
}

TEST_CASE("partition generator feeds the anonymization solver") {
  const std::string path = scratch("partition.json");
  CHECK(invoke({"gen", "--partition", "1,1", "--output", path}).code == kExitYes);
  const Outcome r = invoke({"numprob", "nda", "--input", path});
  CHECK(r.code == kExitYes);
  CHECK(r.out.find("\"decision\": \"yes\"") != std::string::npos);

  CHECK(invoke({"gen", "--partition", "1,3"}).code == kExitUsage);
}

TEST_CASE("numprob on the sequence example") {
  const Outcome r = invoke({"numprob", "nddsc", "--input", fixture_path("sequence_numbers.json")});
  CHECK(r.code == kExitYes);
  CHECK(r.out.find("\"bijection\": [1, 0, 2, 3]") != std::string::npos);
  CHECK(invoke({"numprob", "nda", "--input", fixture_path("sequence_numbers.json")}).code == kExitUsage);
}

TEST_CASE("seeded generation is reproducible") {
  for (const char* problem : {"ddconc", "ddseqc", "dda"}) {
    const Outcome a = invoke({"gen", "--problem", problem, "--seed", "42", "--vertices", "7"});
    const Outcome b = invoke({"gen", "--problem", problem, "--seed", "42", "--vertices", "7"});
    CHECK(a.code == kExitYes);
    CHECK(a.out == b.out);
    CHECK(parse_instance(a.out).graph.num_vertices() == 7);
  }
  CHECK(invoke({"gen", "--problem", "dda"}).code == kExitUsage);
}

TEST_CASE("kernelize, oracle and network subcommands") {
  const Outcome kernel = invoke({"kernelize", "--input", fixture_path("constrained_no.json")});
  CHECK(kernel.out.find("\"format\": \"degcomp-kernel\"") != std::string::npos);

  CHECK(invoke({"oracle", "--input", fixture_path("constrained_yes.json")}).code == kExitYes);
  CHECK(invoke({"oracle", "--input", fixture_path("constrained_no.json")}).code == kExitNo);

  const Outcome checked = invoke({"solve", "--oracle", "--input", fixture_path("sequence_example.json")});
  CHECK(checked.code == kExitYes);
  CHECK(checked.err.find("oracle agrees") != std::string::npos);

  const Outcome net = invoke({"network", "--input", fixture_path("sequence_example.json"), "--demands-in", "1,0,0,0",
                              "--demands-out", "0,0,0,1"});
  CHECK(net.code == kExitYes);
  CHECK(net.out.rfind("nodes 4\n", 0) == 0);
}

TEST_CASE("usage and parse problems exit with 2") {
  CHECK(invoke({}).code == kExitUsage);
  CHECK(invoke({"frobnicate"}).code == kExitUsage);
  CHECK(invoke({"solve"}).code == kExitUsage);
  CHECK(invoke({"solve", "--input", scratch("missing.json")}).code == kExitUsage);

  const std::string broken = scratch("broken.json");
  write(broken, "{ \"format\": ");
  const Outcome parse = invoke({"solve", "--input", broken});
  CHECK(parse.code == kExitUsage);
  CHECK(parse.err.find("line 1") != std::string::npos);

  const std::string loop = scratch("loop.json");
  std::string text = read_fixture("anonymization_example.json");
  text.replace(text.find("[5, 4]"), 6, "[3, 3]");
  write(loop, text);
  const Outcome semantic = invoke({"solve", "--input", loop});
  CHECK(semantic.code == kExitUsage);
  CHECK(semantic.err.find("arcs[4]") != std::string::npos);

  CHECK(invoke({"solve", "--input", fixture_path("sequence_example.json"), "--budget", "2"}).code == kExitUsage);
  CHECK(invoke({"--help"}).code == kExitYes);
}
