#include <filesystem>
#include <fstream>
#include <sstream>

#include "catch_amalgamated.hpp"
#include "synmon/cli.hpp"
#include "synmon/langcore.hpp"

using namespace synmon;
using namespace synmon::cli;

namespace {

  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result call(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int const          code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
  }

}  // namespace

TEST_CASE("syn prints a marked table", "[cli]") {
  auto const r = call({"syn", "--variety", "set", "--alphabet", "ab", "--regex", "(ab)*"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("# seed 0") != std::string::npos);
  CHECK(r.out.find("unit") != std::string::npos);
  CHECK(r.out.find("zero") != std::string::npos);
  CHECK(r.out.find("recognition: pass") != std::string::npos);
}

TEST_CASE("dual prints the atom report", "[cli]") {
  auto const r = call({"dual", "--alphabet", "ab", "--regex", "(ab)*"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("atoms=6 syn=6 isomorphic=true") != std::string::npos);
}

TEST_CASE("exit codes", "[cli]") {
  CHECK(call({"syn", "--variety", "set", "--alphabet", "ab", "--regex", "(("}).code == exit_config);
  auto const bad = call({"syn", "--regex", "(("});
  CHECK(bad.err.find("error") != std::string::npos);
  CHECK(call({"syn", "--variety", "nope", "--regex", "a"}).code == exit_config);
  CHECK(call({"syn", "--variety", "vect", "--prime", "4", "--regex", "a"}).code == exit_config);
  CHECK(call({"syn", "--regex", "a", "--dfa", "x.json"}).code == exit_config);
  CHECK(call({"syn", "--dfa", "/nonexistent/x.json"}).code == exit_config);
  CHECK(call({"syn", "--alphabet", "aa", "--regex", "a"}).code == exit_config);
  CHECK(call({"frobnicate"}).code == exit_config);
  CHECK(call({"syn", "--variety", "jsl", "--regex", "(ab)*", "--max-jsl-states", "4"}).code
        == exit_capacity);
  CHECK(call({"syn", "--variety", "vect", "--regex", "(ab)*", "--max-dim", "1"}).code
        == exit_capacity);
}

TEST_CASE("a tampered table fails verification", "[cli][mutation]") {
  RunConfig c;
  c.command = Command::syn;
  c.regex   = "(ab)*";
  c.tamper  = [](SynAlgebra& s) { s.mult[1][1] = (s.mult[1][1] + 1) % s.elements.size(); };
  std::ostringstream out, err;
  CHECK(run(c, out, err) == exit_verification);
  CHECK(err.str().find("recognition") != std::string::npos);
  c.tamper = nullptr;
  CHECK(run(c, out, err) == exit_ok);
}

TEST_CASE("json output is stable and records the seed", "[cli]") {
  for (char const* cmd : {"syn", "min", "dual", "check"}) {
    INFO(cmd);
    std::vector<std::string> args{cmd,     "--variety", "inv",  "--regex",
                                  "(ab)*", "--format",  "json", "--seed", "17"};
    auto const first  = call(args);
    auto const second = call(args);
    CHECK(first.code == exit_ok);
    CHECK(first.out == second.out);
    CHECK(first.out.find("\"seed\":17") != std::string::npos);
  }
}

TEST_CASE("every format names the seed", "[cli]") {
  for (char const* fmt : {"table", "dot", "csv"}) {
    INFO(fmt);
    auto const r = call({"min", "--variety", "pos", "--regex", "a*", "--format", fmt, "--seed", "5"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("seed 5") != std::string::npos);
  }
}

TEST_CASE("DFA files are accepted", "[cli]") {
  auto const path = std::filesystem::temp_directory_path() / "synmon_cli_test.json";
  {
    std::ofstream f(path);
    f << dfa_to_json(min_dfa("(ab)*", Alphabet("ab")));
  }
  auto const r = call({"syn", "--dfa", path.string()});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("recognition: pass") != std::string::npos);
  {
    std::ofstream f(path);
    f << "{ not json";
  }
  CHECK(call({"syn", "--dfa", path.string()}).code == exit_config);
  std::filesystem::remove(path);
}

TEST_CASE("check runs every variety", "[cli]") {
  auto const r = call({"check", "--regex", "(ab)*"});
  CHECK(r.code == exit_ok);
  for (char const* v : {"set", "pos", "pset", "inv", "jsl", "vect"}) {
    CHECK(r.out.find(v) != std::string::npos);
  }
}
