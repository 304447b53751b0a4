#include <sstream>
#include <vector>

#include "support.hpp"
#include "dimerknot/cli.hpp"

using namespace dimerknot;

namespace {
struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<const char*> args) {
  args.insert(args.begin(), "dimerknot");
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("jones via every method") {
  for (const char* method : {"det", "matchings", "trees", "statesum"}) {
    const auto r = run({"jones", "--braid", "s1^3", "--method", method});
    CHECK(r.code == 0);
    CHECK(r.out == "A^-4 + A^-12 - A^-16\n");
  }
  CHECK(run({"jones", "--braid", "s1^3"}).out == "A^-4 + A^-12 - A^-16\n");
  CHECK(run({"bracket", "--braid", "s1^3", "--method", "statesum"}).out == "-A^5 - A^-3 + A^-7\n");
}

TEST_CASE("exit codes") {
  CHECK(run({"jones", "--braid", "s1 s2 s1"}).code == kExitUnsupported);
  CHECK(run({"jones", "--braid", "s1 s2 s1", "--method", "trees"}).code == kExitOk);
  CHECK(run({"jones", "--braid", "s1^x"}).code == kExitParse);
  CHECK(run({"jones", "--braid", "s1^0"}).code == kExitParse);
  CHECK(run({"jones", "--braid", "s1", "--method", "magic"}).code == kExitParse);
  CHECK(run({"jones", "--braid", "s1^30", "--method", "statesum"}).code == kExitCap);
  CHECK(run({"jones", "--braid", "s1^8", "--method", "statesum", "--max-crossings", "4"}).code == kExitCap);
  CHECK(run({"nonsense"}).code == kExitParse);
  CHECK(run({}).code == kExitParse);
}

TEST_CASE("json output") {
  const auto r = run({"jones", "--braid", "s1^3", "--format", "json"});
  CHECK(r.out == R"({"variable":"A","terms":[{"exp":-16,"coeff":-1},{"exp":-12,"coeff":1},{"exp":-4,"coeff":1}]})" "\n");
}

TEST_CASE("kauffman") {
  CHECK(run({"kauffman", "--q", "0"}).out == "(a + a^-1) z^-1 - 1\n");
  CHECK(run({"kauffman", "--q", "1", "--normalized"}).out == "a^-2\n");
  const auto skein = run({"kauffman", "--q", "7", "--method", "skein"}).out;
  CHECK(run({"kauffman", "--q", "7", "--method", "prop"}).out == skein);
  CHECK(run({"kauffman", "--q", "7", "--method", "closed"}).out == skein);
  CHECK(run({"kauffman", "--q", "-1"}).code == kExitParse);
  CHECK(run({"kauffman", "--q", "2", "--framed", "--normalized"}).code == kExitParse);
}

TEST_CASE("matrix and graph") {
  const auto m = run({"matrix", "--braid", "s1^3", "--symbolic"});
  CHECK(m.code == 0);
  CHECK(m.out.find("c3") != std::string::npos);
  CHECK(run({"matrix", "--braid", "s1^3", "--format", "json"}).code == 0);
  const auto dot = run({"graph", "--braid", "s1^3", "--kind", "overlay", "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.find("graph overlay") == 0);
  for (const char* kind : {"tait", "dual", "overlay"})
    for (const char* format : {"text", "json", "dot"})
      CHECK(run({"graph", "--braid", "s1^2 s2^2", "--kind", kind, "--format", format}).code == 0);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--braid", "s1^3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("matchings  3") != std::string::npos);
  CHECK(r.out.find("trees      3") != std::string::npos);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(run({"verify", "--braid", "s1^2 s2^3"}).code == 0);
  CHECK(run({"verify", "--braid", "s1^-2 s2^-2"}).code == 0);
  CHECK(run({"verify", "--braid", "s1^2 s2^3", "--format", "json"}).out.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("debug diagram goes to stderr") {
  const auto r = run({"jones", "--braid", "s1^3", "--debug-diagram"});
  CHECK(r.out == "A^-4 + A^-12 - A^-16\n");
  CHECK(r.err.find("\"faces\"") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::vector<const char*>> commands = {
      {"jones", "--braid", "s1^2 s2^3 s3", "--method", "statesum", "--parallel"},
      {"matrix", "--braid", "s1^4 s2^2", "--format", "json", "--symbolic"},
      {"graph", "--braid", "s1^2 s2^2", "--kind", "dual", "--format", "dot"},
      {"kauffman", "--q", "9", "--format", "json"},
  };
  for (const auto& c : commands) CHECK(run(c).out == run(c).out);
}
