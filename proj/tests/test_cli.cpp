#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "orbicurve/orbicurve.hpp"

#include "json.hpp"

using namespace orbicurve;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempFile {
public:
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("orbicurve_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++));
    std::ofstream(path_) << contents;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string str() const { return path_.string(); }

private:
  std::filesystem::path path_;
};

} // namespace

TEST_CASE("chi and classify commands") {
  RunResult r = run_cli({"chi", "w=2,3,7"});
  CHECK(r.code == 0);
  CHECK(r.out == "-1/42\n");
  CHECK(r.err.empty());

  CHECK(run_cli({"chi", "g=2"}).out == "-2\n");
  CHECK(run_cli({"chi", "g=1", "w=2,2"}).out == "-1\n");
  CHECK(run_cli({"classify", "w=2,3,5"}).out == "Spherical\n");
  CHECK(run_cli({"classify", "w=2,2,2,2,2"}).out == "Hyperbolic\n");
  CHECK(run_cli({"classify", "w=2,3"}).out == "ExcludedPQ\n");
}

TEST_CASE("small numeric commands") {
  CHECK(run_cli({"rh", "chi=-4", "order=168"}).out == "-1/42\n");
  CHECK(run_cli({"hurwitz", "chi=-4"}).out == "168\n");
  CHECK(run_cli({"genus", "chi=-2"}).out == "2\n");
  CHECK(run_cli({"triangle-order", "2", "3", "5"}).out == "60\n");
  CHECK(run_cli({"lcm", "w=2,3,7"}).out == "42\n");
  CHECK(run_cli({"k0", "w=2,3,7"}).out == "-1/84\n");
  CHECK(run_cli({"k0", "w=2,3,7", "--rank", "0", "--degree", "21", "--rank2",
                 "1", "--degree2", "0"})
            .out == "-1/2\n");
}

TEST_CASE("permutation commands") {
  CHECK(run_cli({"perm", "order", "(1,2,3)(4,5)"}).out == "6\n");
  CHECK(run_cli({"perm", "mul", "(1,2)(3,6)", "(1,2,3,4,5,6,7)"}).out ==
        "(1,3,7)(4,5,6)\n");
  CHECK(run_cli({"perm", "mul", "(1,2)", "(1,2)", "(3,4)"}).out == "(3,4)\n");
  CHECK(run_cli({"perm", "group-order", "(1,2)", "(1,2,3,4,5)"}).out == "120\n");
  CHECK(run_cli({"perm", "simple", "(1,2,3,4,5)", "(3,4,5)"}).out == "true\n");
  CHECK(run_cli({"perm", "simple", "(1,2)", "(1,2,3,4)"}).out == "false\n");
}

TEST_CASE("presentation command") {
  RunResult r = run_cli({"presentation", "w=2,2"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "<sigma_1, sigma_2 | sigma_1^2 = 1, sigma_2^2 = 1, sigma_1 sigma_2 = 1>\n");
}

TEST_CASE("witness and certify round trip through files") {
  RunResult w = run_cli({"witness", "2", "3", "7"});
  CHECK(w.code == 0);
  CHECK(w.out == "degree = 7\n"
                 "c1 = (1,2)(3,4)\n"
                 "c2 = (2,3,5)(4,6,7)\n"
                 "c3 = (1,2,5,4,7,6,3)\n");

  RunResult j = run_cli({"witness", "2", "3", "7", "--format", "json"});
  CHECK(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["kind"] == "triangle-witness");
  CHECK(doc["degree"] == 7);

  TempFile cert("{\"presentation\": {\"genus\": 0, \"weights\": [2,3,7]},"
                " \"images\": {\"alpha\": [], \"beta\": [],"
                " \"sigma\": [\"" + doc["c1"].get<std::string>() + "\", \"" +
                doc["c2"].get<std::string>() + "\", \"" +
                doc["c3"].get<std::string>() + "\"]}}");
  RunResult c = run_cli({"certify", "--images", cert.str()});
  CHECK(c.code == 0);
  CHECK(c.out.find("index = 168\n") != std::string::npos);
  CHECK(c.out.find("torsionfree = true\n") != std::string::npos);
  CHECK(c.out.find("normal = true\n") != std::string::npos);
}

TEST_CASE("companion and realize commands") {
  RunResult c = run_cli({"companion", "w=2,6,6"});
  CHECK(c.code == 0);
  CHECK(c.out == "source = [2,6,6]\n"
                 "lcm = 6\n"
                 "degrees = [3,1,1]\n"
                 "deck_order = 12\n"
                 "chi = -2\n"
                 "smooth = true\n"
                 "genus = 2\n");

  RunResult r = run_cli({"realize", "D3", "0,1,0", "4", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "quotient = <2,3,8>\n"
                 "group = mu_4^3/mu_4 : D_3\n"
                 "group_order = 96\n"
                 "stable_set_size = 3\n"
                 "chi_quotient = -1/24\n"
                 "chi_cover = -4\n"
                 "genus_cover = 3\n");
}

TEST_CASE("arnold audit flags exactly one row") {
  RunResult r = run_cli({"arnold", "--audit"});
  CHECK(r.code == 0);
  std::size_t count = 0;
  for (std::size_t pos = r.out.find("INCONSISTENT_PAPER_ROW");
       pos != std::string::npos;
       pos = r.out.find("INCONSISTENT_PAPER_ROW", pos + 1))
    ++count;
  CHECK(count == 1); // exactly one flagged row
  CHECK(r.out.find("G_168") != std::string::npos);
  CHECK(r.out.find("recomputed |G| = 324") != std::string::npos);
  CHECK(r.out.find("-chi_X = 1/18") != std::string::npos);

  RunResult j = run_cli({"arnold", "--format", "json"});
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["kind"] == "arnold-table");
  CHECK(doc["rows"].size() == 16);
}

TEST_CASE("dominance command emits dot by default") {
  RunResult r = run_cli({"dominance", "--nmax", "6", "--amax", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("digraph dominance {\n", 0) == 0);
  CHECK(r.out.find("\"<2,3,5>\"") != std::string::npos);

  RunResult j = run_cli({"dominance", "--nmax", "6", "--amax", "3", "--format",
                         "json"});
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["kind"] == "dominance-graph");
}

TEST_CASE("usage errors exit 64") {
  CHECK(run_cli({}).code == 64);
  CHECK(run_cli({"frobnicate"}).code == 64);
  CHECK(run_cli({"witness", "2", "3"}).code == 64);
  CHECK(run_cli({"witness", "2", "3", "7", "--max-degree", "x"}).code == 64);
  CHECK(run_cli({"chi", "w=2,3", "--format", "dot"}).code == 64);
  RunResult help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("usage:") != std::string::npos);
}

TEST_CASE("domain errors exit 2") {
  RunResult r = run_cli({"chi", "w=0,3"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
  CHECK(run_cli({"triangle-order", "2", "3", "7"}).code == 2);
  CHECK(run_cli({"genus", "chi=3"}).code == 2);
  CHECK(run_cli({"perm", "order", "(1,1)"}).code == 2);
}

TEST_CASE("resource caps exit 3") {
  CHECK(run_cli({"perm", "group-order", "(1,2,3,4,5,6,7)", "--cap", "5"}).code ==
        3);
  CHECK(run_cli({"witness", "2", "3", "7", "--max-degree", "6"}).code == 3);
}

TEST_CASE("config file keys with flag precedence") {
  TempFile conf("# settings\noutput_format=json\nmax_witness_degree=6\n");
  RunResult r = run_cli({"--config", conf.str(), "chi", "w=2,3,7"});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["chi"] == "-1/42");

  // the configured degree cap applies
  CHECK(run_cli({"--config", conf.str(), "witness", "2", "3", "7"}).code == 3);
  // flags win over the file
  RunResult t = run_cli({"--config", conf.str(), "chi", "w=2,3,7", "--format",
                         "text"});
  CHECK(t.out == "-1/42\n");
  RunResult deep =
      run_cli({"--config", conf.str(), "witness", "2", "3", "7",
               "--max-degree", "7", "--format", "text"});
  CHECK(deep.code == 0);

  TempFile bad("no_such_key=1\n");
  CHECK(run_cli({"--config", bad.str(), "chi", "w=2,3,7"}).code == 2);
  CHECK(run_cli({"--config", "/nonexistent/path", "chi", "w=2,3,7"}).code == 2);
}

TEST_CASE("worker count from the environment") {
  ::setenv("ORB_WORKERS", "2", 1);
  RunResult r = run_cli({"witness", "2", "3", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("degree = 7\n") == 0);
  ::setenv("ORB_WORKERS", "banana", 1);
  CHECK(run_cli({"witness", "2", "3", "7"}).code == 2);
  ::unsetenv("ORB_WORKERS");
}
