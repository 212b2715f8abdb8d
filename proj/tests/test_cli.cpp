#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "cli_app.hpp"
#include "fibcalc/series.hpp"
#include "fibcalc/sweep.hpp"

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = fibcalc::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("basic queries") {
  CHECK(run({"fib", "--n", "10"}).out == "55\n");
  CHECK(run({"fibonomial", "--n", "5", "--k", "2"}).out == "15\n");
  CHECK(run({"roman", "--instance", "fibonacci", "--n", "0", "--k", "3"}).out ==
        "1/2\n");
  CHECK(run({"roman", "--instance", "classic", "--n", "-2", "--k", "1"}).out ==
        "-2\n");
  CHECK(run({"roman", "--instance", "q-gauss", "--q", "1/2", "--n", "3", "--k",
             "1"})
            .out == "7/4\n");
  CHECK(run({"harmonicnum", "--n", "5"}).out == "91/30\n");
  CHECK(run({"cobweb", "count", "--levels", "5"}).out == "30\n");
  CHECK(run({"cobweb", "count", "--levels", "8", "--from", "3", "--to", "6"})
            .out == "120\n");
}

TEST_CASE("exit codes") {
  const auto usage = run({"frobnicate"});
  CHECK(usage.code == 2);
  CHECK_FALSE(usage.err.empty());

  const auto domain = run({"fib", "--n", "0"});
  CHECK(domain.code == 1);
  CHECK(domain.out.empty());
  CHECK(domain.err.find("\n") == domain.err.size() - 1);  // one line

  CHECK(run({"roman", "--instance", "q-gauss", "--q", "nonsense", "--n", "1",
             "--k", "1"})
            .code == 2);
  CHECK(run({"roman", "--instance", "q-gauss", "--n", "1", "--k", "1"}).code ==
        2);
  CHECK(run({"fibonomial", "--n", "2", "--k", "5"}).code == 1);
  CHECK(run({"sweep", "--window", "4:2", "--identity", "pascal"}).code == 1);
  CHECK(run({"sweep", "--window", "junk", "--identity", "pascal"}).code == 2);
  CHECK(run({"cobweb", "dot", "--levels", "14"}).code == 1);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("determinism") {
  const std::vector<std::string> args = {"sweep",      "--instance",
                                         "fibonacci",  "--window",
                                         "-6:6",       "--identity",
                                         "pascal",     "--format",
                                         "json"};
  const auto first = run(args);
  const auto second = run(args);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
}

TEST_CASE("series subcommands and round-trip") {
  const auto d = run({"series", "d", "--instance", "fibonacci", "--series",
                      R"({"4":"1"})", "--order", "8"});
  CHECK(d.out == "3 x^3\n");

  const auto json_out = run({"series", "int", "--instance", "fibonacci",
                             "--series", R"({"3":"1","0":"2"})", "--order", "8",
                             "--format", "json"});
  REQUIRE(json_out.code == 0);
  const auto series = fibcalc::FormalSeries::from_json(json_out.out);
  CHECK(series.coefficient(4) == fibcalc::parse_rational("1/3"));
  CHECK(series.coefficient(1) == 2);
  // the JSON printed for the parsed value is identical
  CHECK(series.to_json() + "\n" == json_out.out);

  const auto star = run({"series", "star", "--lhs", R"({"2":"1"})", "--rhs",
                         R"({"3":"1"})", "--order", "12"});
  CHECK(star.out == "4/3 x^5\n");

  const auto exp = run({"series", "exp", "--alpha", "1", "--order", "5"});
  CHECK(exp.out == "1 + x + x^2 + 1/2 x^3 + 1/6 x^4 + 1/30 x^5\n");

  const auto delta = run({"series", "delta", "--series", R"({"2":"1"})"});
  CHECK(delta.out == "1 + x\n");

  CHECK(run({"series", "d", "--series", "{borken"}).code == 2);
}

TEST_CASE("qcalc subcommands") {
  CHECK(run({"qcalc", "d", "--q", "1/2", "--series", R"({"3":"1"})"}).out ==
        "7/4 x^2\n");
  CHECK(run({"qcalc", "int", "--q", "1/2", "--series", R"({"2":"1"})"}).out ==
        "4/7 x^3\n");
  CHECK(run({"qcalc", "verify", "--q", "3", "--degree", "16"}).out == "true\n");
  const auto sum = run({"qcalc", "sum", "--q", "1/2", "--series",
                        R"({"2":"1"})", "--z", "1", "--terms", "1"});
  CHECK(sum.out == "1/2\n");
  CHECK(run({"qcalc", "d", "--q", "0", "--series", R"({"1":"1"})"}).code == 1);
}

TEST_CASE("sweep json re-parses to the same report") {
  const auto result = run({"sweep", "--instance", "classic", "--window",
                           "-5:5", "--identity", "pascal", "--format", "json"});
  REQUIRE(result.code == 0);
  const auto report = fibcalc::sweep_report_from_json(result.out);
  CHECK(fibcalc::to_json(report) + "\n" == result.out);
  CHECK(report.identity == "pascal");
}

TEST_CASE("cobweb outputs") {
  const auto chains =
      run({"cobweb", "enumerate", "--levels", "4", "--from", "1", "--to", "3"});
  CHECK(chains.out == "L1_0 L2_0 L3_0\nL1_0 L2_0 L3_1\n");

  const auto json_chains = run({"cobweb", "enumerate", "--levels", "4",
                                "--from", "1", "--to", "3", "--format",
                                "json"});
  const auto parsed = nlohmann::json::parse(json_chains.out);
  CHECK(parsed.size() == 2);
  CHECK(parsed[0][0] == "L1_0");

  const auto dot = run({"cobweb", "dot", "--levels", "2"});
  CHECK(dot.out.find("digraph") != std::string::npos);
  CHECK(dot.out.find("L1_0 -> L2_0") != std::string::npos);

  const auto capped = run({"cobweb", "enumerate", "--levels", "12", "--from",
                           "1", "--to", "12", "--cap", "50"});
  CHECK(capped.code == 1);
  CHECK(capped.err.find("50") != std::string::npos);
}

TEST_CASE("csv output") {
  const auto sweep = run({"sweep", "--instance", "classic", "--window",
                          "-3:3", "--identity", "pascal", "--format", "csv"});
  CHECK(sweep.code == 0);
  CHECK(sweep.out.rfind("n,k,j,lhs,rhs\n", 0) == 0);

  const auto table = run({"table", "--rows", "4", "--format", "csv"});
  CHECK(table.out == "1\n1,1\n1,1,1\n1,2,2,1\n");

  CHECK(run({"series", "exp", "--format", "csv"}).code == 2);
}

TEST_CASE("logbinomial outputs") {
  const auto residual = run({"logbinomial", "--t", "1", "--n", "-1", "--a",
                             "4", "--x", "1/4", "--K", "40"});
  CHECK(residual.out == "0\n");

  const auto study = run({"logbinomial", "--t", "1", "--n", "-1", "--a", "4",
                          "--x", "1/4", "--K", "5", "--study"});
  std::istringstream lines(study.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "K,residual");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 6);

  CHECK(run({"logbinomial", "--t", "2", "--n", "0"}).code == 2);
}
