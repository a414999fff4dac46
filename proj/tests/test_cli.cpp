#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = orbitfusion::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("product prints the expansion as JSON") {
  const auto r = run({"product", "--modulus", "2", "--level", "2", "--a", "1,1", "--b", "1,1"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out) == nlohmann::json{{"(2,0)", 1}, {"(0,2)", 1}});
  CHECK(r.out == "{\"(0,2)\":1,\"(2,0)\":1}\n");
}

TEST_CASE("product methods agree on the worked example") {
  for (const char* method : {"definition", "list", "blockwise"}) {
    const auto r = run({"product", "-N", "3", "-k", "3", "--a", "1,1,1", "--b", "1,1,1",
                        "--method", method});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out) ==
          nlohmann::json{{"(1,1,1)", 3}, {"(0,3,0)", 1}, {"(3,0,0)", 1}, {"(0,0,3)", 1}});
  }
  const auto text = run({"product", "-N", "3", "-k", "3", "--a", "1,1,1", "--b", "1,1,1",
                         "--format", "text"});
  CHECK(text.out.find("3*[(2,1,0)]") != std::string::npos);
}

TEST_CASE("fusion prints an integer") {
  const auto r = run({"fusion", "--modulus", "2", "--level", "1", "--lambda", "1", "--mu", "1",
                      "--nu", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  const auto raw = run({"fusion", "-N", "2", "-k", "1", "--lambda", "1", "--mu", "1", "--nu",
                        "0", "--debug-raw"});
  const auto doc = nlohmann::json::parse(raw.out);
  CHECK(doc["value"] == 1);
  CHECK(doc.contains("raw_real"));
}

TEST_CASE("verify reports zero violations with exit 0") {
  const auto r = run({"verify", "--kind", "multiplicity-free", "--modulus", "3", "--kmax", "4"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["violations"].empty());
  CHECK(doc["status"] == "pass");
  CHECK(doc["kind"] == "multiplicity-free");
  CHECK(doc["cases_checked"].get<std::uint64_t>() > 0);
  // No floating point anywhere in a report.
  for (const auto& [key, value] : doc.items()) CHECK_FALSE(value.is_number_float());
}

TEST_CASE("verify CSV has header, rows and summary") {
  const auto r = run({"verify", "--kind", "multiplicity-free", "-N", "3", "--kmax", "3",
                      "--include-nonrow-b", "--format", "csv"});
  CHECK(r.code == 0);  // evidence rows never fail the run
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "k,a,b,c,lhs,rhs,status");
  std::string last;
  bool saw_evidence = false;
  while (std::getline(lines, line)) {
    if (line.find(",evidence") != std::string::npos) saw_evidence = true;
    last = line;
  }
  CHECK(saw_evidence);
  CHECK(last.rfind("summary,,,,", 0) == 0);
  CHECK(last.substr(last.size() - 6) == "0,pass");
}

TEST_CASE("verify writes to --out") {
  const std::string path = "test_cli_report.json";
  const auto r = run({"verify", "--kind", "orbit-monotone", "-N", "2", "--kmax", "3", "--out",
                      path, "--threads", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const auto doc = nlohmann::json::parse(in);
  CHECK(doc["status"] == "pass");
  std::remove(path.c_str());
}

TEST_CASE("orbits lists labels and elements") {
  const auto all = nlohmann::json::parse(run({"orbits", "-N", "2", "-k", "3"}).out);
  REQUIRE(all.size() == 4);
  CHECK(all[0]["label"] == std::vector<int>{0, 3});
  CHECK(all[0]["size"] == 1);

  const auto one = run({"orbits", "-N", "3", "-k", "3", "--label", "1,1,1"});
  const auto doc = nlohmann::json::parse(one.out);
  CHECK(doc["size"] == 6);
  CHECK(doc["elements"][0] == std::vector<int>{2, 1, 0});
  CHECK(doc["elements"][5] == std::vector<int>{0, 1, 2});

  const auto text = run({"orbits", "-N", "3", "-k", "2", "--format", "text"});
  CHECK(text.out.find("standard form (2,2)") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"product", "-N", "2", "-k", "3", "--a", "1,1", "--b", "3,0"}).code == 2);
  CHECK(run({"product", "-N", "2", "-k", "2", "--a", "1,x", "--b", "1,1"}).code == 2);
  CHECK(run({"product", "-N", "2", "-k", "2", "--a", "1,1", "--b", "1,1", "--method", "magic"})
            .code == 2);
  CHECK(run({"verify", "--kind", "nope", "-N", "2", "--kmax", "2"}).code == 2);
  CHECK(run({"verify", "--kind", "orbit-monotone", "-N", "1", "--kmax", "2"}).code == 2);
  CHECK(run({"fusion", "-N", "3", "-k", "1", "--lambda", "1,1", "--mu", "0,0", "--nu", "0,0"})
            .code == 2);
  const auto r = run({"orbits", "-N", "0", "-k", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("error:") == 0);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("bound errors exit 3") {
  ::setenv("ORBIT_FUSION_ENUM_CAP", "3", 1);
  const auto r = run({"product", "-N", "3", "-k", "3", "--a", "1,1,1", "--b", "1,1,1",
                      "--method", "list"});
  ::unsetenv("ORBIT_FUSION_ENUM_CAP");
  CHECK(r.code == 3);
  CHECK(r.err.find("BoundExceeded") != std::string::npos);
}
