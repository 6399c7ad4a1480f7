#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "gwmast/cli.hpp"
#include "gwmast/error.hpp"

using namespace gwmast;
using namespace gwmast::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("gwmast_test_" + name)).string();
}

}  // namespace

TEST_CASE("expect under the unrooted model") {
  const Result r = invoke({"expect", "--dist", "binary", "--n", "6", "--a", "3", "--model", "unrooted"});
  CHECK(r.code == 0);
  CHECK(r.out.find("20/3") != std::string::npos);
}

TEST_CASE("bounds for binary") {
  const Result r = invoke({"bounds", "--dist", "binary"});
  CHECK(r.code == 0);
  CHECK(r.out.find("c = 1.35914") != std::string::npos);
  CHECK(r.out.find("rho = 2.000000") != std::string::npos);
}

TEST_CASE("verify lemma1") {
  const Result r = invoke({"verify", "--suite", "lemma1", "--n", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("gf, prob, sample and mast") {
  Result r = invoke({"gf", "--order", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("3\t1/16\t1/16") != std::string::npos);

  r = invoke({"prob", "--shape", "(1,(2,3))", "--n", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("P(A_n(T) | A_n) = 1/12") != std::string::npos);

  r = invoke({"prob", "--shape", "((1,2),3)", "--n", "7", "--unordered"});
  CHECK(r.out.find("= 1/3") != std::string::npos);

  r = invoke({"sample", "--dist", "d2test", "--n", "5", "--count", "4", "--seed", "3"});
  CHECK(r.code == 0);
  int lines = 0;
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);) {
    CHECK(parse_tree(line).leaf_count() == 5);
    ++lines;
  }
  CHECK(lines == 4);

  r = invoke({"mast", "--t1", "(1,(2,3))", "--t2", "((1,2),3)", "--brute"});
  CHECK(r.code == 0);
  CHECK(r.out == "mast = 2\nbrute force (unordered) = 2\n");
}

TEST_CASE("exit codes") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"prob", "--shape", "(1,(2,3)", "--n", "5"}).code == 2);
  CHECK(invoke({"prob", "--n", "5"}).code == 2);
  CHECK(invoke({"expect", "--dist", "nosuch", "--n", "4", "--a", "2"}).code == 2);
  CHECK(invoke({"gf", "--dist-file", "/nonexistent/dist.json"}).code == 3);
  CHECK(invoke({"gf", "--json", "/nonexistent/dir/out.json"}).code == 3);
  CHECK(invoke({"sample", "--dist", "ternary", "--n", "2"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("json formatting") {
  CHECK(rational_json(Rational(20, 3)) == Json("20/3"));
  CHECK(exact_json(Rational(1, 8)) == Json{{"exact", "1/8"}, {"decimal", 0.125}});
  McReport rep;
  rep.estimate = 0.5;
  rep.std_error = 0.01;
  rep.trials = 10;
  rep.seed = 4;
  CHECK(report_json(rep) == Json{{"estimate", 0.5}, {"stderr", 0.01}, {"trials", 10}, {"seed", 4}});
}

TEST_CASE("manifests round-trip through output files") {
  const std::string json_path = temp_path("expect.json");
  const std::string csv_path = temp_path("expect.csv");
  const Result r = invoke({"expect", "--n", "5", "--a-min", "1", "--a-max", "3", "--json", json_path, "--csv", csv_path});
  REQUIRE(r.code == 0);
  const std::string json_text = read_file(json_path);
  const Json doc = Json::parse(json_text);
  CHECK(doc.at("results").size() == 3);
  CHECK(doc.at("results")[2].at("value").at("exact") == "5/6");
  const ExperimentManifest m = manifest_from_output(json_text);
  CHECK(m.command == "expect");
  CHECK(m.version == kVersion);
  CHECK(m.parameters.at("n") == 5);
  CHECK(m == manifest_from_output(read_file(csv_path)));
  CHECK(ExperimentManifest::from_json(m.to_json()) == m);

  const std::string csv = read_file(csv_path);
  CHECK(csv.find("\nn,a,value,stderr\n5,1,5/1,\n5,2,5/1,\n5,3,5/6,\n") != std::string::npos);
  std::remove(json_path.c_str());
  std::remove(csv_path.c_str());
}

TEST_CASE("same manifest gives byte-identical JSON") {
  const std::string a = temp_path("mc_a.json");
  const std::string b = temp_path("mc_b.json");
  REQUIRE(invoke({"prob", "--shape", "(1,2)", "--n", "4", "--mc-trials", "2000", "--seed", "5", "--threads", "1",
                  "--json", a})
              .code == 0);
  REQUIRE(invoke({"prob", "--shape", "(1,2)", "--n", "4", "--mc-trials", "2000", "--seed", "5", "--threads", "3",
                  "--json", b})
              .code == 0);
  CHECK(read_file(a) == read_file(b));
  const Json doc = Json::parse(read_file(a));
  CHECK(doc.at("results").at("monte_carlo").contains("stderr"));
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST_CASE("empty result set still carries the manifest") {
  const std::string j = temp_path("empty.json");
  const std::string c = temp_path("empty.csv");
  REQUIRE(invoke({"expect", "--n", "4", "--a-min", "3", "--a-max", "2", "--json", j, "--csv", c}).code == 0);
  const Json doc = Json::parse(read_file(j));
  CHECK(doc.at("results").empty());
  CHECK(doc.contains(kManifestKey));
  const std::string csv = read_file(c);
  CHECK(csv.substr(csv.find('\n') + 1) == "n,a,value,stderr\n");
  CHECK(manifest_from_output(csv).command == "expect");
  std::remove(j.c_str());
  std::remove(c.c_str());
}

TEST_CASE("distribution configs") {
  const auto from_json = parse_distribution_config(R"({"0": "7/12", "2": "1/4", "3": "1/6"})");
  CHECK(OffspringDistribution::validate(from_json) == named_distribution("d2test"));
  const auto from_toml = parse_distribution_config("# ternary\n[p]\n0 = \"2/3\"\n\"3\" = '1/3'\n");
  CHECK(OffspringDistribution::validate(from_toml) == named_distribution("ternary"));
  CHECK_THROWS_AS(parse_distribution_config("0 = \"1/2\"\n0 = \"1/2\"\n"), ParseError);
  CHECK_THROWS_AS(parse_distribution_config("{\"x\": \"1/2\"}"), ParseError);
  CHECK_THROWS_AS(parse_distribution_config("{\"0\": "), ParseError);
  CHECK_THROWS_AS(named_distribution("poisson"), Error);

  const std::string path = temp_path("dist.toml");
  write_file(path, "0 = \"1/2\"\n2 = \"1/2\"\n");
  const Result r = invoke({"gf", "--dist-file", path, "--order", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2\t1/8\t1/8") != std::string::npos);
  write_file(path, "0 = \"1/2\"\n3 = \"1/2\"\n");
  CHECK(invoke({"gf", "--dist-file", path}).code == 2);
  std::remove(path.c_str());
}

TEST_CASE("verify suites by name") {
  const Result r = invoke({"verify", "--suite", "forests"});
  CHECK(r.code == 0);
  CHECK(invoke({"verify", "--suite", "nosuch"}).code == 2);
}
