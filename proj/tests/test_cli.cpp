#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Outcome {
  int status;
  std::string out;
};

Outcome cli(const std::string& args) {
  const std::string cmd = std::string(ENRICHKIT_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf{};
  while (const std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string data(const std::string& file) { return std::string(ENRICHKIT_DATA) + "/" + file; }

}  // namespace

TEST_CASE("yoneda on the chain exits 0") {
  const Outcome o = cli("yoneda --spec " + data("boolean_chain.json") + " --format machine");
  CHECK(o.status == 0);
  const auto j = nlohmann::ordered_json::parse(o.out);
  CHECK(j["records"][0]["details"]["presheaves"] == 3);
  CHECK(j["summary"]["failed"] == 0);
}

TEST_CASE("the S3 pair has six presheaves") {
  const Outcome o = cli("--check yoneda --spec " + data("s3_two_object.json") + " --format machine");
  CHECK(o.status == 0);
  const auto j = nlohmann::ordered_json::parse(o.out);
  CHECK(j["records"][0]["details"]["presheaves"] == 6);
  CHECK(j["records"][0]["details"]["bijections"] == j["records"][0]["details"]["cases"]);
}

TEST_CASE("a corrupted composition table exits 1 with a witness") {
  const Outcome o = cli("validate --spec " + data("corrupt_composition.json") + " --format machine");
  CHECK(o.status == 1);
  const auto j = nlohmann::ordered_json::parse(o.out);
  CHECK(j["records"][0]["error"] == "AssociativityViolation");
  CHECK(j["records"][0]["witnesses"][0].get<std::string>().rfind("(c, c, c)", 0) == 0);
}

TEST_CASE("input errors exit 2") {
  CHECK(cli("yoneda --spec " + data("nope.json")).status == 2);
  CHECK(cli("yoneda").status == 2);
  CHECK(cli("frobnicate --spec " + data("boolean_chain.json")).status == 2);
  CHECK(cli("yoneda --check wcolim --spec " + data("boolean_chain.json")).status == 2);
  CHECK(cli("yoneda --spec " + data("boolean_chain.json") + " --format xml").status == 2);
  const std::string empty = "enrichkit_cli_empty.json";
  std::ofstream(empty).close();
  CHECK(cli("validate --spec " + empty).status == 2);
  std::remove(empty.c_str());
}

TEST_CASE("report file and determinism") {
  const std::string path = "enrichkit_cli_report.json";
  const Outcome a = cli("fuzz --seed 3 --format machine --report " + path);
  CHECK(a.status == 0);
  std::ifstream in(path, std::ios::binary);
  std::stringstream file;
  file << in.rdbuf();
  CHECK(file.str() == a.out);
  const Outcome b = cli("fuzz --seed 3 --format machine");
  CHECK(a.out == b.out);
  std::remove(path.c_str());
}

TEST_CASE("human output") {
  const Outcome o = cli("wcolim --spec " + data("parallel_pair_swap.json"));
  CHECK(o.status == 0);
  CHECK(o.out.find("PASS  weighted-colimit  conical * swap") != std::string::npos);
  CHECK(o.out.find("\"apex\":1") != std::string::npos);
}
