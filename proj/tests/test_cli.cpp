#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "stringy/cli.hpp"
#include "stringy/text.hpp"
#include "stringy/worked_example.hpp"

using namespace stringy;

namespace {

struct Invocation {
  int status = -1;
  std::string out;
  std::string err;
};

Invocation invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Invocation result;
  result.status = cli::run(args, out, err);
  result.out = out.str();
  result.err = err.str();
  return result;
}

std::string lineValue(const std::string& output, const std::string& prefix) {
  std::istringstream stream(output);
  std::string line;
  while (std::getline(stream, line)) {
    if (line.rfind(prefix, 0) == 0) return line.substr(prefix.size());
  }
  return {};
}

class TempFile {
 public:
  TempFile(const std::string& name, const std::string& content)
      : path_("/tmp/stringy_test_" + name) {
    std::ofstream(path_) << content;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace

TEST_CASE("family-s prints the worked family") {
  const Invocation r = invoke({"family-s", "--alpha", "6,6,4,3,3"});
  CHECK(r.status == 0);
  CHECK(r.out == "S = {{}, {3}, {4,5}, {3,4,5}, {1,2,4,5}}\n");
}

TEST_CASE("fermat prints the bare polynomial") {
  const Invocation r = invoke({"fermat", "--dim", "0", "--degree", "7"});
  CHECK(r.status == 0);
  CHECK(r.out == "7\n");
}

TEST_CASE("example53 coefficient query") {
  const Invocation r = invoke({"example53", "--coeff", "3,3"});
  CHECK(r.status == 0);
  CHECK(r.out == "-3\n");
}

TEST_CASE("brieskorn and residue agree end to end") {
  const Invocation viaClosedForm = invoke({"brieskorn", "--exponents", "2,2,3"});
  const Invocation viaResidue = invoke({"residue", "--exponents", "2,2,3"});
  REQUIRE(viaClosedForm.status == 0);
  REQUIRE(viaResidue.status == 0);
  const StringyRational a =
      parseStringyRational(lineValue(viaClosedForm.out, "contribution = "));
  const StringyRational b =
      parseStringyRational(lineValue(viaResidue.out, "contribution = "));
  CHECK(crossEqual(a, b));
}

TEST_CASE("invocations are deterministic") {
  for (const std::vector<std::string> args :
       {std::vector<std::string>{"brieskorn", "--exponents", "2,2,2,2", "--series", "4"},
        std::vector<std::string>{"zeta", "--exponents", "2,3,4"},
        std::vector<std::string>{"example53"}}) {
    const Invocation first = invoke(args);
    const Invocation second = invoke(args);
    CHECK(first.status == 0);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("json output agrees with the text output") {
  const Invocation text = invoke({"fermat", "--dim", "3", "--degree", "6"});
  const Invocation json = invoke({"fermat", "--dim", "3", "--degree", "6", "--json"});
  REQUIRE(json.status == 0);
  const auto doc = nlohmann::json::parse(json.out);
  CHECK(doc.at("hodge").get<std::string>() + "\n" == text.out);

  const Invocation bText = invoke({"brieskorn", "--exponents", "2,2,2"});
  const Invocation bJson = invoke({"brieskorn", "--exponents", "2,2,2", "--json"});
  const auto bDoc = nlohmann::json::parse(bJson.out);
  CHECK(bDoc.at("contribution").get<std::string>() ==
        lineValue(bText.out, "contribution = "));
  CHECK(bDoc.at("k").get<long>() == 2);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"unknown-command"}).status == 2);
  CHECK(invoke({"brieskorn", "--exponents", "2,x"}).status == 2);
  CHECK(invoke({"brieskorn"}).status == 2);
  CHECK(invoke({"resolution", "--input", "/nonexistent.json"}).status == 2);
  // Typed domain error: a non-canonical singularity.
  const Invocation notCanonical = invoke({"brieskorn", "--exponents", "2,3"});
  CHECK(notCanonical.status == 3);
  CHECK(notCanonical.err.find("NotCanonical") != std::string::npos);
}

TEST_CASE("series and verify work on expression files") {
  const Invocation example = invoke({"example53"});
  REQUIRE(example.status == 0);
  const std::string est = lineValue(example.out, "E_st = ");
  REQUIRE(!est.empty());
  TempFile file("est.txt", est + "\n");

  const Invocation series =
      invoke({"series", "--input", file.path(), "--max-degree", "6"});
  CHECK(series.status == 0);
  CHECK(lineValue(series.out, "b[3,3] = ") == "-3");
  CHECK(lineValue(series.out, "b[0,0] = ") == "1");

  const Invocation verify = invoke({"verify", "--input", file.path(), "--dim", "6"});
  CHECK(verify.status == 0);
  CHECK(lineValue(verify.out, "duality: ") == "pass");
  CHECK(lineValue(verify.out, "E(0,0) = 1: ") == "pass");
}

TEST_CASE("resolution subcommand evaluates the bundled fixtures") {
  const std::string fixture = std::string(STRINGY_FIXTURE_DIR) + "/big_diagram.json";
  const Invocation r = invoke({"resolution", "--input", fixture, "--contribution"});
  REQUIRE(r.status == 0);
  const StringyRational c = parseStringyRational(lineValue(r.out, "contribution = "));
  CHECK(crossEqual(c, example::contributionATranscription()));

  // Full-variety data is required without --contribution.
  const Invocation wrongMode = invoke({"resolution", "--input", fixture});
  CHECK(wrongMode.status == 2);
}

TEST_CASE("quasihom prints the worked Hodge-Deligne polynomial") {
  const Invocation r = invoke({"quasihom", "--weights", "1,1", "--degree", "5"});
  CHECK(r.status == 0);
  CHECK(r.out == "5*u*v - 4\n");
}
