#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "aqar/cli.hpp"
#include "aqar/error.hpp"
#include "aqar/report.hpp"

using namespace aqar;

namespace {

struct Run {
  int code;
  std::string out, err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "aqar");
  std::vector<const char *> argv;
  for (const auto &a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const nlohmann::json *find_claim(const nlohmann::json &report, std::string_view id) {
  for (const auto &c : report["claims"])
    if (c["claim_id"] == id) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("census subcommand") {
  const auto r = invoke({"census", "--p", "3", "--q", "2", "--r", "5", "--alpha", "1", "--beta", "1", "--gamma", "0"});
  CHECK(r.code == 0);
  const auto j = r.json();
  CHECK(j["results"]["count"] == 2);
  CHECK(j["bound_checks"][0]["verdict"] == "LE");
  REQUIRE(find_claim(j, "census-bound"));
  CHECK((*find_claim(j, "census-bound"))["status"] == "verified");
  CHECK((*find_claim(j, "census-sylow-system"))["status"] == "verified");
  CHECK_FALSE(j.contains("timing"));
  const auto seeded = invoke({"--seed", "9", "census", "--p", "3", "--q", "2", "--r", "5", "--alpha", "1", "--beta", "1",
                           "--gamma", "1", "--reverse"});
  CHECK(seeded.code == 0);
  CHECK(seeded.json()["results"]["count"] == 2);
}

TEST_CASE("construct and verify primitive groups") {
  const auto path = (std::filesystem::temp_directory_path() / "aqar_test_group.json").string();
  const auto r = invoke({"construct-primitive", "--q", "2", "--r", "7", "--output", path});
  CHECK(r.code == 0);
  const auto j = r.json();
  CHECK(j["results"]["degree"] == 8);
  CHECK(j["results"]["order"] == "56");
  CHECK(j["results"]["provenance"]["theorem"] == "B");
  CHECK((*find_claim(j, "primitive-single-class"))["status"] == "verified");
  CHECK((*find_claim(j, "primitive-affine-order"))["status"] == "verified");

  const auto v = invoke({"verify-primitive", "--input", path, "--q", "2", "--r", "7"});
  CHECK(v.code == 0);
  CHECK((*find_claim(v.json(), "primitive-minimal-normal"))["status"] == "verified");

  std::ofstream(path) << R"({"degree": 4, "generators": [[2, 1, 3, 4], [1, 2, 4, 3]]})";
  const auto bad = invoke({"verify-primitive", "--input", path, "--q", "2", "--r", "3"});
  CHECK(bad.code == 1);
  CHECK(bad.json()["error"]["code"] == "NotPrimitive");
  CHECK_FALSE(bad.err.empty());
  std::filesystem::remove(path);
}

TEST_CASE("classify-gl records the known discrepancy") {
  const auto r = invoke({"classify-gl", "--alpha", "3", "--s", "2", "--r", "3"});
  CHECK(r.code == 0);
  const auto j = r.json();
  CHECK(j["results"]["classes"] == 1);
  const auto *claim = find_claim(j, "gl-elementary-abelian-absent-when-order-not-dividing");
  REQUIRE(claim);
  CHECK((*claim)["status"] == "violated");
  CHECK((*claim)["known_discrepancy"] == true);
  CHECK((*claim)["witness"]["order"] == "3");

  const auto plain = invoke({"classify-gl", "--alpha", "2", "--s", "3", "--r", "2"});
  CHECK(plain.code == 0);
  CHECK_FALSE(find_claim(plain.json(), "gl-elementary-abelian-absent-when-order-not-dividing"));
  CHECK(invoke({"classify-gl", "--alpha", "2", "--s", "6", "--r", "5"}).code == 1);
}

TEST_CASE("check-bounds") {
  auto r = invoke({"check-bounds", "--formula", "transitive-classes", "--n", "4", "--count", "884737"});
  CHECK(r.code == 0);
  CHECK(r.json()["results"]["comparison"]["verdict"] == "GT");
  CHECK(r.json()["results"]["bound"]["exact"] == "884736");
  r = invoke({"check-bounds", "--formula", "census", "--p", "2", "--q", "3", "--r", "5", "--alpha", "1"});
  CHECK(r.json()["results"]["bound"]["exact"] == "384");
  r = invoke({"check-bounds"});
  CHECK(r.code == 0);
  CHECK((*find_claim(r.json(), "transitive-count-bound"))["status"] == "verified");
  CHECK((*find_claim(r.json(), "non-explicit-constant-bounds"))["status"] == "out_of_scope");
  CHECK(invoke({"check-bounds", "--formula", "linear-order", "--alpha", "1", "--q", "2", "--r", "3", "--s", "4"}).code == 1);
}

TEST_CASE("selftest scales and limits") {
  const auto quick = invoke({"selftest"});
  CHECK(quick.code == 0);
  const auto quick_json = quick.json();
  for (const auto &c : quick_json["claims"])
    if (c["claim_id"] != "non-explicit-constant-bounds") CHECK(c["status"] == "verified");
  const auto lowered = invoke({"--max-order", "10", "selftest", "--scale", "full"});
  CHECK(lowered.code == 0);
  bool skipped = false;
  const auto lowered_json = lowered.json();
  for (const auto &c : lowered_json["results"]["criteria"])
    for (const auto &i : c["items"]) skipped = skipped || i["status"] == "skip";
  CHECK(skipped);
}

TEST_CASE("reports are deterministic and text output works") {
  const std::vector<std::string> args{"classify-gl", "--alpha", "2", "--s", "2", "--r", "3"};
  CHECK(invoke(args).out == invoke(args).out);
  auto text = args;
  text.insert(text.begin(), {"--format", "text", "--timing"});
  const auto r = invoke(text);
  CHECK(r.out.find("claim gl-elementary-abelian-single-class: verified") != std::string::npos);
  CHECK(r.out.find("time total") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"census", "--p", "3"}).code == 1);
  CHECK(invoke({"frobnicate"}).code == 1);
  CHECK(invoke({"--format", "xml", "selftest"}).code == 1);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("claim registry") {
  report::TaskReport rep("t");
  CHECK_THROWS_AS(rep.add_claim("no-such-claim", report::ClaimStatus::Verified, ""), Error);
  CHECK_THROWS_AS(rep.add_claim("census-bound", report::ClaimStatus::Violated, "no witness"), Error);
  rep.add_claim("gl-elementary-abelian-absent-when-order-not-dividing", report::ClaimStatus::Violated, "", 1);
  CHECK(rep.exit_code() == 0);
  rep.add_claim("census-bound", report::ClaimStatus::Violated, "", 1);
  CHECK(rep.exit_code() == 2);
  for (const auto &c : report::claim_registry()) CHECK_FALSE(c.statement.empty());
}
