#include <doctest.h>

#include <json.hpp>

#include <fstream>
#include <regex>
#include <sstream>

#include "fano/cli.hpp"

using fano::cli::run;
using Json = nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string without_version(const std::string& s) {
  static const std::regex version(R"("version": "[^"]*")");
  return std::regex_replace(s, version, R"("version": "")");
}

void check_golden(const std::vector<std::string>& args, const std::string& file) {
  const auto r = call(args);
  CHECK(r.code == 0);
  CHECK(without_version(r.out) == without_version(slurp(std::string(FANO_GOLDEN_DIR) + "/" + file)));
}

}  // namespace

TEST_CASE("golden outputs") {
  check_golden({"table", "--json"}, "table.json");
  check_golden({"c5", "g2p2", "--json"}, "c5_g2p2.json");
  check_golden({"wps-vanish", "--weights", "1,1,1,2,3", "--forms", "1", "--twist", "1", "--json"},
               "wps_vanish_11123.json");
}

TEST_CASE("documented values") {
  const auto table = Json::parse(call({"table", "--json"}).out);
  REQUIRE(table["rows"].size() == 18);
  for (const auto& row : table["rows"]) {
    CHECK(row["genus_check"].get<bool>());
    CHECK(row["all_checks_pass"].get<bool>());
  }
  CHECK(Json::parse(call({"c5", "g2p2", "--json"}).out)["value"] == 6);
  CHECK(Json::parse(call({"c5", "g2p1", "--json"}).out)["value"] == 6);
  CHECK(Json::parse(call({"c5", "quadric5", "--json"}).out)["value"] == 6);
  CHECK(Json::parse(call({"wps-vanish", "--weights", "1,1,1,2,3", "--json"}).out)["verdict"] ==
        "AllCohomologyVanishes");
  const auto k3 = Json::parse(call({"hrr-k3", "--json"}).out);
  CHECK(k3["chi_omega1_twist"] == 2);
  CHECK(k3["chi_line"] == 13);
  CHECK(Json::parse(call({"bott", "--n", "3", "--p", "1", "--k", "1", "--json"}).out)["h0"] == 0);
  CHECK(Json::parse(call({"check-row", "17", "--json"}).out)["h0"] == "1");
  CHECK(Json::parse(call({"check-row", "18", "--json"}).out)["h0"] == "3-general");
  CHECK(Json::parse(call({"mu", "wedge", "--json"}).out)["residual"] == "a d + b c");
  CHECK(Json::parse(call({"mu", "foliation", "--x", "h", "--y", "e", "--json"}).out)["verdict"] ==
        "FoliationEverywhere");
  CHECK(Json::parse(call({"mu", "equivariance", "--gamma", "2,1,1,1", "--json"}).out)["holds"] == true);
  const auto orbit = Json::parse(call({"mu", "orbit", "--json"}).out);
  CHECK(orbit["points"][0]["orbit_dimension"] == 1);
  CHECK(orbit["points"][1]["orbit_dimension"] == 2);
  CHECK(orbit["points"][2]["orbit_dimension"] == 3);
  const auto contact = Json::parse(call({"g2", "contact-check", "--json"}).out);
  CHECK(contact["dim_centralizer"] == 9);
  CHECK(contact["symplectic_rank"] == 4);
  CHECK(contact["grading_element"] == "1/2 * h1 + h2");
  CHECK(Json::parse(call({"schubert", "integrate", "--class", "x2^5 x1", "--json"}).out)["value"] == 18);
  CHECK(Json::parse(call({"schubert", "braid-check", "--type", "G2", "--json"}).out)["holds"] == true);
}

TEST_CASE("output is deterministic") {
  CHECK(call({"table", "--json"}).out == call({"table", "--json"}).out);
  CHECK(call({"schubert", "braid-check", "--json"}).out == call({"schubert", "braid-check", "--json"}).out);
}

TEST_CASE("every subcommand has help") {
  const std::vector<std::vector<std::string>> cmds{
      {"table"}, {"check-row"}, {"c5"}, {"hrr-k3"}, {"wps-vanish"}, {"bott"}, {"mu"}, {"mu", "wedge"},
      {"mu", "orbit"}, {"mu", "foliation"}, {"mu", "equivariance"}, {"g2"}, {"g2", "contact-check"},
      {"schubert"}, {"schubert", "integrate"}, {"schubert", "braid-check"}};
  for (auto args : cmds) {
    args.push_back("--help");
    const auto r = call(args);
    INFO(args.front());
    CHECK(r.code == 0);
    CHECK(r.out.find("Usage:") != std::string::npos);
  }
}

TEST_CASE("usage errors exit with 2") {
  CHECK(call({}).code == 2);
  CHECK(call({"table", "--bogus"}).code == 2);
  CHECK(call({"c5", "g2p3"}).code == 2);
  CHECK(call({"wps-vanish"}).code == 2);
  CHECK(call({"bott", "--n", "three"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
}

TEST_CASE("computation errors exit with 1 and a category") {
  const auto r = call({"check-row", "19", "--json"});
  CHECK(r.code == 1);
  CHECK(Json::parse(r.out)["error"]["category"] == "precondition");
  CHECK(r.err.find("precondition") != std::string::npos);
  CHECK(call({"mu", "equivariance", "--gamma", "2,1,1,2"}).code == 1);
  CHECK(call({"schubert", "integrate", "--class", "x1", "--word", "1,1,1,1,1,1"}).code == 1);
  CHECK(call({"hrr-k3", "--l2", "3"}).code == 1);
  CHECK(call({"mu", "wedge", "--x", "e", "--y", "2e"}).code == 1);
}
