#include "doctest.h"
#include "json.hpp"
#include "x0calc/cli.hpp"

#include <sstream>

using x0calc::cli::run;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

nlohmann::ordered_json json_of(const std::vector<std::string>& args) {
  const Outcome o = call(args);
  REQUIRE(o.status == 0);
  return nlohmann::ordered_json::parse(o.out);
}

}  // namespace

TEST_CASE("invariants") {
  CHECK(call({"invariants", "1", "--format", "json"}).out == "{\"N\":1,\"psi\":1,\"nu2\":1,\"nu3\":1,\"cusps\":1,\"genus\":0}\n");
  const auto j = json_of({"invariants", "37", "--format", "json"});
  CHECK(j["genus"] == 2);
  CHECK(call({"invariants", "37"}).out.find("genus") != std::string::npos);
}

TEST_CASE("omega-eis") {
  const auto j = json_of({"omega-eis", "37", "--format", "json", "--precision", "8"});
  CHECK(j["symbolic"].dump() == "{\"KAPPA\":\"288/19\",\"LOG(37)\":\"-1/3\"}");
  CHECK(std::abs(j["numeric"].get<double>() - -4.342654535042629) < 1e-8);
  CHECK(j["decimal"] == "-4.34265454");
  CHECK(json_of({"omega-eis", "37", "--format", "json", "--convention", "orthogonal"})["symbolic"] == j["symbolic"]);
}

TEST_CASE("hecke") {
  const auto t = json_of({"hecke", "37", "--l", "2", "--format", "json"});
  CHECK(t["shift"] == "6/19*LOG(2)");
  CHECK(t["self_adjoint"] == true);
  CHECK(t["matrix"][0][1] == "6/19*LOG(2)");
  const auto w = json_of({"hecke", "35", "--d", "35", "--format", "json"});
  CHECK(w["matrix"][0][1].is_null());
  CHECK(w["self_adjoint"] == true);
}

TEST_CASE("gram, heegner, omega-f, verify-analysis") {
  CHECK(json_of({"gram", "37", "--format", "json"})["entries"][2][2] == "-12*LOG(37)");
  CHECK(json_of({"heegner", "37", "--disc", "-4", "--format", "json"})["roots"].dump() == "[12,62]");
  CHECK(json_of({"heegner", "143", "--format", "json"})["h_i"]["count"] == 0);
  const auto f = json_of({"omega-f", "--eigenform", std::string(X0CALC_TEST_DATA) + "/37a.jsonl", "--format", "json"});
  REQUIRE(f.size() == 1);
  CHECK(std::abs(f[0]["omega_f_sq"].get<double>() - -0.920005348319439124) < 1e-9);
  const Outcome v = call({"verify-analysis", "--radial", "64", "--angular", "128"});
  CHECK(v.status == 0);
  CHECK(v.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("exit codes") {
  struct Case {
    std::vector<std::string> args;
    int status;
    std::string error;
  };
  const std::vector<Case> cases = {
      {{"invariants", "12"}, 1, "NonSquarefree"},
      {{"omega-eis", "0"}, 1, "InvalidArgument"},
      {{"hecke", "37", "--l", "37"}, 1, "BadHeckePrime"},
      {{"hecke", "35", "--d", "3"}, 1, "BadInvolutionParam"},
      {{"heegner", "15", "--disc", "-4"}, 1, "LevelNotCoprimeTo6"},
      {{"omega-f", "--eigenform", "/nonexistent.jsonl"}, 1, "ParseError"},
      {{"omega-eis", "37", "--precision", "45"}, 2, ""},
      {{"invariants"}, 2, ""},
      {{"invariants", "x"}, 2, ""},
      {{"hecke", "37"}, 2, ""},
      {{"hecke", "37", "--l", "2", "--d", "37"}, 2, ""},
      {{"heegner", "37", "--disc", "-7"}, 2, ""},
      {{"gram", "37", "--format", "xml"}, 2, ""},
      {{"frobnicate"}, 2, ""},
      {{}, 2, ""},
  };
  for (const auto& c : cases) {
    const Outcome o = call(c.args);
    CAPTURE(o.err);
    CHECK(o.status == c.status);
    if (!c.error.empty()) CHECK(nlohmann::json::parse(o.err)["error"] == c.error);
  }
}

TEST_CASE("JSON reports round-trip byte-identically") {
  const std::vector<std::vector<std::string>> invocations = {
      {"invariants", "210", "--format", "json"},
      {"gram", "35", "--format", "json", "--precision", "12"},
      {"omega-eis", "143", "--format", "json"},
      {"hecke", "30", "--l", "7", "--format", "json"},
      {"heegner", "91", "--format", "json"},
  };
  for (const auto& args : invocations) {
    const Outcome o = call(args);
    REQUIRE(o.status == 0);
    const std::string body = o.out.substr(0, o.out.size() - 1);
    CHECK(nlohmann::ordered_json::parse(body).dump() == body);
  }
}
