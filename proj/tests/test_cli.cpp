#include "urn/cli.hpp"

#include "urn/rational.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  json record() const { return json::parse(out); }
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = urn::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

json term(unsigned k, unsigned l, const char* c) { return {{"k", k}, {"l", l}, {"coeff", c}}; }

// Every string under a "coeff"/"count"/"p" key must parse back to the same text.
void check_fraction_strings(const json& j) {
  if (j.is_object()) {
    for (const auto& [key, v] : j.items()) {
      if ((key == "coeff" || key == "count" || key == "p") && v.is_string()) {
        const auto q = urn::parse_rational(v.get<std::string>());
        CHECK(urn::to_string(q) == v.get<std::string>());
        CHECK(q.get_den() > 0);
      } else {
        check_fraction_strings(v);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) check_fraction_strings(v);
  }
}

}  // namespace

TEST_CASE("cli normal-order") {
  auto r = run({"normal-order", "D X"});
  REQUIRE(r.code == 0);
  json rec = r.record();
  CHECK(rec["schema_version"] == "1");
  CHECK(rec["command"]["name"] == "normal-order");
  CHECK(rec["result"]["terms"] == json::array({term(1, 1, "1"), term(0, 0, "1")}));

  r = run({"normal-order", ""});
  REQUIRE(r.code == 0);
  CHECK(r.record()["result"]["terms"] == json::array());

  r = run({"normal-order", "D^2 X^2"});
  CHECK(r.record()["result"]["terms"] == json::array({term(2, 2, "1"), term(1, 1, "4"), term(0, 0, "2")}));

  r = run({"normal-order", "D^2 X^2", "--format", "csv"});
  CHECK(r.out == "k,l,coeff\n2,2,1\n1,1,4\n0,0,2\n");

  r = run({"normal-order", "-"}, "1/2 D X\n");
  CHECK(r.record()["result"]["terms"] == json::array({term(1, 1, "1/2"), term(0, 0, "1/2")}));
}

TEST_CASE("cli parse errors") {
  auto r = run({"normal-order", "X ^"});
  CHECK(r.code == urn::cli::kParseError);
  CHECK(r.record()["error"]["kind"] == "syntax");
  CHECK(r.record()["error"]["position"] == 3);
  CHECK(r.err.find("position 3") != std::string::npos);

  r = run({"normal-order", "X + -D"});
  CHECK(r.code == urn::cli::kParseError);
  CHECK(r.record()["error"]["kind"] == "negative_coefficient");

  CHECK(run({"bogus"}).code == urn::cli::kParseError);
  CHECK(run({"histories", "X"}).code == urn::cli::kParseError);
  CHECK(run({"histories", "X", "-n", "1", "-l", "4:2"}).code == urn::cli::kParseError);
  CHECK(run({"oscillator", "-g", "x"}).code == urn::cli::kParseError);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli histories") {
  auto r = run({"histories", "D X", "-n", "1", "-l", "3"});
  REQUIRE(r.code == 0);
  json rows = r.record()["result"]["rows"];
  CHECK(rows == json::parse(R"([{"l":3,"counts":[{"k":3,"count":"4"}]}])"));

  r = run({"histories", "X", "-n", "5", "-l", "0"});
  CHECK(r.record()["result"]["rows"] == json::parse(R"([{"l":0,"counts":[{"k":5,"count":"1"}]}])"));

  r = run({"histories", "X D + X", "-n", "1", "-l", "2"});
  CHECK(r.record()["result"]["rows"] ==
        json::parse(R"([{"l":2,"counts":[{"k":2,"count":"2"},{"k":3,"count":"1"}]}])"));

  r = run({"histories", "X D + X", "-n", "2", "-l", "0:3", "--oracle"});
  REQUIRE(r.code == 0);
  CHECK(r.record()["result"]["oracle"]["agreement"] == true);
  CHECK(r.record()["result"]["rows"].size() == 4);

  r = run({"histories", "X D + 1/2 X + 1/2 D", "-n", "2", "-l", "1", "--oracle"});
  REQUIRE(r.code == 0);
  CHECK(r.record()["result"]["oracle"]["scale"] == "2");

  r = run({"histories", "X D + 1/2 X", "-n", "1", "-l", "1", "--oracle", "--scale", "3"});
  CHECK(r.code == urn::cli::kDomainError);

  r = run({"histories", "3 D X + 2 X D", "-n", "4", "-l", "4", "--oracle", "--budget", "100"});
  CHECK(r.code == urn::cli::kBudgetExceeded);
  CHECK(r.record()["error"]["kind"] == "budget_exceeded");

  r = run({"histories", "X D + X", "-n", "1", "-l", "2", "--format", "csv"});
  CHECK(r.out == "l,k,count\n2,2,2\n2,3,1\n");
}

TEST_CASE("cli probabilities") {
  auto r = run({"probabilities", "X D + X", "-n", "1", "-l", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.record()["result"]["probs"] == json::parse(R"([{"k":2,"p":"2/3"},{"k":3,"p":"1/3"}])"));

  r = run({"probabilities", "X", "-n", "3", "-l", "1"});
  CHECK(r.record()["result"]["probs"] == json::parse(R"([{"k":4,"p":"1"}])"));

  r = run({"probabilities", "D", "-n", "1", "-l", "0"});
  CHECK(r.code == urn::cli::kDomainError);
  CHECK(r.record()["error"]["kind"] == "undefined_row");
}

TEST_CASE("cli series") {
  auto r = run({"series", "X D", "-N", "2"});
  REQUIRE(r.code == 0);
  json b = r.record()["result"]["B"];
  REQUIRE(b.size() == 3);
  CHECK(b[0]["poly"] == "1");
  CHECK(b[1]["poly"] == "x*y");
  CHECK(b[2]["poly"] == "x^2*y^2 + x*y");
  CHECK_FALSE(r.record()["result"].contains("residual_zero"));

  r = run({"series", "X D", "-N", "2", "--check-pde"});
  CHECK(r.record()["result"]["residual_zero"] == true);

  r = run({"series", "", "-N", "3"});
  b = r.record()["result"]["B"];
  REQUIRE(b.size() == 4);
  CHECK(b[0]["poly"] == "1");
  for (int n = 1; n <= 3; ++n) CHECK(b[n]["terms"] == json::array());

  r = run({"series", "X D", "-N", "1", "--dx", "3", "--dy", "3"});
  const json g = r.record()["result"]["G"];
  CHECK(std::find(g.begin(), g.end(), json{{"k", 3}, {"l", 3}, {"n", 1}, {"coeff", "1/2"}}) != g.end());
  check_fraction_strings(r.record());
}

TEST_CASE("cli oscillator") {
  for (auto args : {std::vector<std::string>{"oscillator", "-g", "0", "-N", "4"},
                    std::vector<std::string>{"oscillator", "-g", "1", "-N", "6"},
                    std::vector<std::string>{"oscillator", "-g", "1/2", "-N", "6"}}) {
    auto r = run(args);
    CHECK(r.code == 0);
    CHECK(r.record()["result"]["match"] == true);
    CHECK(r.record()["result"]["first_mismatch"].is_null());
  }
  CHECK(run({"oscillator", "--format", "csv"}).code == urn::cli::kParseError);
}

TEST_CASE("cli output is deterministic and lossless") {
  const std::vector<std::string> args{"series", "2 X^3 D + 5 X D^2 X", "-N", "3", "--dx", "6", "--dy", "6"};
  const auto a = run(args), b = run(args);
  CHECK(a.out == b.out);
  check_fraction_strings(a.record());
  check_fraction_strings(run({"histories", "X D + 1/3 D", "-n", "3", "-l", "0:4"}).record());
}
