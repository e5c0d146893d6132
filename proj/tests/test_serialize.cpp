#include <doctest.h>

#include <json.hpp>

#include "tkg/expr.hpp"
#include "tkg/genus.hpp"
#include "tkg/serialize.hpp"
#include "tkg/signature.hpp"
#include "tkg/stable.hpp"
#include "tkg/upsilon.hpp"

using namespace tkg;
using nlohmann::json;

TEST_CASE("rationals serialize as exact strings without a unit denominator") {
  CHECK(rational_json(Rational(4)) == json("4"));
  CHECK(rational_json(Rational(-7, 3)) == json("-7/3"));
  CHECK(rational_json(Rational(8, 2)) == json("4"));
  CHECK(rational_json(Rational(0)) == json("0"));
}

TEST_CASE("step functions serialize initial value and jump list") {
  const json j = step_json(sig_torus(2, 5));
  CHECK(j["initial"] == 0);
  REQUIRE(j["jumps"].size() == 2);
  CHECK(j["jumps"][0]["t"] == "1/5");
  CHECK(j["jumps"][0]["delta"] == -2);
  CHECK(j["jumps"][1]["t"] == "3/5");
}

TEST_CASE("piecewise linear functions serialize their knots exactly") {
  const json j = pl_json(upsilon_torus(3, 4));
  REQUIRE(j["points"].size() == 3);
  CHECK(j["points"][1]["t"] == "2/3");
  CHECK(j["points"][1]["y"] == "-2");
  CHECK(j["points"][2]["y"] == "-2");
}

TEST_CASE("semigroups and staircases serialize with exact corner data") {
  CHECK(semigroup_json(semigroup(3, 5)) == json({0, 3, 5, 6, 8}));
  const json j = staircase_json(staircase(semigroup(3, 5)));
  REQUIRE(j["points"].size() == 8);
  CHECK(j["points"][0]["x"] == 0);
  CHECK(j["points"][0]["y"] == "4");
  CHECK(j["points"][7]["x"] == 4);
  CHECK(j["points"][7]["y"] == "0");
}

TEST_CASE("bound reports carry certificates and sorted keys") {
  const BoundReport rep = g4_exact(parse_combination("T(3,4)-T(3,8)"));
  const json j = report_json(rep);
  CHECK(j["expression"] == "T(3,4) - T(3,8)");
  CHECK(j["lower"] == "4");
  CHECK(j["upper"] == "4");
  CHECK(j["exact"] == true);
  CHECK(j["upper_detail"]["method"] == "excision");
  CHECK(j["upper_detail"]["excision"]["guest"] == "T(3,4)");
  CHECK(j["lower_detail"]["upsilon_ratio"] == "4");
  const std::string dumped = j.dump();
  CHECK(dumped.find("\"exact\"") < dumped.find("\"expression\""));
  CHECK(dumped.find("\"expression\"") < dumped.find("\"lower\""));
}

TEST_CASE("csv emitters produce header plus exact rows") {
  CHECK(csv_step(sig_torus(2, 3)) == "t,delta\n1/3,-2\n");
  CHECK(csv_pl(upsilon_torus(2, 3)) == "t,y\n0,0\n1,-1\n");
  const std::string stairs = csv_staircase(staircase(semigroup(3, 5)));
  CHECK(stairs.substr(0, 4) == "x,y\n");
  CHECK(stairs.find("4,0\n") != std::string::npos);
}

TEST_CASE("profile csv includes the crossing row") {
  const StableProfile prof = stable_profile(parse_combination("T(3,4)"),
                                            parse_combination("T(3,8)"));
  const std::string csv = csv_profile(prof);
  CHECK(csv.rfind("t,sigma_bound,upsilon_bound\n", 0) == 0);
  CHECK(csv.find("\n2/3,1/3,1/3\n") != std::string::npos);
}

TEST_CASE("svg output is a standalone drawing with polyline vertices") {
  const std::string svg = svg_pl(upsilon_torus(3, 4));
  CHECK(svg.find("<svg xmlns=") == 0);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
  CHECK(svg_step(sig_torus(2, 3)).find("<polyline") != std::string::npos);
  const StableProfile prof = stable_profile(parse_combination("T(3,4)"),
                                            parse_combination("T(3,8)"));
  const std::string two = svg_profile(prof);
  CHECK(two.find("#222222") != std::string::npos);
  CHECK(two.find("#c62828") != std::string::npos);
}

TEST_CASE("serialization output is byte-stable across calls") {
  const auto once = report_json(g4_exact(parse_combination("2*T(3,4)-T(3,8)"))).dump(2);
  const auto twice = report_json(g4_exact(parse_combination("2*T(3,4)-T(3,8)"))).dump(2);
  CHECK(once == twice);
}
