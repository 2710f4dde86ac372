#include "fgl/report.hpp"

#include <doctest.h>

#include "fgl/fullgroup.hpp"

using fgl::builtin_system;
using fgl::parse_element;
using fgl::parse_full_element;
using fgl::WobblingMap;

TEST_CASE("element specs parse to the maps they name") {
  const auto sys = builtin_system("fibonacci");

  SUBCASE("plain wobbling forms") {
    CHECK(parse_element("identity", nullptr)(5) == 5);
    CHECK(parse_element("shift", nullptr)(0) == 1);
    CHECK(parse_element("shift:-3", nullptr)(0) == -3);
    const auto swapped = parse_element("pair:2,7", nullptr);
    CHECK(swapped(2) == 7);
    CHECK(swapped(7) == 2);
    CHECK(swapped(3) == 3);
    const auto cycle = parse_element("table:0>1,1>4,4>0", nullptr);
    CHECK(cycle(0) == 1);
    CHECK(cycle(1) == 4);
    CHECK(cycle(4) == 0);
  }

  SUBCASE("embedded forms match manual construction") {
    const auto g = parse_element("swap:01", sys);
    const auto manual = fgl::embed_pi_p(fgl::cylinder_swap(sys, "01"));
    for (std::int64_t j = -60; j <= 60; ++j) CHECK(g(j) == manual(j));
    const auto c = parse_element("comm:01,10100100", sys);
    const auto cm = fgl::embed_pi_p(fgl::commutator(
        fgl::cylinder_swap(sys, "01"), fgl::cylinder_swap(sys, "10100100")));
    for (std::int64_t j = -60; j <= 60; ++j) CHECK(c(j) == cm(j));
  }

  SUBCASE("bad specs are rejected") {
    CHECK_THROWS_AS(parse_element("spiral", nullptr),
                    fgl::construction_error);
    CHECK_THROWS_AS(parse_element("shift:x", nullptr),
                    fgl::construction_error);
    CHECK_THROWS_AS(parse_element("shift:2rest", nullptr),
                    fgl::construction_error);
    CHECK_THROWS_AS(parse_element("pair:1", nullptr),
                    fgl::construction_error);
    CHECK_THROWS_AS(parse_element("table:5", nullptr),
                    fgl::construction_error);
    CHECK_THROWS_AS(parse_element("swap:01", nullptr),
                    fgl::construction_error);
    CHECK_THROWS_AS(parse_element("identity:3", nullptr),
                    fgl::construction_error);
  }

  SUBCASE("full-group specs") {
    CHECK(fgl::is_identity_rule(parse_full_element("identity", sys)));
    const auto two = parse_full_element("constant:2", sys);
    CHECK(two.evaluate(0) == 2);
    CHECK(two.evaluate(5) == 7);
    const auto sw = parse_full_element("swap:10", sys);
    CHECK(fgl::same_action(sw, fgl::cylinder_swap(sys, "10"), 100));
    CHECK_THROWS_AS(parse_full_element("comm:01", sys),
                    fgl::construction_error);
    CHECK_THROWS_AS(parse_full_element("pair:0,1", sys),
                    fgl::construction_error);
  }
}

TEST_CASE("standard pool composition") {
  const auto sys = builtin_system("fibonacci");
  const auto pool = fgl::standard_pool(sys);
  REQUIRE(pool.size() == 4);
  CHECK(pool[0].first == "shift");
  CHECK(pool[1].first == "swap:01");
  CHECK(pool[2].first == "swap:10");
  CHECK(pool[3].first == "comm:01,10100100");
  CHECK(pool[0].second(10) == 11);
}

TEST_CASE("report pipeline is deterministic in the seed") {
  const auto a = fgl::run_report(7);
  const auto b = fgl::run_report(7);
  CHECK(a.dump() == b.dump());

  const auto c = fgl::run_report(8);
  CHECK(a.dump() != c.dump());
  CHECK(a["schema"] == "fgl-report-1");
  CHECK(a["seed"] == 7);
  CHECK(c["seed"] == 8);

  // only the sampled sections may move with the seed
  CHECK(a["density"] == c["density"]);
  CHECK(a["blocks"] == c["blocks"]);

  REQUIRE(a["blocks"].size() == 2);
  CHECK(a["blocks"][0]["group_order"] == 4);
  CHECK(a["blocks"][1]["group_order"] == 4);
  CHECK(a["blocks"][0]["order_divides_factorials"] == true);
  CHECK(a["measures"]["samples"].size() == 5);
  for (const auto& row : a["density"]["curves"]) {
    CHECK(row["correlation_error"].get<double>() <= 1e-9);
  }
}
