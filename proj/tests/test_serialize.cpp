#include "fgl/serialize.hpp"

#include <doctest.h>

#include "fgl/fullgroup.hpp"

using fgl::builtin_system;
using fgl::map_from_json;
using fgl::map_to_json;
using fgl::ordered_json;
using fgl::WobblingMap;

namespace {

void check_same_action(const WobblingMap& a, const WobblingMap& b,
                       std::int64_t window) {
  for (std::int64_t j = -window; j <= window; ++j) CHECK(a(j) == b(j));
}

WobblingMap roundtrip(const WobblingMap& g) {
  return map_from_json(map_to_json(g), builtin_system);
}

}  // namespace

TEST_CASE("serialization roundtrips every node kind") {
  const auto sys = builtin_system("fibonacci");

  SUBCASE("table") {
    const auto g = WobblingMap::swap_pair(3, -4);
    const auto doc = map_to_json(g);
    CHECK(doc["kind"] == "table");
    const auto back = roundtrip(g);
    check_same_action(g, back, 20);
    CHECK(back.bound() == g.bound());
  }

  SUBCASE("identity is an empty table") {
    const auto back = roundtrip(WobblingMap::identity());
    check_same_action(WobblingMap::identity(), back, 20);
    CHECK(back.bound() == 0);
  }

  SUBCASE("shift") {
    const auto g = WobblingMap::shift(-5);
    const auto doc = map_to_json(g);
    CHECK(doc["kind"] == "shift");
    CHECK(doc["by"] == -5);
    check_same_action(g, roundtrip(g), 20);
  }

  SUBCASE("compose normalizes its inverse") {
    const auto g = fgl::compose(WobblingMap::shift(2),
                                WobblingMap::swap_pair(0, 1));
    const auto gi = fgl::invert(g);
    CHECK(map_to_json(g)["kind"] == "compose");
    CHECK(map_to_json(gi)["kind"] == "compose");
    check_same_action(g, roundtrip(g), 30);
    check_same_action(gi, roundtrip(gi), 30);
    CHECK(roundtrip(gi).bound() == gi.bound());
  }

  SUBCASE("inverse wraps a subshift rule") {
    const auto g = fgl::embed_pi_p(fgl::cylinder_swap(sys, "10100100"));
    const auto gi = fgl::invert(g);
    CHECK(map_to_json(gi)["kind"] == "inverse");
    check_same_action(gi, roundtrip(gi), 100);
    CHECK(roundtrip(gi).bound() == gi.bound());
  }

  SUBCASE("subshift rule") {
    const auto g = fgl::embed_pi_p(fgl::cylinder_swap(sys, "01"));
    const auto doc = map_to_json(g);
    CHECK(doc["kind"] == "subshift");
    CHECK(doc["system"] == "fibonacci");
    CHECK(doc["radius"] == 2);
    const auto back = map_from_json(doc, builtin_system);
    check_same_action(g, back, 200);
    CHECK(back.bound() == g.bound());
  }
}

TEST_CASE("serialization rejects bad input") {
  SUBCASE("unlabeled system cannot serialize") {
    auto anon = fgl::SubshiftSystem::fixed_point(
        fgl::Substitution::fibonacci(), {'0', '1'});
    const auto g = fgl::embed_pi_p(fgl::cylinder_swap(anon, "01"));
    CHECK_THROWS_AS(map_to_json(g), fgl::construction_error);
  }

  SUBCASE("unknown kind") {
    const ordered_json doc = {{"kind", "spiral"}};
    CHECK_THROWS_AS(map_from_json(doc, builtin_system),
                    fgl::construction_error);
  }

  SUBCASE("missing field") {
    const ordered_json doc = {{"kind", "shift"}};
    CHECK_THROWS_AS(map_from_json(doc, builtin_system),
                    fgl::construction_error);
  }

  SUBCASE("unknown system label") {
    ordered_json doc = map_to_json(
        fgl::embed_pi_p(fgl::cylinder_swap(builtin_system("fibonacci"), "01")));
    doc["system"] = "penrose";
    CHECK_THROWS_AS(map_from_json(doc, builtin_system),
                    fgl::construction_error);
  }

  SUBCASE("rule word width mismatch") {
    ordered_json doc = map_to_json(
        fgl::embed_pi_p(fgl::cylinder_swap(builtin_system("fibonacci"), "01")));
    ordered_json rule;
    rule["010"] = 1;
    doc["rule"] = rule;
    CHECK_THROWS_AS(map_from_json(doc, builtin_system),
                    fgl::construction_error);
  }
}

TEST_CASE("builtin systems are cached and labeled") {
  const auto a = builtin_system("fibonacci");
  const auto b = builtin_system("fibonacci");
  CHECK(a.get() == b.get());
  CHECK(a->label() == "fibonacci");
  const auto tm = builtin_system("thue_morse");
  CHECK(tm->label() == "thue_morse");
  CHECK(tm->window(0, 7) == "01101001");
  CHECK_THROWS_AS(builtin_system("penrose"), fgl::construction_error);
}
