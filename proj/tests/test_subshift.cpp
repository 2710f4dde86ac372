#include <doctest.h>

#include <cstdlib>
#include <set>
#include <string>
#include <utility>

#include "fgl/subshift.hpp"

using namespace fgl;

namespace {

// independent check: collect factors by scanning a wide window of the orbit
std::set<std::string> scanned_factors(const SubshiftSystem& sys,
                                      std::size_t length,
                                      std::int64_t reach) {
  const std::string strip = sys.window(-reach, reach);
  std::set<std::string> out;
  for (std::size_t i = 0; i + length <= strip.size(); ++i) {
    out.insert(strip.substr(i, length));
  }
  return out;
}

}  // namespace

TEST_CASE("substitution basics") {
  const auto fib = Substitution::fibonacci();
  CHECK(fib.apply("0") == "01");
  CHECK(fib.apply("1") == "0");
  CHECK(fib.apply("01") == "010");
  CHECK(fib.apply_power("0", 5) == "0100101001001");
  CHECK(fib.is_expanding());
  CHECK(fib.is_primitive());
  CHECK_NOTHROW(fib.validate());

  const auto tm = Substitution::thue_morse();
  CHECK(tm.apply("0") == "01");
  CHECK(tm.apply("1") == "10");
  CHECK(tm.apply_power("0", 3) == "01101001");
}

TEST_CASE("substitution validation rejects degenerate inputs") {
  const Substitution empty{"", {}};
  const Substitution repeated{"00", {{'0', "00"}}};
  const Substitution incomplete{"01", {{'0', "01"}}};
  const Substitution foreign{"01", {{'0', "0x"}, {'1', "0"}}};
  const Substitution nonexpanding{"01", {{'0', "0"}, {'1', "1"}}};
  const Substitution reducible{"01", {{'0', "00"}, {'1', "11"}}};
  const Substitution absorbing{"01", {{'0', "01"}, {'1', "1"}}};
  CHECK_THROWS_AS(empty.validate(), construction_error);
  CHECK_THROWS_AS(repeated.validate(), construction_error);
  CHECK_THROWS_AS(incomplete.validate(), construction_error);
  CHECK_THROWS_AS(foreign.validate(), construction_error);
  CHECK_THROWS_AS(nonexpanding.validate(), construction_error);
  CHECK_THROWS_AS(reducible.validate(), construction_error);
  CHECK_FALSE(reducible.is_primitive());
  CHECK_FALSE(absorbing.is_primitive());
}

TEST_CASE("fixed point of the golden-ratio substitution") {
  const auto sys =
      SubshiftSystem::fixed_point(Substitution::fibonacci(), {'0', '1'});
  CHECK(sys->power() == 2);
  CHECK(sys->window(0, 7) == "01001010");
  CHECK(sys->window(0, 20) == "010010100100101001010");
  CHECK(sys->window(-5, -1) == "01001");
  CHECK(sys->window(-13, -1) == "0100101001001");
  CHECK(sys->symbol(0) == '0');
  CHECK(sys->symbol(-1) == '1');
}

TEST_CASE("fixed point of the parity substitution") {
  const auto sys =
      SubshiftSystem::fixed_point(Substitution::thue_morse(), {'0', '1'});
  CHECK(sys->power() == 2);
  CHECK(sys->window(0, 7) == "01101001");
  CHECK(sys->symbol(-1) == '1');
}

TEST_CASE("admissible-word tables") {
  const auto fib =
      SubshiftSystem::fixed_point(Substitution::fibonacci(), {'0', '1'});
  CHECK(fib->language(2).words == std::set<std::string>{"00", "01", "10"});
  // Sturmian complexity: exactly L + 1 words of each length L
  for (int length = 1; length <= 10; ++length) {
    CHECK(fib->language(length).words.size() ==
          static_cast<std::size_t>(length + 1));
  }

  const auto tm =
      SubshiftSystem::fixed_point(Substitution::thue_morse(), {'0', '1'});
  CHECK(tm->language(2).words ==
        std::set<std::string>{"00", "01", "10", "11"});
  CHECK_FALSE(tm->language(3).contains("000"));
  CHECK_FALSE(tm->language(3).contains("111"));
}

TEST_CASE("language tables agree with a wide orbit scan") {
  const auto fib =
      SubshiftSystem::fixed_point(Substitution::fibonacci(), {'0', '1'});
  const auto tm =
      SubshiftSystem::fixed_point(Substitution::thue_morse(), {'0', '1'});
  for (int length = 1; length <= 8; ++length) {
    CHECK(fib->language(length).words == scanned_factors(*fib, length, 3000));
    CHECK(tm->language(length).words == scanned_factors(*tm, length, 3000));
  }
}

TEST_CASE("recurrence bounds") {
  const auto fib =
      SubshiftSystem::fixed_point(Substitution::fibonacci(), {'0', '1'});
  CHECK(fib->recurrence_bound(1, 1000) == 3);
  const auto tm =
      SubshiftSystem::fixed_point(Substitution::thue_morse(), {'0', '1'});
  CHECK(tm->recurrence_bound(1, 1000) <= 4);

  // every window of length R must contain every admissible word: check
  // directly on a strip, and check monotonicity in the word length
  std::int64_t previous = 0;
  for (int length = 1; length <= 6; ++length) {
    const auto bound = fib->recurrence_bound(length, 4000);
    CHECK(bound >= previous);
    previous = bound;
    const std::string strip = fib->window(-1200, 1200);
    for (const auto& word : fib->language(length).words) {
      for (std::size_t start = 0;
           start + static_cast<std::size_t>(bound) <= strip.size();
           start += 97) {
        CHECK(strip.substr(start, static_cast<std::size_t>(bound))
                  .find(word) != std::string::npos);
      }
    }
  }

  // horizon shorter than the word length is a usage error; a horizon that is
  // long enough to scan yet too short to recur is a witness failure
  CHECK_THROWS_AS(fib->recurrence_bound(6, 4), construction_error);
  CHECK_THROWS_AS(fib->recurrence_bound(6, 8), witness_error);
}

TEST_CASE("orbit horizon is enforced") {
  const auto sys = SubshiftSystem::fixed_point(Substitution::fibonacci(),
                                               {'0', '1'}, 256);
  CHECK(sys->max_horizon() == 256);
  CHECK_NOTHROW(sys->window(-200, 200));
  CHECK_THROWS_AS(sys->symbol(300), horizon_error);
  CHECK_THROWS_AS(sys->window(-400, 0), horizon_error);
  try {
    sys->symbol(1000);
    CHECK(false);
  } catch (const horizon_error& e) {
    CHECK(e.hi >= 1000);
  }
}

TEST_CASE("orbit horizon default picks up the environment override") {
  CHECK(SubshiftSystem::default_orbit_horizon() == (1 << 16));
  ::setenv("FGL_ORBIT_HORIZON", "1024", 1);
  CHECK(SubshiftSystem::default_orbit_horizon() == 1024);
  ::unsetenv("FGL_ORBIT_HORIZON");
  CHECK(SubshiftSystem::default_orbit_horizon() == (1 << 16));
}

TEST_CASE("seed validation") {
  const auto fib = Substitution::fibonacci();
  const std::pair<char, char> bad_pair{'1', '1'};
  const std::pair<char, char> bad_right{'1', '0'};
  CHECK_THROWS_AS(SubshiftSystem::fixed_point(fib, bad_pair),
                  construction_error);  // "11" is not admissible
  CHECK_THROWS_AS(SubshiftSystem::fixed_point(fib, bad_right),
                  construction_error);  // no image power starts with 1
  // a two-sided fixed point of a periodic substitution is rejected
  const Substitution periodic{"01", {{'0', "01"}, {'1', "01"}}};
  CHECK_NOTHROW(periodic.validate());
  const std::pair<char, char> seed{'0', '1'};
  CHECK_THROWS_AS(SubshiftSystem::fixed_point(periodic, seed),
                  construction_error);
}
