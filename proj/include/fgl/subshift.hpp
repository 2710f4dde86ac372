#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fgl/errors.hpp"

namespace fgl {

// A substitution on a finite alphabet of single-character symbols.
struct Substitution {
  std::string alphabet;                // distinct symbols
  std::map<char, std::string> rules;   // symbol -> image word

  static Substitution fibonacci();     // 0 -> 01, 1 -> 0
  static Substitution thue_morse();    // 0 -> 01, 1 -> 10

  // Throws construction_error unless rules are total over the alphabet,
  // nonempty, alphabet-closed, expanding, and primitive.
  void validate() const;
  bool is_primitive() const;
  bool is_expanding() const;
  std::string apply(const std::string& w) const;
  std::string apply_power(std::string w, int power) const;
};

// Admissible words of one fixed length.
struct LanguageTable {
  int length = 0;
  std::set<std::string> words;
  bool contains(const std::string& w) const {
    return words.find(w) != words.end();
  }
};

// Exact set of admissible length-L words, computed by seeding with factors of
// iterated letter images and closing under w -> factors of apply(w).
LanguageTable compute_language(const Substitution& sub, int L);

// A two-sided fixed point p of a primitive substitution together with lazy
// orbit access. Symbol queries extend the internal buffers; extension never
// rewrites previously generated symbols. Not thread-safe: callers must
// serialize access.
class SubshiftSystem {
 public:
  // seed = (a, b): p[0] = a extends to the right, p[-1] = b extends to the
  // left, under the least power of the substitution that stabilizes both.
  static std::shared_ptr<SubshiftSystem> fixed_point(
      Substitution sub, std::pair<char, char> seed,
      std::int64_t max_horizon = default_orbit_horizon());

  char symbol(std::int64_t j) const;
  // inclusive window p[lo..hi]
  std::string window(std::int64_t lo, std::int64_t hi) const;
  const LanguageTable& language(int L) const;
  // Least R <= horizon such that every length-R window of p[-horizon..horizon]
  // contains every admissible length-L word; witness_error otherwise.
  std::int64_t recurrence_bound(int L, std::int64_t horizon) const;

  const Substitution& substitution() const { return sub_; }
  std::pair<char, char> seed() const { return seed_; }
  int power() const { return power_; }
  std::int64_t max_horizon() const { return max_horizon_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  // 1 << 16 unless overridden by the FGL_ORBIT_HORIZON environment variable.
  static std::int64_t default_orbit_horizon();

 private:
  SubshiftSystem(Substitution sub, std::pair<char, char> seed, int power,
                 std::int64_t max_horizon);
  void ensure(std::int64_t lo, std::int64_t hi) const;

  Substitution sub_;
  std::pair<char, char> seed_;
  int power_;
  std::int64_t max_horizon_;
  std::string label_;
  mutable std::string right_;  // p[0..len-1]
  mutable std::string left_;   // p[-len..-1], stored left to right
  mutable std::map<int, LanguageTable> language_cache_;
};

}  // namespace fgl
