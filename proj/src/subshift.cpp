#include "fgl/subshift.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

namespace fgl {
namespace {

constexpr int kMaxSeedPower = 24;
constexpr std::size_t kMaxLanguageWords = 4'000'000;

void collect_factors(std::set<std::string>& out, const std::string& w, int L) {
  if (static_cast<int>(w.size()) < L) return;
  for (std::size_t i = 0; i + L <= w.size(); ++i) out.insert(w.substr(i, L));
}

}  // namespace

Substitution Substitution::fibonacci() {
  return Substitution{"01", {{'0', "01"}, {'1', "0"}}};
}

Substitution Substitution::thue_morse() {
  return Substitution{"01", {{'0', "01"}, {'1', "10"}}};
}

void Substitution::validate() const {
  if (alphabet.empty()) throw construction_error("empty alphabet");
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (alphabet.find(alphabet[i], i + 1) != std::string::npos) {
      throw construction_error(std::string("duplicate symbol '") +
                               alphabet[i] + "'");
    }
  }
  for (char c : alphabet) {
    auto it = rules.find(c);
    if (it == rules.end() || it->second.empty()) {
      throw construction_error(std::string("no rule for symbol '") + c + "'");
    }
    for (char d : it->second) {
      if (alphabet.find(d) == std::string::npos) {
        throw construction_error(std::string("rule for '") + c +
                                 "' uses unknown symbol '" + d + "'");
      }
    }
  }
  for (const auto& [c, w] : rules) {
    (void)w;
    if (alphabet.find(c) == std::string::npos) {
      throw construction_error(std::string("rule for symbol '") + c +
                               "' outside the alphabet");
    }
  }
  if (!is_expanding()) {
    throw construction_error("substitution is not expanding");
  }
  if (!is_primitive()) {
    throw construction_error("substitution is not primitive");
  }
}

bool Substitution::is_expanding() const {
  for (const auto& [c, w] : rules) {
    (void)c;
    if (w.size() >= 2) return true;
  }
  return false;
}

bool Substitution::is_primitive() const {
  const int s = static_cast<int>(alphabet.size());
  std::vector<std::vector<bool>> reach(s, std::vector<bool>(s, false));
  for (int i = 0; i < s; ++i) {
    auto it = rules.find(alphabet[i]);
    if (it == rules.end()) return false;
    for (char d : it->second) {
      reach[i][static_cast<int>(alphabet.find(d))] = true;
    }
  }
  // Wielandt: a primitive matrix has a positive power within (s-1)^2 + 1
  auto positive = [&](const std::vector<std::vector<bool>>& m) {
    for (const auto& row : m)
      for (bool x : row)
        if (!x) return false;
    return true;
  };
  std::vector<std::vector<bool>> cur = reach;
  const int limit = (s - 1) * (s - 1) + 1;
  for (int step = 1; step <= limit; ++step) {
    if (positive(cur)) return true;
    std::vector<std::vector<bool>> next(s, std::vector<bool>(s, false));
    for (int i = 0; i < s; ++i)
      for (int k = 0; k < s; ++k)
        if (cur[i][k])
          for (int j = 0; j < s; ++j)
            if (reach[k][j]) next[i][j] = true;
    cur = std::move(next);
  }
  return positive(cur);
}

std::string Substitution::apply(const std::string& w) const {
  std::string out;
  out.reserve(w.size() * 2);
  for (char c : w) {
    auto it = rules.find(c);
    if (it == rules.end()) {
      throw construction_error(std::string("no rule for symbol '") + c + "'");
    }
    out += it->second;
  }
  return out;
}

std::string Substitution::apply_power(std::string w, int power) const {
  for (int i = 0; i < power; ++i) w = apply(w);
  return w;
}

LanguageTable compute_language(const Substitution& sub, int L) {
  if (L < 1) throw construction_error("language length must be >= 1");
  std::set<std::string> words;
  // seed with factors of iterated letter images, all levels until every image
  // is at least L long
  std::vector<std::string> level;
  level.reserve(sub.alphabet.size());
  for (char c : sub.alphabet) level.emplace_back(1, c);
  for (int iter = 0;; ++iter) {
    bool all_long = true;
    for (const auto& w : level) {
      collect_factors(words, w, L);
      if (static_cast<int>(w.size()) < L) all_long = false;
    }
    if (all_long) break;
    if (iter > 128) {
      throw construction_error("letter images fail to reach length " +
                               std::to_string(L));
    }
    for (auto& w : level) w = sub.apply(w);
  }
  // close under w -> length-L factors of apply(w)
  std::deque<std::string> queue(words.begin(), words.end());
  while (!queue.empty()) {
    const std::string w = std::move(queue.front());
    queue.pop_front();
    const std::string img = sub.apply(w);
    for (std::size_t i = 0; i + L <= img.size(); ++i) {
      auto [it, inserted] = words.insert(img.substr(i, L));
      if (inserted) queue.push_back(*it);
      if (words.size() > kMaxLanguageWords) {
        throw construction_error("language closure exceeded size cap");
      }
    }
  }
  LanguageTable table;
  table.length = L;
  table.words = std::move(words);
  return table;
}

std::int64_t SubshiftSystem::default_orbit_horizon() {
  if (const char* env = std::getenv("FGL_ORBIT_HORIZON")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return std::int64_t{1} << 16;
}

SubshiftSystem::SubshiftSystem(Substitution sub, std::pair<char, char> seed,
                               int power, std::int64_t max_horizon)
    : sub_(std::move(sub)),
      seed_(seed),
      power_(power),
      max_horizon_(max_horizon),
      right_(1, seed.first),
      left_(1, seed.second) {}

std::shared_ptr<SubshiftSystem> SubshiftSystem::fixed_point(
    Substitution sub, std::pair<char, char> seed, std::int64_t max_horizon) {
  sub.validate();
  if (max_horizon < 1) throw construction_error("max_horizon must be >= 1");
  if (sub.alphabet.size() < 2) {
    throw construction_error(
        "single-letter alphabet admits no aperiodic point");
  }
  const auto [a, b] = seed;
  if (sub.alphabet.find(a) == std::string::npos ||
      sub.alphabet.find(b) == std::string::npos) {
    throw construction_error("seed symbols outside the alphabet");
  }
  const LanguageTable two = compute_language(sub, 2);
  auto seed_power = [&](char right, char left) -> int {
    if (!two.contains(std::string{left, right})) return 0;
    for (int m = 1; m <= kMaxSeedPower; ++m) {
      const std::string ra = sub.apply_power(std::string(1, right), m);
      const std::string lb = sub.apply_power(std::string(1, left), m);
      if (ra.size() >= 2 && lb.size() >= 2 && ra.front() == right &&
          lb.back() == left) {
        return m;
      }
    }
    return 0;
  };
  const int m = seed_power(a, b);
  if (m == 0) {
    std::string valid;
    for (char ra : sub.alphabet) {
      for (char lb : sub.alphabet) {
        if (seed_power(ra, lb) > 0) {
          if (!valid.empty()) valid += ", ";
          valid += std::string("(") + ra + ", " + lb + ")";
        }
      }
    }
    throw construction_error(std::string("seed (") + a + ", " + b +
                             ") does not generate a fixed point; valid seeds: " +
                             (valid.empty() ? "none" : valid));
  }
  auto sys = std::shared_ptr<SubshiftSystem>(
      new SubshiftSystem(std::move(sub), seed, m, max_horizon));
  // empirical aperiodicity: some period q <= 64 would survive into this window
  const std::int64_t w = std::min<std::int64_t>(512, max_horizon - 1);
  const std::int64_t qmax = std::min<std::int64_t>(64, w);
  for (std::int64_t q = 1; q <= qmax; ++q) {
    bool periodic = true;
    for (std::int64_t j = -w; j + q <= w && periodic; ++j) {
      if (sys->symbol(j) != sys->symbol(j + q)) periodic = false;
    }
    if (periodic) {
      throw construction_error(
          "fixed point is periodic with period " + std::to_string(q) +
          " on the inspection window; no aperiodic point");
    }
  }
  return sys;
}

void SubshiftSystem::ensure(std::int64_t lo, std::int64_t hi) const {
  if (lo < -max_horizon_ || hi > max_horizon_) {
    throw horizon_error("window [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "] exceeds orbit horizon " +
                            std::to_string(max_horizon_),
                        lo, hi);
  }
  int guard = 0;
  while (static_cast<std::int64_t>(right_.size()) < hi + 1) {
    right_ = sub_.apply_power(right_, power_);
    if (++guard > 200) throw construction_error("right seed fails to grow");
  }
  guard = 0;
  while (static_cast<std::int64_t>(left_.size()) < -lo) {
    left_ = sub_.apply_power(left_, power_);
    if (++guard > 200) throw construction_error("left seed fails to grow");
  }
  // trim overshoot; prefixes of the right limit and suffixes of the left
  // limit regenerate identically
  const std::size_t cap = static_cast<std::size_t>(max_horizon_) + 1;
  if (right_.size() > cap) right_.resize(cap);
  if (left_.size() > cap) left_.erase(0, left_.size() - cap);
}

char SubshiftSystem::symbol(std::int64_t j) const {
  ensure(j, j);
  if (j >= 0) return right_[static_cast<std::size_t>(j)];
  return left_[left_.size() - static_cast<std::size_t>(-j)];
}

std::string SubshiftSystem::window(std::int64_t lo, std::int64_t hi) const {
  if (lo > hi) throw construction_error("window has lo > hi");
  ensure(lo, hi);
  std::string out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t j = lo; j <= hi; ++j) out += symbol(j);
  return out;
}

const LanguageTable& SubshiftSystem::language(int L) const {
  auto it = language_cache_.find(L);
  if (it == language_cache_.end()) {
    it = language_cache_.emplace(L, compute_language(sub_, L)).first;
  }
  return it->second;
}

std::int64_t SubshiftSystem::recurrence_bound(int L,
                                              std::int64_t horizon) const {
  if (L < 1) throw construction_error("recurrence length must be >= 1");
  if (horizon < L) throw construction_error("horizon smaller than word length");
  const LanguageTable& lang = language(L);
  const std::string region = window(-horizon, horizon);
  const std::int64_t len = static_cast<std::int64_t>(region.size());
  std::map<std::string, std::vector<std::int64_t>> occurrences;
  for (const auto& w : lang.words) occurrences[w] = {};
  for (std::int64_t i = 0; i + L <= len; ++i) {
    auto it = occurrences.find(region.substr(static_cast<std::size_t>(i),
                                             static_cast<std::size_t>(L)));
    if (it == occurrences.end()) {
      throw construction_error("generated point contains inadmissible word");
    }
    it->second.push_back(i);
  }
  std::int64_t R = L;
  for (const auto& [w, pos] : occurrences) {
    if (pos.empty()) {
      throw witness_error("word \"" + w +
                          "\" does not occur within the horizon; recurrence "
                          "not witnessed");
    }
    R = std::max(R, pos.front() + L);           // earliest window at the left edge
    R = std::max(R, len - pos.back());          // latest window at the right edge
    for (std::size_t i = 1; i < pos.size(); ++i) {
      R = std::max(R, pos[i] - pos[i - 1] - 1 + L);
    }
  }
  if (R > horizon) {
    throw witness_error("least covering radius " + std::to_string(R) +
                        " exceeds horizon " + std::to_string(horizon) +
                        "; recurrence not witnessed");
  }
  return R;
}

}  // namespace fgl
