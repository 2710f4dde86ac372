#include "fgl/fullgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_set>

namespace fgl {

namespace {

std::int64_t max_abs_exponent(const std::map<std::string, std::int64_t>& r) {
  std::int64_t b = 0;
  for (const auto& [w, e] : r) b = std::max(b, std::abs(e));
  return b;
}

void require_same_system(const LocalRuleElement& a, const LocalRuleElement& b) {
  if (a.system != b.system) {
    throw construction_error("elements act on different systems");
  }
}

void require_system(const std::shared_ptr<const SubshiftSystem>& sys) {
  if (!sys) throw construction_error("element needs a system");
}

// Strip outer letters while the exponent only depends on the inner window.
// Cores of admissible words are admissible, and every admissible word is the
// core of a longer one, so totality over the language is preserved.
void shrink_radius(LocalRuleElement& g) {
  while (g.radius > 0) {
    std::map<std::string, std::int64_t> shrunk;
    bool constant_on_cores = true;
    for (const auto& [w, e] : g.rule) {
      const auto [it, inserted] = shrunk.emplace(w.substr(1, w.size() - 2), e);
      if (!inserted && it->second != e) {
        constant_on_cores = false;
        break;
      }
    }
    if (!constant_on_cores) break;
    g.rule = std::move(shrunk);
    --g.radius;
  }
  g.exponent_bound = max_abs_exponent(g.rule);
}

std::int64_t rule_lookup(const LocalRuleElement& g, const std::string& w) {
  const auto it = g.rule.find(w);
  if (it == g.rule.end()) {
    throw witness_error("rule has no entry for window \"" + w + "\"");
  }
  return it->second;
}

}  // namespace

std::int64_t LocalRuleElement::exponent_at(std::int64_t j) const {
  require_system(system);
  return rule_lookup(*this, system->window(j - radius, j + radius));
}

LocalRuleElement identity_element(std::shared_ptr<const SubshiftSystem> sys) {
  return constant_element(std::move(sys), 0);
}

LocalRuleElement constant_element(std::shared_ptr<const SubshiftSystem> sys,
                                  std::int64_t k) {
  require_system(sys);
  LocalRuleElement g;
  g.system = std::move(sys);
  g.radius = 0;
  for (const auto& w : g.system->language(1).words) g.rule[w] = k;
  g.exponent_bound = std::abs(k);
  return g;
}

LocalRuleElement cylinder_swap(std::shared_ptr<const SubshiftSystem> sys,
                               const std::string& w) {
  require_system(sys);
  if (w.empty()) {
    throw construction_error("empty word names the whole space");
  }
  const auto L = static_cast<std::int64_t>(w.size());
  if (!sys->language(static_cast<int>(L)).contains(w)) {
    throw construction_error("word \"" + w + "\" is not admissible");
  }
  for (const auto& u : sys->language(static_cast<int>(L + 1)).words) {
    if (u.compare(0, w.size(), w) == 0 && u.compare(1, w.size(), w) == 0) {
      throw construction_error("cylinder overlaps its shift: \"" + u + "\"");
    }
  }
  LocalRuleElement g;
  g.system = std::move(sys);
  g.radius = L;
  for (const auto& W : g.system->language(static_cast<int>(2 * L + 1)).words) {
    std::int64_t e = 0;
    if (W.compare(static_cast<std::size_t>(L), w.size(), w) == 0) {
      e = 1;  // w sits at offset 0: step forward onto its shift
    } else if (W.compare(static_cast<std::size_t>(L - 1), w.size(), w) == 0) {
      e = -1;  // w sits at offset -1: step back
    }
    g.rule[W] = e;
  }
  g.exponent_bound = max_abs_exponent(g.rule);
  return g;
}

LocalRuleElement compose_elements(const LocalRuleElement& a,
                                  const LocalRuleElement& b) {
  require_system(a.system);
  require_same_system(a, b);
  LocalRuleElement g;
  g.system = a.system;
  g.radius = std::max(b.radius, a.radius + b.exponent_bound);
  const auto width = static_cast<int>(2 * g.radius + 1);
  for (const auto& W : g.system->language(width).words) {
    const std::int64_t eb = rule_lookup(
        b, W.substr(static_cast<std::size_t>(g.radius - b.radius),
                    static_cast<std::size_t>(2 * b.radius + 1)));
    const std::int64_t ea = rule_lookup(
        a, W.substr(static_cast<std::size_t>(g.radius + eb - a.radius),
                    static_cast<std::size_t>(2 * a.radius + 1)));
    g.rule[W] = eb + ea;
  }
  shrink_radius(g);
  return g;
}

LocalRuleElement invert_element(const LocalRuleElement& a) {
  require_system(a.system);
  LocalRuleElement g;
  g.system = a.system;
  g.radius = a.radius + a.exponent_bound;
  const auto width = static_cast<int>(2 * g.radius + 1);
  for (const auto& W : g.system->language(width).words) {
    // find the unique e with a moving the point e steps left of the center
    // onto the center
    std::int64_t preimage_exponent = 0;
    int matches = 0;
    for (std::int64_t e = -a.exponent_bound; e <= a.exponent_bound; ++e) {
      const auto sub =
          W.substr(static_cast<std::size_t>(g.radius - e - a.radius),
                   static_cast<std::size_t>(2 * a.radius + 1));
      if (rule_lookup(a, sub) == e) {
        preimage_exponent = e;
        ++matches;
      }
    }
    if (matches == 0) {
      throw bijectivity_error("no preimage near \"" + W + "\"");
    }
    if (matches > 1) {
      throw bijectivity_error("several preimages near \"" + W + "\"");
    }
    g.rule[W] = -preimage_exponent;
  }
  shrink_radius(g);
  return g;
}

LocalRuleElement commutator(const LocalRuleElement& a,
                            const LocalRuleElement& b) {
  return compose_elements(
      compose_elements(a, b),
      compose_elements(invert_element(a), invert_element(b)));
}

LocalRuleElement element_power(const LocalRuleElement& a, std::int64_t k) {
  require_system(a.system);
  if (k < 0) return invert_element(element_power(a, -k));
  LocalRuleElement g = identity_element(a.system);
  for (std::int64_t i = 0; i < k; ++i) g = compose_elements(a, g);
  return g;
}

bool is_identity_rule(const LocalRuleElement& a) {
  return std::all_of(a.rule.begin(), a.rule.end(),
                     [](const auto& kv) { return kv.second == 0; });
}

bool verify_element(const LocalRuleElement& a, std::int64_t window) {
  require_system(a.system);
  if (a.radius < 0 || a.exponent_bound < 0) return false;
  const auto width = static_cast<int>(2 * a.radius + 1);
  const auto& admissible = a.system->language(width).words;
  if (a.rule.size() != admissible.size()) return false;
  for (const auto& [w, e] : a.rule) {
    if (admissible.find(w) == admissible.end()) return false;
    if (std::abs(e) > a.exponent_bound) return false;
  }
  std::unordered_set<std::int64_t> images;
  for (std::int64_t j = -window; j <= window; ++j) {
    const auto it =
        a.rule.find(a.system->window(j - a.radius, j + a.radius));
    if (it == a.rule.end()) return false;
    if (!images.insert(j + it->second).second) return false;
  }
  return true;
}

bool same_action(const LocalRuleElement& a, const LocalRuleElement& b,
                 std::int64_t window) {
  require_same_system(a, b);
  for (std::int64_t j = -window; j <= window; ++j) {
    if (a.evaluate(j) != b.evaluate(j)) return false;
  }
  return true;
}

namespace detail {

SubshiftRuleNode::SubshiftRuleNode(std::shared_ptr<const SubshiftSystem> sys,
                                   std::int64_t radius,
                                   std::map<std::string, std::int64_t> rule,
                                   std::int64_t bound)
    : MapNode(bound),
      system_(std::move(sys)),
      radius_(radius),
      rule_(std::move(rule)) {}

std::int64_t SubshiftRuleNode::apply(std::int64_t j) const {
  const std::string w = system_->window(j - radius_, j + radius_);
  const auto it = rule_.find(w);
  if (it == rule_.end()) {
    throw witness_error("rule has no entry for window \"" + w + "\"");
  }
  return j + it->second;
}

}  // namespace detail

WobblingMap embed_pi_p(const LocalRuleElement& a, std::int64_t window) {
  if (!verify_element(a, window)) {
    throw witness_error("element failed verification on [-" +
                        std::to_string(window) + ", " +
                        std::to_string(window) + "]");
  }
  return WobblingMap::from_node(std::make_shared<detail::SubshiftRuleNode>(
      a.system, a.radius, a.rule, a.exponent_bound));
}

}  // namespace fgl
