#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>

#include "fgl/errors.hpp"
#include "fgl/subshift.hpp"
#include "fgl/wobbling.hpp"

namespace fgl {

// An element of the topological full group of a subshift: the homeomorphism
// q -> T^e q where the exponent e = rule[q[-R..R]] reads a radius-R window.
// Acting through the stored point, position j moves to evaluate(j).
struct LocalRuleElement {
  std::shared_ptr<const SubshiftSystem> system;
  std::int64_t radius = 0;
  // admissible ( 2*radius + 1 )-word -> exponent; total over the language
  std::map<std::string, std::int64_t> rule;
  std::int64_t exponent_bound = 0;

  std::int64_t exponent_at(std::int64_t j) const;
  std::int64_t evaluate(std::int64_t j) const {
    return j + exponent_at(j);
  }
};

LocalRuleElement identity_element(std::shared_ptr<const SubshiftSystem> sys);

// applies T^k everywhere (radius-0 constant rule)
LocalRuleElement constant_element(std::shared_ptr<const SubshiftSystem> sys,
                                  std::int64_t k);

// The involution acting as T on the cylinder of w at offset 0, as T^{-1} on
// the cylinder of w at offset -1, and as the identity elsewhere. Requires the
// two cylinders disjoint; the witness of an overlap is an admissible word of
// length |w|+1 that both starts and ends with w.
LocalRuleElement cylinder_swap(std::shared_ptr<const SubshiftSystem> sys,
                               const std::string& w);

// compose_elements(a, b) acts as a after b; the raw radius is
// max(R_b, R_a + exponent_bound_b), then the rule is shrunk when it does not
// depend on the outer letters.
LocalRuleElement compose_elements(const LocalRuleElement& a,
                                  const LocalRuleElement& b);

// Pointwise inverse with the same exponent bound.
LocalRuleElement invert_element(const LocalRuleElement& a);

// a b a^{-1} b^{-1}
LocalRuleElement commutator(const LocalRuleElement& a,
                            const LocalRuleElement& b);

LocalRuleElement element_power(const LocalRuleElement& a, std::int64_t k);

// true when every exponent is zero
bool is_identity_rule(const LocalRuleElement& a);

// true iff the rule is total over the admissible words of its width, carries
// no inadmissible entries, respects exponent_bound, and j -> evaluate(j) is
// injective on [-window, window].
bool verify_element(const LocalRuleElement& a, std::int64_t window);

bool same_action(const LocalRuleElement& a, const LocalRuleElement& b,
                 std::int64_t window);

namespace detail {

// Wobbling-map backend reading the subshift point through a local rule.
class SubshiftRuleNode final : public MapNode {
 public:
  SubshiftRuleNode(std::shared_ptr<const SubshiftSystem> sys,
                   std::int64_t radius,
                   std::map<std::string, std::int64_t> rule,
                   std::int64_t bound);
  std::int64_t apply(std::int64_t j) const override;
  NodeKind kind() const override { return NodeKind::LocalRule; }
  const std::shared_ptr<const SubshiftSystem>& system() const {
    return system_;
  }
  std::int64_t radius() const { return radius_; }
  const std::map<std::string, std::int64_t>& rule() const { return rule_; }

 private:
  std::shared_ptr<const SubshiftSystem> system_;
  std::int64_t radius_;
  std::map<std::string, std::int64_t> rule_;
};

}  // namespace detail

// The induced bounded-displacement bijection j -> j + rule(p[j-R..j+R]).
// Runs verify_element at `window` first and refuses unverified elements.
WobblingMap embed_pi_p(const LocalRuleElement& a, std::int64_t window = 1000);

}  // namespace fgl
