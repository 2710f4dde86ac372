#include "fgl/serialize.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <utility>
#include <vector>

#include "fgl/fullgroup.hpp"

namespace fgl {

namespace {

ordered_json node_to_json(const detail::MapNode& node) {
  ordered_json doc;
  switch (node.kind()) {
    case detail::NodeKind::Table: {
      const auto& table = static_cast<const detail::TableNode&>(node);
      doc["kind"] = "table";
      auto entries = ordered_json::array();
      for (const auto& [from, to] : table.entries()) {
        entries.push_back(ordered_json::array({from, to}));
      }
      doc["entries"] = std::move(entries);
      return doc;
    }
    case detail::NodeKind::Shift: {
      const auto& shift = static_cast<const detail::ShiftNode&>(node);
      doc["kind"] = "shift";
      doc["by"] = shift.by();
      return doc;
    }
    case detail::NodeKind::Compose: {
      const auto& compose = static_cast<const detail::ComposeNode&>(node);
      doc["kind"] = "compose";
      doc["outer"] = node_to_json(*compose.outer());
      doc["inner"] = node_to_json(*compose.inner());
      return doc;
    }
    case detail::NodeKind::Inverse: {
      const auto& inverse = static_cast<const detail::InverseNode&>(node);
      doc["kind"] = "inverse";
      doc["of"] = node_to_json(*inverse.child());
      return doc;
    }
    case detail::NodeKind::LocalRule: {
      const auto& local = static_cast<const detail::SubshiftRuleNode&>(node);
      if (local.system()->label().empty()) {
        throw construction_error(
            "subshift-backed map needs a labeled system to serialize");
      }
      doc["kind"] = "subshift";
      doc["system"] = local.system()->label();
      doc["radius"] = local.radius();
      doc["bound"] = node.bound();
      ordered_json rule;
      for (const auto& [word, exponent] : local.rule()) {
        rule[word] = exponent;
      }
      doc["rule"] = std::move(rule);
      return doc;
    }
  }
  throw construction_error("unknown map backend kind");
}

const ordered_json& field(const ordered_json& doc, const char* name) {
  const auto hit = doc.find(name);
  if (hit == doc.end()) {
    throw construction_error(std::string("map description misses \"") + name +
                             "\"");
  }
  return *hit;
}

}  // namespace

ordered_json map_to_json(const WobblingMap& g) { return node_to_json(g.node()); }

WobblingMap map_from_json(const ordered_json& doc,
                          const SystemResolver& resolve) {
  const std::string kind = field(doc, "kind").get<std::string>();
  if (kind == "table") {
    std::vector<std::pair<std::int64_t, std::int64_t>> entries;
    for (const auto& pair : field(doc, "entries")) {
      if (!pair.is_array() || pair.size() != 2) {
        throw construction_error("table entry must be a pair");
      }
      entries.emplace_back(pair[0].get<std::int64_t>(),
                           pair[1].get<std::int64_t>());
    }
    return WobblingMap::table(std::move(entries));
  }
  if (kind == "shift") {
    return WobblingMap::shift(field(doc, "by").get<std::int64_t>());
  }
  if (kind == "compose") {
    return compose(map_from_json(field(doc, "outer"), resolve),
                   map_from_json(field(doc, "inner"), resolve));
  }
  if (kind == "inverse") {
    return invert(map_from_json(field(doc, "of"), resolve));
  }
  if (kind == "subshift") {
    if (!resolve) {
      throw construction_error("no system resolver for a subshift-backed map");
    }
    const std::string label = field(doc, "system").get<std::string>();
    auto system = resolve(label);
    if (!system) {
      throw construction_error("unknown system label \"" + label + "\"");
    }
    const std::int64_t radius = field(doc, "radius").get<std::int64_t>();
    if (radius < 0) throw construction_error("negative rule radius");
    std::map<std::string, std::int64_t> rule;
    std::int64_t bound = 0;
    for (const auto& [word, exponent] : field(doc, "rule").items()) {
      if (static_cast<std::int64_t>(word.size()) != 2 * radius + 1) {
        throw construction_error("rule word \"" + word +
                                 "\" does not match the radius");
      }
      const std::int64_t e = exponent.get<std::int64_t>();
      rule[word] = e;
      bound = std::max(bound, std::abs(e));
    }
    return WobblingMap::from_node(std::make_shared<detail::SubshiftRuleNode>(
        std::move(system), radius, std::move(rule), bound));
  }
  throw construction_error("unknown map kind \"" + kind + "\"");
}

std::shared_ptr<const SubshiftSystem> builtin_system(const std::string& name) {
  static std::map<std::string, std::shared_ptr<const SubshiftSystem>> cache;
  const auto hit = cache.find(name);
  if (hit != cache.end()) return hit->second;

  std::shared_ptr<SubshiftSystem> system;
  if (name == "fibonacci") {
    system = SubshiftSystem::fixed_point(Substitution::fibonacci(),
                                         {'0', '1'});
  } else if (name == "thue_morse") {
    system = SubshiftSystem::fixed_point(Substitution::thue_morse(),
                                         {'0', '1'});
  } else {
    throw construction_error("unknown system \"" + name +
                             "\" (expected fibonacci or thue_morse)");
  }
  system->set_label(name);
  cache.emplace(name, system);
  return system;
}

}  // namespace fgl
