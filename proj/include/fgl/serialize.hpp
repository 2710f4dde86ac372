#pragma once

#include <functional>
#include <memory>
#include <string>

#include <json.hpp>

#include "fgl/subshift.hpp"
#include "fgl/wobbling.hpp"

namespace fgl {

using ordered_json = nlohmann::ordered_json;

// Kind-tagged description of a map backend:
//   {"kind":"table","entries":[[a,b],...]}
//   {"kind":"shift","by":d}
//   {"kind":"compose","outer":{...},"inner":{...}}
//   {"kind":"inverse","of":{...}}
//   {"kind":"subshift","system":label,"radius":R,"bound":B,"rule":{word:e}}
// Subshift-backed maps need a labeled system.
ordered_json map_to_json(const WobblingMap& g);

// Resolves the system label of a "subshift" node during deserialization.
using SystemResolver =
    std::function<std::shared_ptr<const SubshiftSystem>(const std::string&)>;

WobblingMap map_from_json(const ordered_json& doc,
                          const SystemResolver& resolve);

// Shared instance of a named builtin system ("fibonacci" or "thue_morse"),
// labeled with its name. Construction is cached; not thread-safe.
std::shared_ptr<const SubshiftSystem> builtin_system(const std::string& name);

}  // namespace fgl
