#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fgl/fullgroup.hpp"
#include "fgl/serialize.hpp"

namespace fgl {

// Element mini-language:
//   identity            the identity map
//   shift               translation by one
//   shift:<d>           translation by d
//   pair:<a>,<b>        transposition of two integers
//   table:<a>><b>,...   finite permutation given pointwise
//   swap:<word>         embedded cylinder involution of the word
//   comm:<w1>,<w2>      embedded commutator of two cylinder involutions
// The last two read the orbit of the supplied system.
WobblingMap parse_element(const std::string& spec,
                          const std::shared_ptr<const SubshiftSystem>& sys);

// Rule-level variant for specs that name full-group elements
// (identity, constant:<k>, swap:<word>, comm:<w1>,<w2>).
LocalRuleElement parse_full_element(
    const std::string& spec, const std::shared_ptr<const SubshiftSystem>& sys);

// The reference family: shift, the two one-letter-block involutions, and one
// commutator with a long-block involution, embedded over the given system.
std::vector<std::pair<std::string, WobblingMap>> standard_pool(
    const std::shared_ptr<const SubshiftSystem>& sys);

// Full deterministic pipeline over the Fibonacci system: orbit data, density
// curves, lemma checks, measures and samples, twists, block certificates.
ordered_json run_report(std::uint64_t seed);

}  // namespace fgl
