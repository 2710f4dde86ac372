#include "fgl/report.hpp"

#include <cstdlib>
#include <set>
#include <stdexcept>

#include "fgl/density.hpp"
#include "fgl/meanlab.hpp"
#include "fgl/stabilizer.hpp"

namespace fgl {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t stop = text.find(sep, start);
    if (stop == std::string::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, stop - start));
    start = stop + 1;
  }
}

std::int64_t parse_int(const std::string& text) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw construction_error("bad integer \"" + text + "\" in element spec");
  }
  if (used != text.size()) {
    throw construction_error("bad integer \"" + text + "\" in element spec");
  }
  return value;
}

std::shared_ptr<const SubshiftSystem> require_system(
    const std::shared_ptr<const SubshiftSystem>& sys, const std::string& spec) {
  if (!sys) {
    throw construction_error("element \"" + spec +
                             "\" needs a subshift system");
  }
  return sys;
}

}  // namespace

WobblingMap parse_element(const std::string& spec,
                          const std::shared_ptr<const SubshiftSystem>& sys) {
  const std::size_t colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string tail =
      colon == std::string::npos ? std::string() : spec.substr(colon + 1);

  if (head == "identity" && tail.empty()) return WobblingMap::identity();
  if (head == "shift") {
    return WobblingMap::shift(tail.empty() ? 1 : parse_int(tail));
  }
  if (head == "pair") {
    const auto parts = split(tail, ',');
    if (parts.size() != 2) {
      throw construction_error("pair takes two integers: " + spec);
    }
    return WobblingMap::swap_pair(parse_int(parts[0]), parse_int(parts[1]));
  }
  if (head == "table") {
    std::vector<std::pair<std::int64_t, std::int64_t>> entries;
    for (const auto& part : split(tail, ',')) {
      const auto arrow = part.find('>');
      if (arrow == std::string::npos) {
        throw construction_error("table entries look like a>b: " + spec);
      }
      entries.emplace_back(parse_int(part.substr(0, arrow)),
                           parse_int(part.substr(arrow + 1)));
    }
    return WobblingMap::table(std::move(entries));
  }
  if (head == "swap" || head == "comm") {
    return embed_pi_p(parse_full_element(spec, require_system(sys, spec)));
  }
  throw construction_error("unknown element spec \"" + spec + "\"");
}

LocalRuleElement parse_full_element(
    const std::string& spec,
    const std::shared_ptr<const SubshiftSystem>& sys) {
  const std::size_t colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string tail =
      colon == std::string::npos ? std::string() : spec.substr(colon + 1);
  const auto system = require_system(sys, spec);

  if (head == "identity" && tail.empty()) return identity_element(system);
  if (head == "constant") return constant_element(system, parse_int(tail));
  if (head == "swap" && !tail.empty()) return cylinder_swap(system, tail);
  if (head == "comm") {
    const auto parts = split(tail, ',');
    if (parts.size() != 2 || parts[0].empty() || parts[1].empty()) {
      throw construction_error("comm takes two words: " + spec);
    }
    return commutator(cylinder_swap(system, parts[0]),
                      cylinder_swap(system, parts[1]));
  }
  throw construction_error("unknown full-group element spec \"" + spec +
                           "\"");
}

std::vector<std::pair<std::string, WobblingMap>> standard_pool(
    const std::shared_ptr<const SubshiftSystem>& sys) {
  std::vector<std::pair<std::string, WobblingMap>> pool;
  for (const std::string spec :
       {"shift", "swap:01", "swap:10", "comm:01,10100100"}) {
    pool.emplace_back(spec, parse_element(spec, sys));
  }
  return pool;
}

ordered_json run_report(std::uint64_t seed) {
  const auto sys = builtin_system("fibonacci");
  const auto pool = standard_pool(sys);

  ordered_json report;
  report["schema"] = "fgl-report-1";
  report["seed"] = seed;

  {
    ordered_json info;
    info["name"] = sys->label();
    info["power"] = sys->power();
    info["window"] = sys->window(-40, 40);
    ordered_json complexity = ordered_json::array();
    for (int length = 1; length <= 8; ++length) {
      complexity.push_back(sys->language(length).words.size());
    }
    info["complexity"] = std::move(complexity);
    info["recurrence"] = ordered_json::array();
    for (int length = 1; length <= 4; ++length) {
      info["recurrence"].push_back(sys->recurrence_bound(length, 2000));
    }
    report["system"] = std::move(info);
  }

  {
    ordered_json names = ordered_json::array();
    for (const auto& [name, g] : pool) {
      (void)g;
      names.push_back(name);
    }
    report["pool"] = std::move(names);
  }

  {
    ordered_json curves = ordered_json::array();
    for (const auto& [name, g] : pool) {
      for (const std::int64_t n : {4, 16, 64}) {
        const auto corr = correlation_ratio(n, g, 1e-9);
        const auto drift = F_n(n, g, 1e-9);
        ordered_json row;
        row["element"] = name;
        row["n"] = n;
        row["correlation"] = corr.value;
        row["correlation_error"] = corr.error_bound;
        row["fn"] = drift.value;
        row["fn_error"] = drift.error_bound;
        curves.push_back(std::move(row));
      }
    }
    report["density"]["curves"] = std::move(curves);

    ordered_json sums = ordered_json::array();
    for (const std::int64_t n : {1, 4, 16, 64}) {
      const auto sum = check_lemma_sum(n);
      ordered_json row;
      row["n"] = n;
      row["s1"] = sum.s1;
      row["s2"] = sum.s2;
      row["pass"] = sum.pass;
      sums.push_back(std::move(row));
    }
    report["density"]["lemma_sum"] = std::move(sums);

    std::vector<double> grid;
    const int points = 10001;
    for (int i = 0; i < points; ++i) {
      grid.push_back(-0.5 + 10.5 * static_cast<double>(i) /
                                static_cast<double>(points - 1));
    }
    const auto logs = check_log_inequality(grid);
    report["density"]["log_inequality"] = {
        {"points", points},
        {"worst_margin", logs.worst_margin},
        {"pass", logs.pass}};

    ordered_json abel = ordered_json::array();
    for (const auto& [name, g] : pool) {
      const auto eq = abel_check(g, 4, 200);
      ordered_json row;
      row["element"] = name;
      row["lhs"] = eq.lhs;
      row["rhs"] = eq.rhs;
      row["pass"] = eq.pass;
      abel.push_back(std::move(row));
    }
    report["density"]["abel"] = std::move(abel);
  }

  {
    ordered_json fourier = ordered_json::array();
    for (const std::int64_t n : {1, 4, 16}) {
      const auto m = fourier_measure(n, 60);
      ordered_json row;
      row["n"] = n;
      row["p0"] = m.inclusion_probability(0);
      row["tail_bound"] = m.tail_mass_bound;
      row["shift_defect"] = pushforward_defect(m, WobblingMap::shift());
      fourier.push_back(std::move(row));
    }
    report["measures"]["fourier"] = std::move(fourier);

    const auto base = fourier_measure(4, 60);
    const auto boosted = boost_union(base, 5);
    report["measures"]["boost"] = {
        {"k", 5},
        {"p0", base.inclusion_probability(0)},
        {"boosted_p0", boosted.inclusion_probability(0)}};

    const auto sampled = fourier_measure(4, 30);
    ordered_json samples = ordered_json::array();
    for (std::uint64_t i = 0; i < 5; ++i) {
      ordered_json one = ordered_json::array();
      for (const std::int64_t j : sample_set(sampled, seed + i)) {
        one.push_back(j);
      }
      samples.push_back(std::move(one));
    }
    report["measures"]["samples"] = std::move(samples);
    report["measures"]["monte_carlo_shift_defect"] =
        monte_carlo_defect(sampled, WobblingMap::shift(), 2000, seed);

    ordered_json twists = ordered_json::array();
    for (const auto& [name, g] : pool) {
      ordered_json row;
      row["element"] = name;
      ordered_json set = ordered_json::array();
      for (const std::int64_t j : twist(g).finite_set) set.push_back(j);
      row["set"] = std::move(set);
      twists.push_back(std::move(row));
    }
    report["measures"]["twist"] = std::move(twists);
  }

  {
    const std::vector<WobblingMap> family{pool[1].second, pool[3].second};
    ordered_json blocks = ordered_json::array();
    for (const std::set<std::int64_t>& marks :
         {std::set<std::int64_t>{}, std::set<std::int64_t>{2}}) {
      const auto dec = block_decomposition(family, marks, 1200);
      const auto order = finite_order(family, dec);
      ordered_json row;
      row["marks"] = ordered_json::array();
      for (const std::int64_t e : marks) row["marks"].push_back(e);
      row["k"] = dec.k;
      row["pattern_radius"] = dec.pattern_radius;
      row["block_count"] = dec.blocks.size();
      ordered_json sizes = ordered_json::array();
      for (const auto& block : dec.blocks) sizes.push_back(block.size());
      row["block_sizes"] = std::move(sizes);
      row["max_size_bound"] = 4 * dec.k + 2;
      row["covered"] = ordered_json::array({dec.covered_lo, dec.covered_hi});
      row["group_order"] = order;
      row["order_divides_factorials"] =
          order_divides_block_factorials(order, dec);
      row["checks"] = {{"partition", true}, {"invariance", true}};
      blocks.push_back(std::move(row));
    }
    report["blocks"] = std::move(blocks);
  }

  return report;
}

}  // namespace fgl
