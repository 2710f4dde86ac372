// Command line front end. Subcommand tree:
//   subshift language|point|recurrence
//   element  build|verify|embed
//   density  correlate|fn|lemmas
//   mean     fourier|sample|boost|defect|twist
//   stab     pattern|blocks|order
//   report   all
// Exit codes: 0 success, 1 a requested check failed, 2 usage or input error.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "fgl/density.hpp"
#include "fgl/meanlab.hpp"
#include "fgl/report.hpp"
#include "fgl/serialize.hpp"
#include "fgl/stabilizer.hpp"

namespace {

using fgl::ordered_json;

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) throw fgl::construction_error("cannot open \"" + out + "\"");
  file << text;
  if (text.empty() || text.back() != '\n') file << '\n';
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) {
    return s;
  }
  std::string quoted = "\"";
  for (const char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

// Builtin system, rebuilt with a wider orbit buffer when a scan needs one.
std::shared_ptr<const fgl::SubshiftSystem> make_system(const std::string& name,
                                                       std::int64_t horizon) {
  if (horizon <= fgl::SubshiftSystem::default_orbit_horizon()) {
    return fgl::builtin_system(name);
  }
  fgl::Substitution sub;
  if (name == "fibonacci") {
    sub = fgl::Substitution::fibonacci();
  } else if (name == "thue_morse") {
    sub = fgl::Substitution::thue_morse();
  } else {
    throw fgl::construction_error("unknown system \"" + name + "\"");
  }
  auto sys = fgl::SubshiftSystem::fixed_point(sub, {'0', '1'}, 2 * horizon);
  sys->set_label(name);
  return sys;
}

std::vector<std::pair<std::string, fgl::WobblingMap>> named_family(
    const std::vector<std::string>& specs,
    const std::shared_ptr<const fgl::SubshiftSystem>& sys) {
  std::vector<std::pair<std::string, fgl::WobblingMap>> family;
  for (const auto& spec : specs) {
    family.emplace_back(spec, fgl::parse_element(spec, sys));
  }
  return family;
}

const std::vector<std::string> kPoolSpecs = {"shift", "swap:01", "swap:10",
                                             "comm:01,10100100"};
const std::vector<std::string> kStabSpecs = {"swap:01", "comm:01,10100100"};

ordered_json marks_json(const std::set<std::int64_t>& marks) {
  ordered_json arr = ordered_json::array();
  for (const std::int64_t e : marks) arr.push_back(e);
  return arr;
}

ordered_json blocks_json(const std::string& system,
                         const std::vector<std::string>& specs,
                         const fgl::BlockDecomposition& dec) {
  ordered_json doc;
  doc["schema"] = "fgl-blocks-1";
  doc["system"] = system;
  doc["family"] = specs;
  doc["marks"] = marks_json(dec.marks);
  doc["window"] = dec.window;
  doc["k"] = dec.k;
  doc["pattern_radius"] = dec.pattern_radius;
  doc["block_count"] = dec.blocks.size();
  ordered_json sizes = ordered_json::array();
  for (const auto& block : dec.blocks) sizes.push_back(block.size());
  doc["block_sizes"] = std::move(sizes);
  doc["max_size_bound"] = 4 * dec.k + 2;
  doc["covered"] = ordered_json::array({dec.covered_lo, dec.covered_hi});
  doc["checks"] = {{"partition", true}, {"invariance", true}};
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"topological full group laboratory"};
  app.require_subcommand(1);
  int status = 0;

  // subshift ---------------------------------------------------------------
  auto* subshift = app.add_subcommand("subshift", "substitution orbit data");
  subshift->require_subcommand(1);

  std::string lang_system = "fibonacci";
  std::int64_t lang_length = 8;
  std::string lang_out;
  auto* language =
      subshift->add_subcommand("language", "admissible words of one length");
  language->add_option("--system", lang_system, "fibonacci or thue_morse");
  language->add_option("--n", lang_length, "word length");
  language->add_option("--out", lang_out, "write to file instead of stdout");
  language->callback([&] {
    const auto sys = fgl::builtin_system(lang_system);
    const auto& table = sys->language(static_cast<int>(lang_length));
    ordered_json doc;
    doc["schema"] = "fgl-language-1";
    doc["system"] = sys->label();
    doc["length"] = table.length;
    doc["count"] = table.words.size();
    doc["words"] = table.words;
    emit(doc.dump(2), lang_out);
  });

  std::string point_system = "fibonacci";
  std::int64_t point_window = 40;
  std::string point_out;
  auto* point =
      subshift->add_subcommand("point", "window of the fixed point");
  point->add_option("--system", point_system, "fibonacci or thue_morse");
  point->add_option("--window", point_window, "half width, prints p[-w..w]");
  point->add_option("--out", point_out, "write to file instead of stdout");
  point->callback([&] {
    const auto sys = make_system(point_system, point_window + 1);
    ordered_json doc;
    doc["schema"] = "fgl-point-1";
    doc["system"] = sys->label();
    doc["lo"] = -point_window;
    doc["hi"] = point_window;
    doc["word"] = sys->window(-point_window, point_window);
    emit(doc.dump(2), point_out);
  });

  std::string rec_system = "fibonacci";
  std::int64_t rec_length = 4;
  std::int64_t rec_horizon = 2000;
  std::string rec_out;
  auto* recurrence =
      subshift->add_subcommand("recurrence", "least uniform recurrence bound");
  recurrence->add_option("--system", rec_system, "fibonacci or thue_morse");
  recurrence->add_option("--n", rec_length, "word length");
  recurrence->add_option("--horizon", rec_horizon, "search horizon");
  recurrence->add_option("--out", rec_out, "write to file instead of stdout");
  recurrence->callback([&] {
    const auto sys = make_system(rec_system, rec_horizon + 1);
    ordered_json doc;
    doc["schema"] = "fgl-recurrence-1";
    doc["system"] = sys->label();
    doc["length"] = rec_length;
    doc["horizon"] = rec_horizon;
    doc["bound"] =
        sys->recurrence_bound(static_cast<int>(rec_length), rec_horizon);
    emit(doc.dump(2), rec_out);
  });

  // element ----------------------------------------------------------------
  auto* element = app.add_subcommand("element", "bounded-displacement maps");
  element->require_subcommand(1);

  std::string build_spec;
  std::string build_system;
  std::string build_out;
  auto* build = element->add_subcommand("build", "serialize an element");
  build->add_option("--element", build_spec, "element spec")->required();
  build->add_option("--system", build_system, "system for swap:/comm: specs");
  build->add_option("--out", build_out, "write to file instead of stdout");
  build->callback([&] {
    const auto sys =
        build_system.empty() ? nullptr : fgl::builtin_system(build_system);
    const auto g = fgl::parse_element(build_spec, sys);
    emit(fgl::map_to_json(g).dump(2), build_out);
  });

  std::string verify_spec;
  std::string verify_system;
  std::int64_t verify_window = 200;
  std::string verify_out;
  auto* verify = element->add_subcommand("verify", "windowed sanity checks");
  verify->add_option("--element", verify_spec, "element spec")->required();
  verify->add_option("--system", verify_system, "system for swap:/comm:");
  verify->add_option("--window", verify_window, "check on [-w, w]");
  verify->add_option("--out", verify_out, "write to file instead of stdout");
  verify->callback([&] {
    const auto sys =
        verify_system.empty() ? nullptr : fgl::builtin_system(verify_system);
    const auto g = fgl::parse_element(verify_spec, sys);
    const bool bijective =
        fgl::verify_bijectivity_window(g, -verify_window, verify_window);
    const std::int64_t observed = fgl::observed_bound(g, verify_window);
    const bool pass = bijective && observed <= g.bound();
    ordered_json doc;
    doc["schema"] = "fgl-verify-1";
    doc["element"] = verify_spec;
    doc["window"] = verify_window;
    doc["declared_bound"] = g.bound();
    doc["observed_bound"] = observed;
    doc["bijective_on_window"] = bijective;
    doc["pass"] = pass;
    emit(doc.dump(2), verify_out);
    if (!pass) status = 1;
  });

  std::string embed_spec = "swap:01";
  std::string embed_system = "fibonacci";
  std::string embed_out;
  auto* embed =
      element->add_subcommand("embed", "local rule as a wobbling map");
  embed->add_option("--element", embed_spec,
                    "identity | constant:<k> | swap:<w> | comm:<w1>,<w2>");
  embed->add_option("--system", embed_system, "fibonacci or thue_morse");
  embed->add_option("--out", embed_out, "write to file instead of stdout");
  embed->callback([&] {
    const auto sys = fgl::builtin_system(embed_system);
    const auto rule = fgl::parse_full_element(embed_spec, sys);
    const auto g = fgl::embed_pi_p(rule);
    ordered_json doc;
    doc["schema"] = "fgl-embed-1";
    doc["system"] = sys->label();
    doc["element"] = embed_spec;
    doc["radius"] = rule.radius;
    doc["exponent_bound"] = rule.exponent_bound;
    doc["rule"] = rule.rule;
    ordered_json moved = ordered_json::array();
    for (std::int64_t j = -15; j <= 15; ++j) moved.push_back(g(j) - j);
    doc["displacements"] = std::move(moved);
    emit(doc.dump(2), embed_out);
  });

  // density ----------------------------------------------------------------
  auto* density = app.add_subcommand("density", "displaced density family");
  density->require_subcommand(1);

  struct CurveOpts {
    std::string system = "fibonacci";
    std::vector<std::string> elements;
    std::vector<std::int64_t> n_list = {1, 4, 16, 64};
    double eps = 1e-9;
    std::string format = "csv";
    std::string out;
  };
  const auto add_curve_options = [](CLI::App* cmd, CurveOpts& opt) {
    cmd->add_option("--system", opt.system, "fibonacci or thue_morse");
    cmd->add_option("--element", opt.elements,
                    "element specs (repeatable; default standard pool)");
    cmd->add_option("--n", opt.n_list, "scale list")->delimiter(',');
    cmd->add_option("--eps", opt.eps, "truncation error target");
    cmd->add_option("--format", opt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", opt.out, "write to file instead of stdout");
  };
  const auto run_curves = [&status](const CurveOpts& opt, bool correlate) {
    const auto sys = fgl::builtin_system(opt.system);
    const auto family = named_family(
        opt.elements.empty() ? kPoolSpecs : opt.elements, sys);
    ordered_json rows = ordered_json::array();
    std::string csv = "n,g_id,value,error_bound,pass\n";
    bool all_pass = true;
    for (const auto& [name, g] : family) {
      for (const std::int64_t n : opt.n_list) {
        const fgl::TruncatedValue tv = correlate
                                           ? fgl::correlation_ratio(n, g, opt.eps)
                                           : fgl::F_n(n, g, opt.eps);
        bool pass = std::isfinite(tv.value) && tv.error_bound <= opt.eps;
        if (correlate) {
          pass = pass && tv.value > 0.0 && tv.value <= 1.0 + 1e-9;
        }
        all_pass = all_pass && pass;
        csv += std::to_string(n) + "," + csv_field(name) + "," +
               fmt17(tv.value) + "," + fmt17(tv.error_bound) + "," +
               (pass ? "1" : "0") + "\n";
        ordered_json row;
        row["n"] = n;
        row["g_id"] = name;
        row["value"] = tv.value;
        row["error_bound"] = tv.error_bound;
        row["pass"] = pass;
        rows.push_back(std::move(row));
      }
    }
    if (opt.format == "csv") {
      emit(csv, opt.out);
    } else {
      ordered_json doc;
      doc["schema"] = "fgl-density-1";
      doc["functional"] = correlate ? "correlation" : "fn";
      doc["system"] = opt.system;
      doc["eps"] = opt.eps;
      doc["rows"] = std::move(rows);
      emit(doc.dump(2), opt.out);
    }
    if (!all_pass) status = 1;
  };

  CurveOpts corr_opts;
  auto* correlate =
      density->add_subcommand("correlate", "self-correlation of the density");
  add_curve_options(correlate, corr_opts);
  correlate->callback([&] { run_curves(corr_opts, true); });

  CurveOpts fn_opts;
  auto* fn = density->add_subcommand("fn", "displacement functional");
  add_curve_options(fn, fn_opts);
  fn->callback([&] { run_curves(fn_opts, false); });

  std::vector<std::int64_t> lemma_n = {1, 2, 4, 8, 16, 32, 64};
  std::string lemma_out;
  auto* lemmas =
      density->add_subcommand("lemmas", "summability and log bounds");
  lemmas->add_option("--n", lemma_n, "scale list")->delimiter(',');
  lemmas->add_option("--out", lemma_out, "write to file instead of stdout");
  lemmas->callback([&] {
    ordered_json doc;
    doc["schema"] = "fgl-lemmas-1";
    bool all_pass = true;
    ordered_json sums = ordered_json::array();
    for (const std::int64_t n : lemma_n) {
      const auto sum = fgl::check_lemma_sum(n);
      all_pass = all_pass && sum.pass;
      ordered_json row;
      row["n"] = n;
      row["s1"] = sum.s1;
      row["s2"] = sum.s2;
      row["pass"] = sum.pass;
      sums.push_back(std::move(row));
    }
    doc["sum_bounds"] = std::move(sums);
    std::vector<double> grid;
    const int points = 10001;
    for (int i = 0; i < points; ++i) {
      grid.push_back(-0.5 + 10.5 * static_cast<double>(i) /
                                static_cast<double>(points - 1));
    }
    const auto logs = fgl::check_log_inequality(grid);
    all_pass = all_pass && logs.pass;
    doc["log_inequality"] = {{"points", points},
                             {"worst_margin", logs.worst_margin},
                             {"worst_z", logs.worst_z},
                             {"pass", logs.pass}};
    doc["pass"] = all_pass;
    emit(doc.dump(2), lemma_out);
    if (!all_pass) status = 1;
  });

  // mean -------------------------------------------------------------------
  auto* mean = app.add_subcommand("mean", "measures on finite subsets");
  mean->require_subcommand(1);

  std::int64_t fourier_n = 4;
  std::int64_t fourier_window = 60;
  std::string fourier_out;
  auto* fourier =
      mean->add_subcommand("fourier", "product measure dual to the density");
  fourier->add_option("--n", fourier_n, "scale");
  fourier->add_option("--window", fourier_window, "coordinate half width");
  fourier->add_option("--out", fourier_out, "write to file instead of stdout");
  fourier->callback([&] {
    const auto m = fgl::fourier_measure(fourier_n, fourier_window);
    ordered_json doc;
    doc["schema"] = "fgl-fourier-1";
    doc["n"] = fourier_n;
    doc["window"] = m.window;
    doc["tail_bound"] = m.tail_mass_bound;
    doc["p0"] = m.inclusion_probability(0);
    doc["base"] = m.base;
    emit(doc.dump(2), fourier_out);
  });

  std::int64_t sample_n = 4;
  std::int64_t sample_window = 30;
  std::uint64_t sample_seed = 0;
  std::int64_t sample_count = 5;
  std::string sample_out;
  auto* sample = mean->add_subcommand("sample", "deterministic draws");
  sample->add_option("--n", sample_n, "scale");
  sample->add_option("--window", sample_window, "coordinate half width");
  sample->add_option("--seed", sample_seed, "draw seed")->required();
  sample->add_option("--count", sample_count, "number of draws");
  sample->add_option("--out", sample_out, "write to file instead of stdout");
  sample->callback([&] {
    const auto m = fgl::fourier_measure(sample_n, sample_window);
    ordered_json doc;
    doc["schema"] = "fgl-samples-1";
    doc["n"] = sample_n;
    doc["window"] = sample_window;
    doc["seed"] = sample_seed;
    ordered_json sets = ordered_json::array();
    for (std::int64_t i = 0; i < sample_count; ++i) {
      ordered_json one = ordered_json::array();
      for (const std::int64_t j : fgl::sample_set(m, sample_seed + i)) {
        one.push_back(j);
      }
      sets.push_back(std::move(one));
    }
    doc["sets"] = std::move(sets);
    emit(doc.dump(2), sample_out);
  });

  std::int64_t boost_n = 4;
  std::int64_t boost_window = 60;
  std::int64_t boost_k = 5;
  std::string boost_out;
  auto* boost = mean->add_subcommand("boost", "union of independent draws");
  boost->add_option("--n", boost_n, "scale");
  boost->add_option("--window", boost_window, "coordinate half width");
  boost->add_option("--k", boost_k, "number of independent draws");
  boost->add_option("--out", boost_out, "write to file instead of stdout");
  boost->callback([&] {
    const auto m = fgl::fourier_measure(boost_n, boost_window);
    const auto boosted = fgl::boost_union(m, boost_k);
    ordered_json doc;
    doc["schema"] = "fgl-boost-1";
    doc["n"] = boost_n;
    doc["window"] = boost_window;
    doc["k"] = boost_k;
    doc["p0"] = m.inclusion_probability(0);
    doc["boosted_p0"] = boosted.inclusion_probability(0);
    doc["tail_bound"] = boosted.tail_mass_bound;
    emit(doc.dump(2), boost_out);
  });

  std::string defect_spec = "shift";
  std::string defect_system = "fibonacci";
  std::int64_t defect_n = 4;
  std::int64_t defect_window = 60;
  std::int64_t defect_samples = 0;
  std::uint64_t defect_seed = 0;
  std::string defect_out;
  auto* defect =
      mean->add_subcommand("defect", "pushforward invariance defect");
  defect->add_option("--element", defect_spec, "element spec");
  defect->add_option("--system", defect_system, "fibonacci or thue_morse");
  defect->add_option("--n", defect_n, "scale");
  defect->add_option("--window", defect_window, "coordinate half width");
  auto* defect_samples_opt = defect->add_option(
      "--samples", defect_samples, "also run a Monte Carlo cross check");
  auto* defect_seed_opt =
      defect->add_option("--seed", defect_seed, "Monte Carlo seed");
  defect_samples_opt->needs(defect_seed_opt);
  defect->add_option("--out", defect_out, "write to file instead of stdout");
  defect->callback([&] {
    const auto sys = fgl::builtin_system(defect_system);
    const auto g = fgl::parse_element(defect_spec, sys);
    const auto m = fgl::fourier_measure(defect_n, defect_window);
    ordered_json doc;
    doc["schema"] = "fgl-defect-1";
    doc["element"] = defect_spec;
    doc["n"] = defect_n;
    doc["window"] = defect_window;
    doc["defect"] = fgl::pushforward_defect(m, g);
    if (defect_samples > 0) {
      doc["samples"] = defect_samples;
      doc["seed"] = defect_seed;
      doc["monte_carlo"] =
          fgl::monte_carlo_defect(m, g, defect_samples, defect_seed);
    }
    emit(doc.dump(2), defect_out);
  });

  std::string twist_spec = "shift";
  std::string twist_system = "fibonacci";
  std::string twist_out;
  auto* twist_cmd =
      mean->add_subcommand("twist", "marked set paired with the element");
  twist_cmd->add_option("--element", twist_spec, "element spec");
  twist_cmd->add_option("--system", twist_system, "fibonacci or thue_morse");
  twist_cmd->add_option("--out", twist_out, "write to file instead of stdout");
  twist_cmd->callback([&] {
    const auto sys = fgl::builtin_system(twist_system);
    const auto t = fgl::twist(fgl::parse_element(twist_spec, sys));
    ordered_json doc;
    ordered_json set = ordered_json::array();
    for (const std::int64_t j : t.finite_set) set.push_back(j);
    doc["set"] = std::move(set);
    doc["g"] = twist_spec;
    emit(doc.dump(), twist_out);
  });

  // stab -------------------------------------------------------------------
  auto* stab = app.add_subcommand("stab", "pattern and block certificates");
  stab->require_subcommand(1);

  std::string pat_system = "fibonacci";
  std::vector<std::string> pat_specs;
  std::int64_t pat_radius = 2;
  std::int64_t pat_horizon = 100000;
  std::string pat_out;
  auto* pattern =
      stab->add_subcommand("pattern", "least ubiquitous pattern constant");
  pattern->add_option("--system", pat_system, "fibonacci or thue_morse");
  pattern->add_option("--element", pat_specs,
                      "family specs (repeatable; default stabilizer pair)");
  pattern->add_option("--n", pat_radius, "displacement window half width");
  pattern->add_option("--horizon", pat_horizon, "scan horizon");
  pattern->add_option("--out", pat_out, "write to file instead of stdout");
  pattern->callback([&] {
    const auto sys = make_system(pat_system, pat_horizon + pat_radius + 1);
    const auto specs = pat_specs.empty() ? kStabSpecs : pat_specs;
    std::vector<fgl::WobblingMap> family;
    for (const auto& [name, g] : named_family(specs, sys)) {
      (void)name;
      family.push_back(g);
    }
    ordered_json doc;
    doc["schema"] = "fgl-pattern-1";
    doc["system"] = pat_system;
    doc["family"] = specs;
    doc["radius"] = pat_radius;
    doc["horizon"] = pat_horizon;
    try {
      const auto pattern_k =
          fgl::pattern_constant(family, pat_radius, pat_horizon);
      doc["k"] = pattern_k.k;
      doc["found"] = true;
    } catch (const fgl::witness_error& e) {
      doc["found"] = false;
      doc["message"] = e.what();
      status = 1;
    }
    emit(doc.dump(2), pat_out);
  });

  std::string blk_system = "fibonacci";
  std::vector<std::string> blk_specs;
  std::vector<std::int64_t> blk_marks;
  std::int64_t blk_window = 1500;
  std::uint64_t blk_cap = 1000000;
  std::string blk_out;
  const auto add_block_options = [&](CLI::App* cmd) {
    cmd->add_option("--system", blk_system, "fibonacci or thue_morse");
    cmd->add_option("--element", blk_specs,
                    "family specs (repeatable; default stabilizer pair)");
    cmd->add_option("--marks", blk_marks, "symmetric difference with N")
        ->delimiter(',');
    cmd->add_option("--window", blk_window, "half width of the covered range");
    cmd->add_option("--out", blk_out, "write to file instead of stdout");
  };
  const auto run_blocks = [&](bool with_order) {
    const auto sys = make_system(blk_system, 4 * blk_window + 64);
    const auto specs = blk_specs.empty() ? kStabSpecs : blk_specs;
    std::vector<fgl::WobblingMap> family;
    for (const auto& [name, g] : named_family(specs, sys)) {
      (void)name;
      family.push_back(g);
    }
    const std::set<std::int64_t> marks(blk_marks.begin(), blk_marks.end());
    try {
      const auto dec = fgl::block_decomposition(family, marks, blk_window);
      ordered_json doc = blocks_json(blk_system, specs, dec);
      if (with_order) {
        const std::uint64_t order = fgl::finite_order(family, dec, blk_cap);
        doc["group_order"] = order;
        doc["order_divides_factorials"] =
            fgl::order_divides_block_factorials(order, dec);
      }
      emit(doc.dump(2), blk_out);
    } catch (const fgl::witness_error& e) {
      ordered_json doc;
      doc["schema"] = "fgl-blocks-1";
      doc["system"] = blk_system;
      doc["family"] = specs;
      doc["marks"] = marks_json(marks);
      doc["window"] = blk_window;
      doc["found"] = false;
      doc["message"] = e.what();
      emit(doc.dump(2), blk_out);
      status = 1;
    }
  };

  auto* blocks =
      stab->add_subcommand("blocks", "invariant interval decomposition");
  add_block_options(blocks);
  blocks->callback([&] { run_blocks(false); });

  auto* order = stab->add_subcommand("order", "restricted group order");
  add_block_options(order);
  order->add_option("--cap", blk_cap, "closure size cap");
  order->callback([&] { run_blocks(true); });

  // report -----------------------------------------------------------------
  auto* report = app.add_subcommand("report", "batched summaries");
  report->require_subcommand(1);

  std::uint64_t report_seed = 0;
  std::string report_out;
  auto* report_all =
      report->add_subcommand("all", "full deterministic pipeline");
  report_all->add_option("--seed", report_seed, "sampling seed")->required();
  report_all->add_option("--out", report_out,
                         "write to file instead of stdout");
  report_all->callback(
      [&] { emit(fgl::run_report(report_seed).dump(2), report_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const fgl::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return status;
}
