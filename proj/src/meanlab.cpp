#include "fgl/meanlab.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "fgl/numeric.hpp"

namespace fgl {

namespace {

constexpr std::int64_t kMaxTableWindow = 12;  // 2^(2w+1) table entries

void require_product(const SubsetMeasure& m) {
  if (m.kind != SubsetMeasure::Kind::Product) {
    throw construction_error("operation needs a product-form measure");
  }
}

void require_explicit(const SubsetMeasure& m) {
  if (m.kind != SubsetMeasure::Kind::Explicit) {
    throw construction_error("operation needs an explicit measure");
  }
}

std::int64_t scan_reach(const SubsetMeasure& m, const WobblingMap& g) {
  return m.window + g.bound();
}

}  // namespace

double SubsetMeasure::inclusion_probability(std::int64_t j) const {
  require_product(*this);
  if (j < -window || j > window) return 0.0;
  const double p = base[static_cast<std::size_t>(j + window)];
  if (multiplicity == 1) return p;
  return 1.0 - std::pow(1.0 - p, static_cast<double>(multiplicity));
}

SubsetMeasure product_measure(std::vector<double> base, std::int64_t window) {
  if (window < 0) throw construction_error("window must be >= 0");
  if (base.size() != static_cast<std::size_t>(2 * window + 1)) {
    throw construction_error("need one probability per coordinate");
  }
  for (const double p : base) {
    if (!(p >= 0.0) || p >= 1.0) {
      throw construction_error("inclusion probabilities must lie in [0,1)");
    }
  }
  SubsetMeasure m;
  m.kind = SubsetMeasure::Kind::Product;
  m.window = window;
  m.base = std::move(base);
  return m;
}

SubsetMeasure explicit_measure(
    std::vector<std::pair<std::set<std::int64_t>, double>> atoms) {
  double total = 0.0;
  for (const auto& [set, weight] : atoms) {
    if (!(weight >= 0.0)) {
      throw construction_error("weights must be nonnegative");
    }
    total += weight;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw construction_error("weights must sum to 1");
  }
  SubsetMeasure m;
  m.kind = SubsetMeasure::Kind::Explicit;
  m.atoms = std::move(atoms);
  return m;
}

SubsetMeasure fourier_measure(std::int64_t n, std::int64_t window) {
  if (n < 1) throw construction_error("n must be >= 1");
  if (window < 1) throw construction_error("window must be >= 1");
  std::vector<double> base;
  base.reserve(static_cast<std::size_t>(2 * window + 1));
  const double nn = static_cast<double>(n);
  for (std::int64_t j = -window; j <= window; ++j) {
    const double x =
        nn * std::exp(-static_cast<double>(std::llabs(j)) / nn);
    const double u = -std::expm1(-x);  // 1 - a_j, stable for small x
    base.push_back(u * u / (u * u + (2.0 - u) * (2.0 - u)));
  }
  SubsetMeasure m = product_measure(std::move(base), window);
  // p_j <= (1 - a_j)^2 <= n^2 e^{-2|j|/n} beyond the window
  m.tail_mass_bound =
      2.0 * nn * nn * std::exp(log_geometric_tail(window, 2.0 / nn));
  return m;
}

std::set<std::int64_t> sample_set(const SubsetMeasure& m, std::uint64_t seed) {
  require_product(m);
  std::mt19937_64 rng(seed);
  std::set<std::int64_t> out;
  for (std::int64_t j = -m.window; j <= m.window; ++j) {
    if (uniform01(rng()) < m.inclusion_probability(j)) out.insert(j);
  }
  return out;
}

double pushforward_defect(const SubsetMeasure& m, const WobblingMap& g) {
  require_product(m);
  const WobblingMap gi = invert(g);
  const std::int64_t reach = scan_reach(m, g);
  CompensatedSum defect;
  for (std::int64_t j = -reach; j <= reach; ++j) {
    defect.add(std::abs(m.inclusion_probability(j) -
                        m.inclusion_probability(evaluate(gi, j))));
  }
  return defect.value();
}

SubsetMeasure boost_union(const SubsetMeasure& m, std::int64_t k) {
  require_product(m);
  if (k < 1) throw construction_error("k must be >= 1");
  SubsetMeasure out = m;
  out.multiplicity = m.multiplicity * k;
  out.tail_mass_bound = m.tail_mass_bound * static_cast<double>(k);
  return out;
}

double monte_carlo_defect(const SubsetMeasure& m, const WobblingMap& g,
                          std::int64_t samples, std::uint64_t seed) {
  require_product(m);
  if (samples < 1) throw construction_error("need at least one sample");
  const std::int64_t reach = scan_reach(m, g);
  const auto size = static_cast<std::size_t>(2 * reach + 1);
  std::vector<std::int64_t> direct(size, 0);
  std::vector<std::int64_t> pushed(size, 0);
  std::mt19937_64 master(seed);
  for (std::int64_t i = 0; i < samples; ++i) {
    const auto e = sample_set(m, master());
    for (const std::int64_t x : e) {
      direct[static_cast<std::size_t>(x + reach)] += 1;
      const std::int64_t y = evaluate(g, x);
      pushed[static_cast<std::size_t>(y + reach)] += 1;
    }
  }
  CompensatedSum defect;
  for (std::size_t i = 0; i < size; ++i) {
    defect.add(std::abs(static_cast<double>(direct[i] - pushed[i])) /
               static_cast<double>(samples));
  }
  return defect.value();
}

DensityTable density_from_measure(const SubsetMeasure& m,
                                  std::int64_t window) {
  require_explicit(m);
  if (window < 0 || window > kMaxTableWindow) {
    throw construction_error("window out of range for an exhaustive table");
  }
  if (m.atoms.empty()) throw construction_error("measure has no atoms");
  const std::int64_t cardinality =
      static_cast<std::int64_t>(m.atoms.front().first.size());
  const auto size = static_cast<std::size_t>(2 * window + 1);
  std::vector<std::uint64_t> masks;
  for (const auto& [set, weight] : m.atoms) {
    if (static_cast<std::int64_t>(set.size()) != cardinality) {
      throw construction_error("supported sets must share one cardinality");
    }
    std::uint64_t mask = 0;
    for (const std::int64_t x : set) {
      if (x < -window || x > window) {
        throw construction_error("supported set leaves the window");
      }
      mask |= std::uint64_t{1} << static_cast<std::uint64_t>(x + window);
    }
    masks.push_back(mask);
  }
  DensityTable table;
  table.window = window;
  table.cardinality = cardinality;
  table.values.assign(std::size_t{1} << size, 0.0);
  const double scale = std::ldexp(1.0, static_cast<int>(cardinality));
  for (std::uint64_t config = 0; config < table.values.size(); ++config) {
    double v = 0.0;
    for (std::size_t i = 0; i < masks.size(); ++i) {
      if ((config & masks[i]) == 0) v += m.atoms[i].second;
    }
    table.values[config] = scale * v;
  }
  CompensatedSum norm;
  for (const double v : table.values) norm.add(v);
  table.l1_norm = norm.value() / static_cast<double>(table.values.size());
  return table;
}

SqrtGapReport density_sqrt_gap(const SubsetMeasure& m, const WobblingMap& g,
                               std::int64_t window) {
  require_explicit(m);
  const auto size = static_cast<std::size_t>(2 * window + 1);
  std::vector<std::size_t> image(size);
  for (std::int64_t x = -window; x <= window; ++x) {
    const std::int64_t y = evaluate(g, x);
    if (y < -window || y > window) {
      throw construction_error("map must keep the window invariant");
    }
    image[static_cast<std::size_t>(x + window)] =
        static_cast<std::size_t>(y + window);
  }
  const DensityTable table = density_from_measure(m, window);
  CompensatedSum gap2;
  for (std::uint64_t config = 0; config < table.values.size(); ++config) {
    // (g^{-1} config)_x = config_{g(x)}
    std::uint64_t moved = 0;
    for (std::size_t i = 0; i < size; ++i) {
      if ((config >> image[i]) & 1u) moved |= std::uint64_t{1} << i;
    }
    const double d =
        std::sqrt(table.values[moved]) - std::sqrt(table.values[config]);
    gap2.add(d * d);
  }
  std::map<std::set<std::int64_t>, double> signed_weights;
  for (const auto& [set, weight] : m.atoms) {
    signed_weights[set] += weight;
    signed_weights[image_set(g, set)] -= weight;
  }
  CompensatedSum variation;
  for (const auto& [set, weight] : signed_weights) {
    variation.add(std::abs(weight));
  }
  SqrtGapReport report;
  report.lhs =
      std::sqrt(gap2.value() / static_cast<double>(table.values.size()));
  report.rhs = std::sqrt(variation.value());
  report.pass = report.lhs <= report.rhs + 1e-12;
  return report;
}

TwistedElement twist(const WobblingMap& g) {
  const WobblingMap gi = invert(g);
  TwistedElement t;
  t.map = g;
  const std::int64_t b = g.bound();
  for (std::int64_t x = -b - 1; x <= b + 1; ++x) {
    const bool in_n = x >= 0;
    const bool in_image = evaluate(gi, x) >= 0;
    if (in_n != in_image) t.finite_set.insert(x);
  }
  return t;
}

TwistedElement twisted_product(const TwistedElement& a,
                               const TwistedElement& b) {
  TwistedElement out;
  out.map = compose(a.map, b.map);
  out.finite_set = a.finite_set;
  for (const std::int64_t x : image_set(a.map, b.finite_set)) {
    const auto it = out.finite_set.find(x);
    if (it == out.finite_set.end()) {
      out.finite_set.insert(x);
    } else {
      out.finite_set.erase(it);
    }
  }
  return out;
}

std::set<std::int64_t> image_set(const WobblingMap& g,
                                 const std::set<std::int64_t>& s) {
  std::set<std::int64_t> out;
  for (const std::int64_t x : s) out.insert(evaluate(g, x));
  return out;
}

}  // namespace fgl
