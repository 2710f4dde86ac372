#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fgl/errors.hpp"
#include "fgl/wobbling.hpp"

namespace fgl {

// A probability measure on finite subsets of Z. Product kind: independent
// per-coordinate inclusion with probability 1 - (1 - base_j)^multiplicity;
// the multiplicity is kept as an integer so that unions of independent draws
// compose exactly on p-values. Explicit kind: finitely many weighted sets.
struct SubsetMeasure {
  enum class Kind { Product, Explicit };
  Kind kind = Kind::Product;

  // product form; base[j + window] is the single-draw inclusion probability
  std::int64_t window = 0;
  std::vector<double> base;
  std::int64_t multiplicity = 1;
  double tail_mass_bound = 0.0;  // bound on the dropped coordinate mass

  // explicit form
  std::vector<std::pair<std::set<std::int64_t>, double>> atoms;

  // inclusion probability of coordinate j (0 beyond the window)
  double inclusion_probability(std::int64_t j) const;
};

SubsetMeasure product_measure(std::vector<double> base, std::int64_t window);
SubsetMeasure explicit_measure(
    std::vector<std::pair<std::set<std::int64_t>, double>> atoms);

// Product measure dual to the density family: inclusion probability
// p_j = (1-a_j)^2 / ((1-a_j)^2 + (1+a_j)^2), coordinates beyond the window
// dropped with a certified tail-mass bound.
SubsetMeasure fourier_measure(std::int64_t n, std::int64_t window);

// Independent per-coordinate draw; deterministic under a fixed seed.
std::set<std::int64_t> sample_set(const SubsetMeasure& m, std::uint64_t seed);

// Coordinatewise invariance defect sum_j |p_j - p_{g^{-1}(j)}|, an upper
// bound for the total variation between the measure and its pushforward.
double pushforward_defect(const SubsetMeasure& m, const WobblingMap& g);

// Law of the union of k independent draws: p'_j = 1 - (1 - p_j)^k.
SubsetMeasure boost_union(const SubsetMeasure& m, std::int64_t k);

// Empirical counterpart of pushforward_defect from `samples` draws of E and
// of g(E): sum of per-coordinate frequency differences.
double monte_carlo_defect(const SubsetMeasure& m, const WobblingMap& g,
                          std::int64_t samples, std::uint64_t seed);

// Density 2^{n(mu)} sum_E mu({E}) 1_{C_E} tabulated over the configurations
// of [-window, window]; C_E fixes the coordinates of E to 0. Requires every
// supported set to have one common cardinality n(mu) inside the window.
struct DensityTable {
  std::int64_t window = 0;
  std::int64_t cardinality = 0;
  std::vector<double> values;  // index: bitmask, bit i = coordinate i-window
  double l1_norm = 0.0;        // under the uniform Bernoulli weight
};
DensityTable density_from_measure(const SubsetMeasure& m,
                                  std::int64_t window);

// Exhaustive check of ||g f^{1/2} - f^{1/2}||_2 <= ||g mu - mu||_1^{1/2} on a
// window that g maps into itself.
struct SqrtGapReport {
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
};
SqrtGapReport density_sqrt_gap(const SubsetMeasure& m, const WobblingMap& g,
                               std::int64_t window);

// Pair (N delta g(N), g) with N = {0, 1, 2, ...}; the finite set collects the
// positions that change side under g, all within the displacement bound.
struct TwistedElement {
  std::set<std::int64_t> finite_set;
  WobblingMap map;
};

TwistedElement twist(const WobblingMap& g);

// semidirect product law (A, g)(B, h) = (A delta g(B), g h)
TwistedElement twisted_product(const TwistedElement& a,
                               const TwistedElement& b);

std::set<std::int64_t> image_set(const WobblingMap& g,
                                 const std::set<std::int64_t>& s);

}  // namespace fgl
