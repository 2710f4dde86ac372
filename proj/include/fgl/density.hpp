#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "fgl/errors.hpp"
#include "fgl/wobbling.hpp"

namespace fgl {

// A series or product evaluated over |j| <= truncation_radius together with a
// certified bound on the discarded tail. error_bound is recomputed from the
// actual radius, never assumed from the radius-selection heuristic.
struct TruncatedValue {
  double value = 0.0;
  double error_bound = 0.0;
  std::int64_t truncation_radius = 0;
};

// weight exp(-n e^{-|j|/n}); in (0,1], symmetric in j
double coefficient(std::int64_t n, std::int64_t j);

// squared-norm ratio after conditioning the origin coordinate to 0:
// 1/(1 + coefficient(n,0)^2), strictly between 1/2 and 1
double conditioned_norm_ratio(std::int64_t n);

// lower bound of the quadratic log inequality z - C z^2 <= log(1+z) on
// z >= -1/2, tight at z = -1/2
inline const double kLogQuadraticConstant = 4.0 * std::log(2.0) - 2.0;

// Correlation of the displaced density with itself, as the product over
// |j| <= radius of (1 + a_j a_{g(j)}) / (1 + a_j^2), evaluated in log space
// with compensated summation.
TruncatedValue correlation_ratio_at(std::int64_t n, const WobblingMap& g,
                                    std::int64_t radius);

// Radius chosen automatically so that error_bound <= eps.
TruncatedValue correlation_ratio(std::int64_t n, const WobblingMap& g,
                                 double eps);

// The displacement functional: sum over |j| <= radius of
// (a_j^2/(1+a_j^2)) e^{-|j|/n} (|g(j)| - |j|).
TruncatedValue F_n_at(std::int64_t n, const WobblingMap& g,
                      std::int64_t radius);
TruncatedValue F_n(std::int64_t n, const WobblingMap& g, double eps);

// Folded displacement profile: b_0 = |g(0)|, b_j = |g(j)| + |g(-j)| - 2j for
// j > 0, and the running sum B(j).
struct ProfileEntry {
  std::int64_t j = 0;
  std::int64_t b = 0;
  std::int64_t running_sum = 0;
};
std::vector<ProfileEntry> b_profile(const WobblingMap& g, std::int64_t u_max);

// Two-sided profile bound -2 bound^2 <= B(u) <= 4 bound^2 for u > bound.
struct ProfileBoundReport {
  bool pass = false;
  double margin = 0.0;       // least distance from B(u) to either bound
  std::int64_t worst_u = 0;
  std::int64_t worst_sum = 0;
};
ProfileBoundReport check_lemma_B(const WobblingMap& g,
                                 const std::vector<std::int64_t>& u_grid);

// S1 = sum a_j e^{-|j|/n} <= 3 and S2 = sum a_j^2 e^{-2|j|/n} <= 1/n, both
// with the certified tail added before comparing.
struct SumBoundReport {
  double s1 = 0.0;
  double s2 = 0.0;
  bool pass = false;
};
SumBoundReport check_lemma_sum(std::int64_t n);

// z - C z^2 <= log(1+z) <= z on the grid (all z >= -1/2).
struct LogBoundReport {
  bool pass = false;
  double worst_margin = 0.0;
  double worst_z = 0.0;
};
LogBoundReport check_log_inequality(const std::vector<double>& z_grid);

// First- and second-order remainders of the coefficient-ratio expansion:
// a_{g(j)}/a_j = exp(e^{-|j|/n} (|g(j)|-|j| + eta)) and
// a_{g(j)}/a_j - 1 = e^{-|j|/n}(|g(j)|-|j|) + e^{-|j|/n} eta + theta,
// with |eta| <= e^b/n and |theta| <= exp(b + e^b) e^{-2|j|/n} for b = bound.
struct ExpansionRemainders {
  double eta = 0.0;
  double theta = 0.0;
  bool bounds_pass = false;
};
ExpansionRemainders eta_theta(const WobblingMap& g, std::int64_t n,
                              std::int64_t j);

// Split of sum_j (a_j^2/(1+a_j^2)) (a_{g(j)}/a_j - 1) into the displacement
// functional plus the eta and theta residual series.
struct Sum2Decomposition {
  double main = 0.0;
  double eta_term = 0.0;
  double theta_term = 0.0;
  std::int64_t truncation_radius = 0;
};
Sum2Decomposition decompose_sum2(std::int64_t n, const WobblingMap& g,
                                 double eps);

// Summation by parts against psi(t) = (a_t^2/(1+a_t^2)) e^{-t/n}:
// lhs = sum_{j=0}^N psi(j) b_j, rhs = psi(N)B(N) - integral of B dpsi, the
// integral taken exactly over unit steps where B is constant.
struct AbelReport {
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
};
AbelReport abel_check(const WobblingMap& g, std::int64_t n, std::int64_t N);

}  // namespace fgl
