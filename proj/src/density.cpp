#include "fgl/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fgl/numeric.hpp"

namespace fgl {

namespace {

constexpr double kEpsFloor = 1e-14;
constexpr std::int64_t kMaxTruncationRadius = std::int64_t{1} << 24;

void require_n(std::int64_t n) {
  if (n < 1) throw construction_error("n must be >= 1");
}

double decay(std::int64_t n, std::int64_t j) {
  return std::exp(-static_cast<double>(std::llabs(j)) /
                  static_cast<double>(n));
}

// a_j^2 / (1 + a_j^2) for t = e^{-|j|/n}; always in (0, 1/2]
double conditioned_weight(std::int64_t n, double t) {
  const double a2 = std::exp(-2.0 * static_cast<double>(n) * t);
  return a2 / (1.0 + a2);
}

// log of sum_{|j| > radius} e^{-|j|/n}
double log_two_sided_tail(std::int64_t radius, std::int64_t n) {
  return std::log(2.0) +
         log_geometric_tail(radius, 1.0 / static_cast<double>(n));
}

// A = bound + e^bound; log C'' = A + log A bounds the expansion constant of
// the coefficient-ratio estimate without overflowing for large bounds
double log_ratio_constant(std::int64_t bound) {
  const double a =
      static_cast<double>(bound) + std::exp(static_cast<double>(bound));
  return a + std::log(a);
}

std::int64_t initial_radius(std::int64_t n, double eps, double log_constant) {
  const double nn = static_cast<double>(n);
  const double guess =
      std::ceil(nn * (std::log(nn) + std::log(1.0 / eps) +
                      std::max(log_constant, 0.0) + 2.0));
  return std::max<std::int64_t>(static_cast<std::int64_t>(guess), 1);
}

TruncatedValue refine_until(std::int64_t n, const WobblingMap& g, double eps,
                            double log_constant,
                            TruncatedValue (*at)(std::int64_t,
                                                 const WobblingMap&,
                                                 std::int64_t)) {
  std::int64_t radius = initial_radius(n, eps, log_constant);
  while (radius <= kMaxTruncationRadius) {
    const TruncatedValue tv = at(n, g, radius);
    if (tv.error_bound <= eps) return tv;
    radius *= 2;
  }
  throw precision_error("requested tolerance needs an impractical radius");
}

}  // namespace

double coefficient(std::int64_t n, std::int64_t j) {
  require_n(n);
  return std::exp(-static_cast<double>(n) * decay(n, j));
}

double conditioned_norm_ratio(std::int64_t n) {
  require_n(n);
  return 1.0 / (1.0 + std::exp(-2.0 * static_cast<double>(n)));
}

TruncatedValue correlation_ratio_at(std::int64_t n, const WobblingMap& g,
                                    std::int64_t radius) {
  require_n(n);
  if (radius < 0) throw construction_error("radius must be >= 0");
  const double nn = static_cast<double>(n);
  CompensatedSum log_product;
  for (std::int64_t j = -radius; j <= radius; ++j) {
    const std::int64_t displaced = std::llabs(evaluate(g, j)) - std::llabs(j);
    if (displaced == 0) continue;
    const double t = decay(n, j);
    const double x =
        -nn * t * std::expm1(-static_cast<double>(displaced) / nn);
    const double z = conditioned_weight(n, t) * std::expm1(x);
    log_product.add(std::log1p(z));
  }
  TruncatedValue tv;
  tv.value = std::exp(log_product.value());
  tv.truncation_radius = radius;
  if (g.bound() == 0) {
    tv.error_bound = 0.0;
    return tv;
  }
  // |log(1+z_j)| <= 2|z_j| <= 2 C'' e^{-|j|/n} once C'' e^{-(J+1)/n} <= 1/2
  const double log_cpp = log_ratio_constant(g.bound());
  const bool factor_valid =
      log_cpp - static_cast<double>(radius + 1) / nn <= std::log(0.5);
  if (!factor_valid) {
    tv.error_bound = std::numeric_limits<double>::infinity();
    return tv;
  }
  const double log_tail =
      std::log(2.0) + log_cpp + log_two_sided_tail(radius, n);
  tv.error_bound = std::max(tv.value, 1.0) * std::expm1(std::exp(log_tail));
  return tv;
}

TruncatedValue correlation_ratio(std::int64_t n, const WobblingMap& g,
                                 double eps) {
  require_n(n);
  if (eps <= 0.0) throw construction_error("eps must be > 0");
  if (eps < kEpsFloor) {
    throw precision_error("eps below the double certification floor");
  }
  if (g.bound() == 0) return TruncatedValue{1.0, 0.0, 0};
  return refine_until(n, g, eps, log_ratio_constant(g.bound()),
                      &correlation_ratio_at);
}

TruncatedValue F_n_at(std::int64_t n, const WobblingMap& g,
                      std::int64_t radius) {
  require_n(n);
  if (radius < 0) throw construction_error("radius must be >= 0");
  CompensatedSum sum;
  for (std::int64_t j = -radius; j <= radius; ++j) {
    const std::int64_t displaced = std::llabs(evaluate(g, j)) - std::llabs(j);
    if (displaced == 0) continue;
    const double t = decay(n, j);
    sum.add(conditioned_weight(n, t) * t * static_cast<double>(displaced));
  }
  TruncatedValue tv;
  tv.value = sum.value();
  tv.truncation_radius = radius;
  if (g.bound() == 0) {
    tv.error_bound = 0.0;
    return tv;
  }
  // conditioned weight <= 1/2, displacement <= bound
  const double log_tail = std::log(static_cast<double>(g.bound())) -
                          std::log(2.0) + log_two_sided_tail(radius, n);
  tv.error_bound = std::exp(log_tail);
  return tv;
}

TruncatedValue F_n(std::int64_t n, const WobblingMap& g, double eps) {
  require_n(n);
  if (eps <= 0.0) throw construction_error("eps must be > 0");
  if (eps < kEpsFloor) {
    throw precision_error("eps below the double certification floor");
  }
  if (g.bound() == 0) return TruncatedValue{0.0, 0.0, 0};
  return refine_until(n, g, eps,
                      std::log(static_cast<double>(g.bound())), &F_n_at);
}

std::vector<ProfileEntry> b_profile(const WobblingMap& g, std::int64_t u_max) {
  if (u_max < 0) throw construction_error("u_max must be >= 0");
  std::vector<ProfileEntry> profile;
  profile.reserve(static_cast<std::size_t>(u_max + 1));
  std::int64_t running = 0;
  for (std::int64_t j = 0; j <= u_max; ++j) {
    const std::int64_t b =
        j == 0 ? std::llabs(evaluate(g, 0))
               : std::llabs(evaluate(g, j)) + std::llabs(evaluate(g, -j)) -
                     2 * j;
    running += b;
    profile.push_back(ProfileEntry{j, b, running});
  }
  return profile;
}

ProfileBoundReport check_lemma_B(const WobblingMap& g,
                                 const std::vector<std::int64_t>& u_grid) {
  const std::int64_t bound = g.bound();
  std::int64_t u_max = 0;
  for (const std::int64_t u : u_grid) {
    if (u <= bound) {
      throw construction_error("grid points must exceed the bound");
    }
    u_max = std::max(u_max, u);
  }
  const auto profile = b_profile(g, u_max);
  const double lo = -2.0 * static_cast<double>(bound * bound);
  const double hi = 4.0 * static_cast<double>(bound * bound);
  ProfileBoundReport report;
  report.margin = std::numeric_limits<double>::infinity();
  for (const std::int64_t u : u_grid) {
    const auto sum =
        static_cast<double>(profile[static_cast<std::size_t>(u)].running_sum);
    const double margin = std::min(sum - lo, hi - sum);
    if (margin < report.margin) {
      report.margin = margin;
      report.worst_u = u;
      report.worst_sum = profile[static_cast<std::size_t>(u)].running_sum;
    }
  }
  if (u_grid.empty()) report.margin = 0.0;
  report.pass = report.margin >= 0.0;
  return report;
}

SumBoundReport check_lemma_sum(std::int64_t n) {
  require_n(n);
  const double nn = static_cast<double>(n);
  const auto radius =
      static_cast<std::int64_t>(std::ceil(nn * (std::log(nn) + 45.0)));
  CompensatedSum s1;
  CompensatedSum s2;
  for (std::int64_t j = -radius; j <= radius; ++j) {
    const double t = decay(n, j);
    const double a = std::exp(-nn * t);
    s1.add(a * t);
    s2.add(a * a * t * t);
  }
  // summands are below e^{-|j|/n} and e^{-2|j|/n} respectively
  const double tail1 = std::exp(log_two_sided_tail(radius, n));
  const double tail2 =
      2.0 * std::exp(log_geometric_tail(radius, 2.0 / nn));
  SumBoundReport report;
  report.s1 = s1.value();
  report.s2 = s2.value();
  report.pass =
      report.s1 + tail1 <= 3.0 && report.s2 + tail2 <= 1.0 / nn;
  return report;
}

LogBoundReport check_log_inequality(const std::vector<double>& z_grid) {
  LogBoundReport report;
  report.worst_margin = std::numeric_limits<double>::infinity();
  for (const double z : z_grid) {
    if (z < -0.5) throw construction_error("z must be >= -1/2");
    const double log_value = std::log1p(z);
    const double upper_margin = z - log_value;
    const double lower_margin =
        log_value - (z - kLogQuadraticConstant * z * z);
    const double margin = std::min(upper_margin, lower_margin);
    if (margin < report.worst_margin) {
      report.worst_margin = margin;
      report.worst_z = z;
    }
  }
  if (z_grid.empty()) report.worst_margin = 0.0;
  // both sides are exact equalities at z = 0; tolerate rounding there
  report.pass = report.worst_margin >= -1e-14;
  return report;
}

ExpansionRemainders eta_theta(const WobblingMap& g, std::int64_t n,
                              std::int64_t j) {
  require_n(n);
  const double nn = static_cast<double>(n);
  const auto displaced =
      static_cast<double>(std::llabs(evaluate(g, j)) - std::llabs(j));
  ExpansionRemainders r;
  r.eta = -nn * std::expm1(-displaced / nn) - displaced;
  const double t = decay(n, j);
  const double x = t * (displaced + r.eta);
  r.theta = std::expm1(x) - x;
  const double b = static_cast<double>(g.bound());
  const double eta_cap = std::exp(b) / nn;
  const double theta_cap = std::exp(b + std::exp(b)) * t * t;
  r.bounds_pass =
      std::abs(r.eta) <= eta_cap && std::abs(r.theta) <= theta_cap;
  return r;
}

Sum2Decomposition decompose_sum2(std::int64_t n, const WobblingMap& g,
                                 double eps) {
  require_n(n);
  if (eps <= 0.0) throw construction_error("eps must be > 0");
  if (eps < kEpsFloor) {
    throw precision_error("eps below the double certification floor");
  }
  Sum2Decomposition out;
  if (g.bound() == 0) return out;
  const double nn = static_cast<double>(n);
  const double b = static_cast<double>(g.bound());
  const double log_cp = b + std::exp(b);  // log C'
  std::int64_t radius =
      initial_radius(n, eps, log_ratio_constant(g.bound()) + 1.0);
  for (;; radius *= 2) {
    if (radius > kMaxTruncationRadius) {
      throw precision_error("requested tolerance needs an impractical radius");
    }
    const double tail_main =
        std::exp(std::log(b) - std::log(2.0) + log_two_sided_tail(radius, n));
    const double tail_eta =
        std::exp(b) / nn * 0.5 * std::exp(log_two_sided_tail(radius, n));
    const double tail_theta =
        std::exp(log_cp) * std::exp(log_geometric_tail(radius, 2.0 / nn));
    if (std::max({tail_main, tail_eta, tail_theta}) <= eps) break;
  }
  CompensatedSum main;
  CompensatedSum eta_sum;
  CompensatedSum theta_sum;
  for (std::int64_t j = -radius; j <= radius; ++j) {
    const auto displaced =
        static_cast<double>(std::llabs(evaluate(g, j)) - std::llabs(j));
    const double t = decay(n, j);
    const double w = conditioned_weight(n, t);
    const double eta = -nn * std::expm1(-displaced / nn) - displaced;
    const double x = t * (displaced + eta);
    main.add(w * t * displaced);
    eta_sum.add(w * t * eta);
    theta_sum.add(w * (std::expm1(x) - x));
  }
  out.main = main.value();
  out.eta_term = eta_sum.value();
  out.theta_term = theta_sum.value();
  out.truncation_radius = radius;
  return out;
}

AbelReport abel_check(const WobblingMap& g, std::int64_t n, std::int64_t N) {
  require_n(n);
  if (N < 1) throw construction_error("N must be >= 1");
  const auto psi = [n](std::int64_t j) {
    const double t = decay(n, j);
    return conditioned_weight(n, t) * t;
  };
  const auto profile = b_profile(g, N);
  CompensatedSum lhs;
  for (std::int64_t j = 0; j <= N; ++j) {
    lhs.add(psi(j) * static_cast<double>(profile[static_cast<std::size_t>(j)].b));
  }
  CompensatedSum integral;  // exact: B is constant on [j, j+1)
  for (std::int64_t j = 0; j < N; ++j) {
    integral.add(
        static_cast<double>(profile[static_cast<std::size_t>(j)].running_sum) *
        (psi(j + 1) - psi(j)));
  }
  AbelReport report;
  report.lhs = lhs.value();
  report.rhs =
      psi(N) * static_cast<double>(profile[static_cast<std::size_t>(N)]
                                       .running_sum) -
      integral.value();
  report.pass = std::abs(report.lhs - report.rhs) <= 1e-10;
  return report;
}

}  // namespace fgl
