#include "hologn/analysis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace hologn::analysis {

namespace {

double log_choose(std::size_t n, std::size_t k) {
  return std::lgamma(static_cast<double>(n) + 1.0) -
         std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

// P(Binomial(n, 1/2) in [lo, hi]) in log space, compensated accumulation.
double binom_half_range(std::size_t n, std::size_t lo, std::size_t hi) {
  if (lo > hi) return 0.0;
  if (hi > n) hi = n;
  const double log_half_n = static_cast<double>(n) * std::numbers::ln2;
  double sum = 0.0, comp = 0.0;
  for (std::size_t i = lo; i <= hi; ++i) {
    const double term = std::exp(log_choose(n, i) - log_half_n);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

double pmf_for(std::size_t k, std::size_t d, double p, PmfEngine engine) {
  return engine == PmfEngine::approx ? binom_pmf_approx(k, d, p) : binom_pmf(k, d, p);
}

// k_plus that tolerates degenerate p: p == 0 concentrates all mass at 0, and
// a p too small for the Gaussian guard falls back to the exact pmf.
std::size_t upper_bound_safe(std::size_t d, double p, double thr, PmfEngine engine) {
  if (p <= 0.0) return 0;
  PmfEngine effective = engine;
  if (engine == PmfEngine::approx && static_cast<double>(d) * p * (1.0 - p) < 9.0)
    effective = PmfEngine::exact;
  return density_bounds(d, p, thr, effective).k_plus;
}

}  // namespace

double binom_pmf(std::size_t k, std::size_t d, double p) {
  if (k > d) throw std::out_of_range("binom_pmf: k out of range");
  if (p < 0.0 || p > 1.0) throw std::domain_error("binom_pmf: p outside [0,1]");
  if (p == 0.0) return k == 0 ? 1.0 : 0.0;
  if (p == 1.0) return k == d ? 1.0 : 0.0;
  const double kk = static_cast<double>(k), dd = static_cast<double>(d);
  return std::exp(log_choose(d, k) + kk * std::log(p) + (dd - kk) * std::log1p(-p));
}

double binom_pmf_approx(std::size_t k, std::size_t d, double p, bool enforce_guard) {
  if (k > d) throw std::out_of_range("binom_pmf_approx: k out of range");
  if (p <= 0.0 || p >= 1.0) throw std::domain_error("binom_pmf_approx: p must lie in (0,1)");
  const double variance = static_cast<double>(d) * p * (1.0 - p);
  if (enforce_guard && variance < 9.0)
    throw std::domain_error("binom_pmf_approx: d*p*(1-p) below validity guard");
  const double delta = static_cast<double>(k) - static_cast<double>(d) * p;
  return std::exp(-delta * delta / (2.0 * variance)) / std::sqrt(2.0 * std::numbers::pi * variance);
}

DensityBounds density_bounds(std::size_t d, double p, double thr, PmfEngine engine) {
  if (thr <= 0.0 || thr >= 1.0) throw std::domain_error("density_bounds: thr outside (0,1)");
  const double mean = static_cast<double>(d) * p;
  const auto mode = static_cast<std::size_t>(std::llround(mean));
  if (pmf_for(std::min(mode, d), d, p, engine) <= thr)
    throw std::domain_error("density_bounds: thr at or above the distribution peak");

  DensityBounds out;
  // largest k with pmf <= thr strictly below the mean
  bool found = false;
  for (double k = std::ceil(mean) - 1.0; k >= 0.0; k -= 1.0) {
    if (pmf_for(static_cast<std::size_t>(k), d, p, engine) <= thr) {
      out.k_minus = static_cast<std::size_t>(k);
      found = true;
      break;
    }
  }
  if (!found) throw std::domain_error("density_bounds: no lower bound below thr");
  found = false;
  for (double k = std::floor(mean) + 1.0; k <= static_cast<double>(d); k += 1.0) {
    if (pmf_for(static_cast<std::size_t>(k), d, p, engine) <= thr) {
      out.k_plus = static_cast<std::size_t>(k);
      found = true;
      break;
    }
  }
  if (!found) throw std::domain_error("density_bounds: no upper bound below thr");
  return out;
}

double majority_noise(std::size_t n) {
  if (n % 2 == 0) throw std::domain_error("majority_noise: n must be odd");
  if (n < 1) throw std::domain_error("majority_noise: n must be >= 1");
  if (n == 1) return 0.0;
  // C(n-1, (n-1)/2) is exactly representable in a double up to n = 57;
  // dividing by 2^n is exact, so small n yields the exact rational value
  if (n <= 57) {
    std::vector<std::uint64_t> row{1};
    for (std::size_t r = 1; r <= n - 1; ++r) {
      std::vector<std::uint64_t> next(r + 1, 1);
      for (std::size_t i = 1; i < r; ++i) next[i] = row[i - 1] + row[i];
      row = std::move(next);
    }
    return 0.5 - static_cast<double>(row[(n - 1) / 2]) / std::exp2(static_cast<double>(n));
  }
  const double log_term =
      log_choose(n - 1, (n - 1) / 2) - static_cast<double>(n) * std::numbers::ln2;
  return 0.5 - std::exp(log_term);
}

std::size_t capacity(std::size_t d, double thr, PmfEngine engine) {
  const std::size_t reference = density_bounds(d, 0.5, thr, engine).k_minus;
  std::size_t best = 1;  // a single vector is trivially decodable
  for (std::size_t n = 3; n <= d; n += 2) {
    if (upper_bound_safe(d, majority_noise(n), thr, engine) > reference) break;
    best = n;
  }
  return best;
}

namespace {

// Probability that the majority bit of a bundle of j vectors, c of them shared
// with ||C||_1 = w ones in this column, comes out as 1. j odd.
double majority_one_prob(std::size_t j, std::size_t c, std::size_t w) {
  if (2 * w > j) return 1.0;
  const std::size_t free = j - c;            // non-shared components
  const std::size_t need = (j + 1) / 2 - w;  // ones still required; >= 1 here
  if (free < need) return 0.0;
  return binom_half_range(free, need, free);
}

double majority_zero_prob(std::size_t j, std::size_t c, std::size_t w) {
  return majority_one_prob(j, c, c - w);
}

}  // namespace

double overlap_distance(std::size_t c, std::size_t m, std::size_t n) {
  if (m % 2 == 0 || n % 2 == 0)
    throw std::domain_error("overlap_distance: m and n must be odd");
  if (c > std::min(m, n)) throw std::domain_error("overlap_distance: c exceeds min(m, n)");

  const double log_half_c = static_cast<double>(c) * std::numbers::ln2;
  double sum = 0.0, comp = 0.0;
  for (std::size_t w = 0; w <= c; ++w) {
    const double weight = std::exp(log_choose(c, w) - log_half_c);
    const double term = weight * (majority_one_prob(m, c, w) * majority_zero_prob(n, c, w) +
                                  majority_zero_prob(m, c, w) * majority_one_prob(n, c, w));
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

std::size_t sensitivity(std::size_t d, double thr, std::size_t m, std::size_t n,
                        PmfEngine engine) {
  if (m % 2 == 0) ++m;
  if (n % 2 == 0) ++n;
  const std::size_t reference = density_bounds(d, 0.5, thr, engine).k_minus;
  for (std::size_t c = 1; c <= std::min(m, n); c += 2) {
    const double dist = overlap_distance(c, m, n);
    if (upper_bound_safe(d, dist, thr, engine) <= reference) return c;
  }
  throw std::domain_error("sensitivity: no separable overlap count found");
}

}  // namespace hologn::analysis
