#pragma once

// Closed-form statistics of bundled hypervectors: binomial densities,
// negligible-tail bounds, majority-sum noise, bundle capacity, expected
// overlap distance, and sensitivity.

#include <cstddef>

namespace hologn::analysis {

// Which density model backs the tail bounds: the de Moivre-Laplace Gaussian
// kernel (default) or the exact log-space binomial.
enum class PmfEngine { approx, exact };

struct DensityBounds {
  std::size_t k_minus = 0;
  std::size_t k_plus = 0;
};

// Exact binomial pmf C(d,k) p^k (1-p)^(d-k), evaluated in log space.
double binom_pmf(std::size_t k, std::size_t d, double p);

// Gaussian approximation of the binomial pmf. Requires d*p*(1-p) >= 9
// unless enforce_guard is false (then the caller owns the accuracy loss).
double binom_pmf_approx(std::size_t k, std::size_t d, double p, bool enforce_guard = true);

// Largest k below the mean and smallest k above it whose pmf drops to thr
// or below. thr must sit below the distribution's peak.
DensityBounds density_bounds(std::size_t d, double p, double thr,
                             PmfEngine engine = PmfEngine::approx);

// Probability that a component's bit is flipped in a majority bundle of n
// independent random vectors: 1/2 - C(n-1,(n-1)/2)/2^n. n must be odd.
double majority_noise(std::size_t n);

// Largest odd component count whose majority noise stays statistically
// separable from a random vector at threshold thr.
std::size_t capacity(std::size_t d, double thr, PmfEngine engine = PmfEngine::approx);

// Expected normalized Hamming distance between bundles of m and n components
// sharing exactly c. m and n must be odd, c <= min(m, n). Output in [0, 0.5].
double overlap_distance(std::size_t c, std::size_t m, std::size_t n);

// Smallest common component count c whose overlap distance is separable from
// 0.5 at threshold thr; c is scanned over odd values, mirroring the odd-n
// capacity scan. Even m or n is bumped to the next odd value.
std::size_t sensitivity(std::size_t d, double thr, std::size_t m, std::size_t n,
                        PmfEngine engine = PmfEngine::approx);

}  // namespace hologn::analysis
