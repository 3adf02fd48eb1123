#pragma once

#include <cstdint>

#include "mipslsh/transforms.hpp"

namespace mipslsh {

// Standard normal CDF via erfc; Phi(0) is exactly 0.5.
double normal_cdf(double x);

// Collision probability of the hyperplane sign hash for two vectors at the
// given cosine: 1 - acos(cos_sim)/pi. Inputs within 1e-12 outside [-1,1] are
// clamped; anything further out is rejected.
double sign_collision(double cos_sim);

// Collision probability F_r(delta) of the quantized L2 hash
// floor((a.z + b)/r) for two points at Euclidean distance delta:
//   F_r(delta) = 1 - 2 Phi(-r/delta) - 2/(sqrt(2 pi) (r/delta)) (1 - exp(-(r/delta)^2/2))
// with F_r(0) = 1. Monotone decreasing in delta.
double l2_collision(double delta, double r);

// Exact per-symbol collision probability for a (data x, query q) pair under a
// scheme: F_r of the transformed distance for the quantized hash, otherwise
// the sign-hash probability at the transformed cosine.
double analytic_collision(Scheme s, const L2AlshParams& l2, const SignAlshParams& sign,
                          const Vec& x, const Vec& q);

struct MonteCarloEstimate {
    double p_hat;
    double stderr_;  // binomial: sqrt(p_hat (1-p_hat) / n)
};

// Empirical collision frequency over n independent hash draws. Draw i uses
// the (seed, i) substream, so the estimate is reproducible and trials could
// be evaluated in any order.
MonteCarloEstimate monte_carlo_collision(Scheme s, const L2AlshParams& l2,
                                         const SignAlshParams& sign, const Vec& x, const Vec& q,
                                         std::uint64_t n, std::uint64_t seed);

}  // namespace mipslsh
