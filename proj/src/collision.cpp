#include "mipslsh/collision.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mipslsh/hashers.hpp"
#include "mipslsh/rng.hpp"

namespace mipslsh {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double sign_collision(double cos_sim) {
    if (cos_sim > 1.0 + 1e-12 || cos_sim < -1.0 - 1e-12)
        throw std::invalid_argument("sign_collision: cosine outside [-1,1]");
    const double c = cos_sim > 1.0 ? 1.0 : (cos_sim < -1.0 ? -1.0 : cos_sim);
    return 1.0 - std::acos(c) / std::numbers::pi;
}

double l2_collision(double delta, double r) {
    if (delta < 0.0) throw std::invalid_argument("l2_collision: delta must be nonnegative");
    if (!(r > 0.0)) throw std::invalid_argument("l2_collision: r must be positive");
    if (delta == 0.0) return 1.0;
    const double t = r / delta;
    const double sqrt_2pi = std::sqrt(2.0 * std::numbers::pi);
    return 1.0 - 2.0 * normal_cdf(-t) - 2.0 / (sqrt_2pi * t) * (1.0 - std::exp(-0.5 * t * t));
}

namespace {

double cosine(const Vec& a, const Vec& b) {
    const double na = norm(a), nb = norm(b);
    if (na == 0.0 || nb == 0.0)
        throw std::invalid_argument("cosine undefined for a zero transformed vector");
    double c = dot(a, b) / (na * nb);
    // dot/norm rounding can land ~1e-16 outside [-1,1]
    if (c > 1.0) c = 1.0;
    if (c < -1.0) c = -1.0;
    return c;
}

}  // namespace

double analytic_collision(Scheme s, const L2AlshParams& l2, const SignAlshParams& sign,
                          const Vec& x, const Vec& q) {
    const Vec px = transform_point(s, l2, sign, x, /*query_side=*/false);
    const Vec qq = transform_point(s, l2, sign, q, /*query_side=*/true);
    if (s == Scheme::l2_alsh_sl)
        return l2_collision(std::sqrt(squared_distance(px, qq)), l2.r);
    return sign_collision(cosine(px, qq));
}

MonteCarloEstimate monte_carlo_collision(Scheme s, const L2AlshParams& l2,
                                         const SignAlshParams& sign, const Vec& x, const Vec& q,
                                         std::uint64_t n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("monte_carlo_collision: n must be >= 1");
    const Vec px = transform_point(s, l2, sign, x, /*query_side=*/false);
    const Vec qq = transform_point(s, l2, sign, q, /*query_side=*/true);
    const std::size_t dim = px.size();

    std::uint64_t hits = 0;
    Vec a(dim);
    for (std::uint64_t i = 0; i < n; ++i) {
        Rng rng = Rng::substream(seed, i);
        for (double& v : a) v = rng.next_gaussian();
        if (s == Scheme::l2_alsh_sl) {
            const double b = rng.next_uniform(0.0, l2.r);
            if (l2_symbol(px, a, b, l2.r) == l2_symbol(qq, a, b, l2.r)) ++hits;
        } else {
            if (sign_bit(px, a) == sign_bit(qq, a)) ++hits;
        }
    }
    const double p_hat = static_cast<double>(hits) / static_cast<double>(n);
    return {p_hat, std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(n))};
}

}  // namespace mipslsh
