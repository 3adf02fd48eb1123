#pragma once

#include <cmath>

#include "mipslsh/core.hpp"
#include "mipslsh/rng.hpp"

namespace mipslsh {

inline Vec random_unit_vec(Rng& rng, std::size_t d) {
    Vec v(d);
    double n = 0.0;
    do {
        n = 0.0;
        for (double& x : v) {
            x = rng.next_gaussian();
            n += x * x;
        }
    } while (n == 0.0);
    n = std::sqrt(n);
    for (double& x : v) x /= n;
    return v;
}

// Uniform in the unit ball: uniform direction, radius u^(1/d).
inline Vec random_ball_vec(Rng& rng, std::size_t d) {
    Vec v = random_unit_vec(rng, d);
    const double radius = std::pow(rng.next_unit(), 1.0 / static_cast<double>(d));
    for (double& x : v) x *= radius;
    return v;
}

}  // namespace mipslsh
