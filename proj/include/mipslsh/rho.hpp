#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "mipslsh/core.hpp"

namespace mipslsh {

// Optimal-quality result for one (S, c). `feasible` is false when no grid
// point yields p1 > p2; that outcome is expected for some thresholds and is
// not an error.
struct RhoResult {
    bool feasible = false;
    double rho = 0.0;
    double p1 = 0.0;
    double p2 = 0.0;
    std::optional<int> m;
    std::optional<double> U;
    std::optional<double> r;
};

// Parameter grid for the two tuned schemes. The published experiments only
// say "grid search"; this default is a superset reconstruction wide enough to
// contain the operating points reported for them (m=3, U~0.83, r=2.5).
struct GridSpec {
    std::vector<int> m_values;
    std::vector<double> U_values;
    std::vector<double> r_values;

    // m in 1..6, U in 0.01..0.99 step 0.01, r in 0.1..5.0 step 0.1
    static GridSpec default_grid();
};

// Closed-form quality of the symmetric hash:
//   rho = log(1 - acos(S)/pi) / log(1 - acos(cS)/pi),  0 < S < 1.
RhoResult rho_simple(const ThresholdPair& t);

// Grid-searched quality of the quantized asymmetric hash. Per grid point:
//   p1 = F_r(sqrt(1 + m/4 + U^(2^(m+1)) - 2SU))        worst similar pair (||x|| = 1, q.x = S)
//   p2 = F_r(sqrt(1 + m/4 + (cSU)^(2^(m+1)) - 2cSU))   best dissimilar pair (x = cS q)
// Both radicands are exact extrema of the transformed distance over their
// constraint sets, so the ratio is the tightest quality the scheme can
// guarantee. Infeasible points (p1 <= p2) are skipped.
RhoResult rho_l2alsh(const ThresholdPair& t, const GridSpec& grid);

// Grid-searched quality of the sign-hash asymmetric scheme (r unused).
// Writing g(z) = z / sqrt(m/4 + z^(2^(m+1))):
//   p1 = sign_collision(S U / sqrt(m/4 + U^(2^(m+1))))
//   p2 = sign_collision(g(min(cSU, alpha_m)))
// where alpha_m = ((m/2)/(2^(m+1)-2))^(1/2^(m+1)) is the maximizer of g, so
// p2 covers the whole constraint set {q.x <= cS, ||x|| <= 1} even when cSU
// passes the interior maximum.
RhoResult rho_signalsh(const ThresholdPair& t, const GridSpec& grid);

// x^(2^(m+1)) by repeated squaring.
double pow_2m1(double x, int m);

// Maximizer of z / sqrt(m/4 + z^(2^(m+1))).
double sign_alpha(int m);

// One CSV row per (S, c), header
// S,c,rho_simple,rho_l2alsh,m_l2,U_l2,r_l2,rho_signalsh,m_sign,U_sign.
// Infeasible entries print rho as "inf" with zeroed parameters. Output is
// byte-stable for identical inputs.
void emit_rho_curves(const std::vector<double>& S_values, const std::vector<double>& c_values,
                     const GridSpec& grid, std::ostream& out);

}  // namespace mipslsh
