#include "mipslsh/rho.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>

#include "mipslsh/collision.hpp"

namespace mipslsh {

GridSpec GridSpec::default_grid() {
    GridSpec g;
    for (int m = 1; m <= 6; ++m) g.m_values.push_back(m);
    for (int i = 1; i <= 99; ++i) g.U_values.push_back(i / 100.0);
    for (int i = 1; i <= 50; ++i) g.r_values.push_back(i / 10.0);
    return g;
}

double pow_2m1(double x, int m) {
    double p = x * x;
    for (int k = 0; k < m; ++k) p *= p;
    return p;
}

double sign_alpha(int m) {
    const double e = std::pow(2.0, m + 1);
    return std::pow((m / 2.0) / (e - 2.0), 1.0 / e);
}

RhoResult rho_simple(const ThresholdPair& t) {
    if (t.S >= 1.0) throw std::invalid_argument("rho_simple: requires S < 1");
    RhoResult res;
    res.feasible = true;
    res.p1 = sign_collision(t.S);
    res.p2 = sign_collision(t.cS());
    res.rho = std::log(res.p1) / std::log(res.p2);
    return res;
}

namespace {

void check_grid(const GridSpec& grid, bool need_r) {
    if (grid.m_values.empty() || grid.U_values.empty() || (need_r && grid.r_values.empty()))
        throw std::invalid_argument("empty parameter grid");
    for (int m : grid.m_values)
        if (m < 1) throw std::invalid_argument("grid: m must be >= 1");
    for (double U : grid.U_values)
        if (!(U > 0.0 && U < 1.0)) throw std::invalid_argument("grid: U must be in (0,1)");
    if (need_r)
        for (double r : grid.r_values)
            if (!(r > 0.0)) throw std::invalid_argument("grid: r must be positive");
}

}  // namespace

RhoResult rho_l2alsh(const ThresholdPair& t, const GridSpec& grid) {
    check_grid(grid, /*need_r=*/true);
    const double S = t.S, cS = t.cS();
    RhoResult best;
    best.rho = std::numeric_limits<double>::infinity();
    for (int m : grid.m_values) {
        for (double U : grid.U_values) {
            const double d1_sq = 1.0 + m / 4.0 + pow_2m1(U, m) - 2.0 * S * U;
            const double d2_sq = 1.0 + m / 4.0 + pow_2m1(cS * U, m) - 2.0 * cS * U;
            if (!(d1_sq < d2_sq)) continue;  // p1 <= p2 for every r
            const double d1 = std::sqrt(d1_sq), d2 = std::sqrt(d2_sq);
            for (double r : grid.r_values) {
                const double p1 = l2_collision(d1, r);
                const double p2 = l2_collision(d2, r);
                if (!(p1 > p2) || p1 >= 1.0 || p2 <= 0.0) continue;
                const double rho = std::log(p1) / std::log(p2);
                if (rho < best.rho) {
                    best.feasible = true;
                    best.rho = rho;
                    best.p1 = p1;
                    best.p2 = p2;
                    best.m = m;
                    best.U = U;
                    best.r = r;
                }
            }
        }
    }
    if (!best.feasible) best.rho = 0.0;
    return best;
}

RhoResult rho_signalsh(const ThresholdPair& t, const GridSpec& grid) {
    check_grid(grid, /*need_r=*/false);
    const double S = t.S, cS = t.cS();
    RhoResult best;
    best.rho = std::numeric_limits<double>::infinity();
    for (int m : grid.m_values) {
        const double alpha = sign_alpha(m);
        for (double U : grid.U_values) {
            const double cos_min = S * U / std::sqrt(m / 4.0 + pow_2m1(U, m));
            const double z = std::min(cS * U, alpha);
            const double cos_max = z / std::sqrt(m / 4.0 + pow_2m1(z, m));
            if (!(cos_min > cos_max)) continue;
            const double p1 = sign_collision(cos_min);
            const double p2 = sign_collision(cos_max);
            if (!(p1 > p2) || p1 >= 1.0 || p2 <= 0.0) continue;
            const double rho = std::log(p1) / std::log(p2);
            if (rho < best.rho) {
                best.feasible = true;
                best.rho = rho;
                best.p1 = p1;
                best.p2 = p2;
                best.m = m;
                best.U = U;
            }
        }
    }
    if (!best.feasible) best.rho = 0.0;
    return best;
}

namespace {

std::string g10(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::string rho_field(const RhoResult& r) {
    return r.feasible ? g10(r.rho) : "inf";
}

}  // namespace

void emit_rho_curves(const std::vector<double>& S_values, const std::vector<double>& c_values,
                     const GridSpec& grid, std::ostream& out) {
    if (S_values.empty()) throw std::invalid_argument("emit_rho_curves: empty S list");
    if (c_values.empty()) throw std::invalid_argument("emit_rho_curves: empty c list");
    for (double S : S_values)
        if (!(S > 0.0 && S < 1.0))
            throw std::invalid_argument("emit_rho_curves: S values must be in (0,1)");
    for (double c : c_values)
        if (!(c > 0.0 && c < 1.0))
            throw std::invalid_argument("emit_rho_curves: c values must be in (0,1)");

    out << "S,c,rho_simple,rho_l2alsh,m_l2,U_l2,r_l2,rho_signalsh,m_sign,U_sign\n";
    for (double S : S_values) {
        for (double c : c_values) {
            const ThresholdPair t(S, c);
            const RhoResult rs = rho_simple(t);
            const RhoResult rl = rho_l2alsh(t, grid);
            const RhoResult rg = rho_signalsh(t, grid);
            out << g10(S) << ',' << g10(c) << ',' << rho_field(rs) << ',' << rho_field(rl) << ','
                << rl.m.value_or(0) << ',' << g10(rl.U.value_or(0.0)) << ','
                << g10(rl.r.value_or(0.0)) << ',' << rho_field(rg) << ',' << rg.m.value_or(0)
                << ',' << g10(rg.U.value_or(0.0)) << '\n';
        }
    }
}

}  // namespace mipslsh
