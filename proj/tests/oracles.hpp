// Independent oracles used by the unit and acceptance suites. These
// deliberately avoid the library's own computation paths: the truncation
// oracle runs a two-sided Jacobi eigensolve of Z^T Z instead of randomized
// subspace iteration, and the quality oracle re-evaluates the closed form in
// extended precision.
#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "mipslsh/linalg.hpp"

namespace mipslsh::oracles {

// Rank-f truncation Z V_f V_f^T from the top-f eigenvectors of Z^T Z.
inline Matrix jacobi_truncation(const Matrix& Z, std::size_t f) {
    const std::size_t n = Z.cols;
    Matrix G = matmul_transA(Z, Z);
    Matrix V(n, n);
    for (std::size_t i = 0; i < n; ++i) V.at(i, i) = 1.0;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                off += G.at(p, q) * G.at(p, q);
                if (std::abs(G.at(p, q)) < 1e-300) continue;
                const double theta =
                    0.5 * std::atan2(2.0 * G.at(p, q), G.at(q, q) - G.at(p, p));
                const double c = std::cos(theta), s = std::sin(theta);
                for (std::size_t i = 0; i < n; ++i) {
                    const double gip = G.at(i, p), giq = G.at(i, q);
                    G.at(i, p) = c * gip - s * giq;
                    G.at(i, q) = s * gip + c * giq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double gpi = G.at(p, i), gqi = G.at(q, i);
                    G.at(p, i) = c * gpi - s * gqi;
                    G.at(q, i) = s * gpi + c * gqi;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double vip = V.at(i, p), viq = V.at(i, q);
                    V.at(i, p) = c * vip - s * viq;
                    V.at(i, q) = s * vip + c * viq;
                }
            }
        }
        if (off < 1e-24) break;
    }
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return G.at(a, a) > G.at(b, b); });
    Matrix Vf(n, f);
    for (std::size_t j = 0; j < f; ++j)
        for (std::size_t i = 0; i < n; ++i) Vf.at(i, j) = V.at(i, order[j]);
    return matmul(matmul(Z, Vf), transpose(Vf));
}

// Closed-form hashing quality of the symmetric scheme in extended precision.
inline long double rho_simple_ext(long double S, long double c) {
    const long double pi = 3.14159265358979323846264338327950288L;
    const long double p1 = 1.0L - std::acos(S) / pi;
    const long double p2 = 1.0L - std::acos(c * S) / pi;
    return std::log(p1) / std::log(p2);
}

}  // namespace mipslsh::oracles
