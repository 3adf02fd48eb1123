#include "mipslsh/svd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "mipslsh/rng.hpp"

namespace mipslsh {

namespace {

// One-sided Jacobi: A (n x k) = U diag(sigma) V^T with U n x k (orthonormal
// columns, zero where sigma is zero) and V k x k. Rotations act on column
// pairs of A and accumulate into V.
void one_sided_jacobi(Matrix A, Matrix& U, std::vector<double>& sigma, Matrix& V) {
    const std::size_t n = A.rows, k = A.cols;
    V = Matrix(k, k);
    for (std::size_t i = 0; i < k; ++i) V.at(i, i) = 1.0;

    const double tol = 1e-14;
    const int max_sweeps = 60;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < k; ++p) {
            for (std::size_t q = p + 1; q < k; ++q) {
                double app = 0.0, aqq = 0.0, apq = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    const double x = A.at(i, p), y = A.at(i, q);
                    app += x * x;
                    aqq += y * y;
                    apq += x * y;
                }
                if (std::abs(apq) <= tol * std::sqrt(app * aqq) || apq == 0.0) continue;
                rotated = true;
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double cs = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = cs * t;
                for (std::size_t i = 0; i < n; ++i) {
                    const double x = A.at(i, p), y = A.at(i, q);
                    A.at(i, p) = cs * x - sn * y;
                    A.at(i, q) = sn * x + cs * y;
                }
                for (std::size_t i = 0; i < k; ++i) {
                    const double x = V.at(i, p), y = V.at(i, q);
                    V.at(i, p) = cs * x - sn * y;
                    V.at(i, q) = sn * x + cs * y;
                }
            }
        }
        if (!rotated) break;
    }

    sigma.assign(k, 0.0);
    U = Matrix(n, k);
    for (std::size_t j = 0; j < k; ++j) {
        double nj = 0.0;
        for (std::size_t i = 0; i < n; ++i) nj += A.at(i, j) * A.at(i, j);
        nj = std::sqrt(nj);
        sigma[j] = nj;
        if (nj > 0.0)
            for (std::size_t i = 0; i < n; ++i) U.at(i, j) = A.at(i, j) / nj;
    }
}

}  // namespace

SvdResult truncated_svd(const Matrix& Z, std::size_t f, std::uint64_t seed,
                        std::size_t oversample, std::size_t power_iters) {
    const std::size_t min_dim = std::min(Z.rows, Z.cols);
    if (f < 1 || f > min_dim)
        throw std::invalid_argument("truncated_svd: f must be in [1, min(rows, cols)]");

    const std::size_t sketch = std::min(f + oversample, min_dim);
    Matrix omega(Z.cols, sketch);
    Rng rng(seed);
    for (double& v : omega.data) v = rng.next_gaussian();

    Matrix Q = matmul(Z, omega);
    orthonormalize_columns(Q);
    for (std::size_t it = 0; it < power_iters; ++it) {
        Matrix Y = matmul_transA(Z, Q);  // Z^T Q
        orthonormalize_columns(Y);
        Q = matmul(Z, Y);
        orthonormalize_columns(Q);
    }
    if (Q.cols == 0) {
        // all-zero input: factors are zero, any orthonormal basis works
        SvdResult res;
        res.W = Matrix(Z.rows, f);
        res.sigma.assign(f, 0.0);
        res.V = Matrix(Z.cols, f);
        return res;
    }

    const Matrix B = matmul_transA(Q, Z);  // sketch x cols

    Matrix Vb, Ub_small;
    std::vector<double> sig;
    one_sided_jacobi(transpose(B), Vb, sig, Ub_small);  // B^T = Vb diag Ub_small^T

    // descending order
    std::vector<std::size_t> order(sig.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return sig[a] > sig[b]; });

    const Matrix W_full = matmul(Q, Ub_small);  // rows x sketch_eff

    SvdResult res;
    res.W = Matrix(Z.rows, f);
    res.V = Matrix(Z.cols, f);
    res.sigma.assign(f, 0.0);
    const std::size_t take = std::min(f, sig.size());
    for (std::size_t j = 0; j < take; ++j) {
        const std::size_t src = order[j];
        res.sigma[j] = sig[src];
        for (std::size_t i = 0; i < Z.rows; ++i) res.W.at(i, j) = W_full.at(i, src);
        for (std::size_t i = 0; i < Z.cols; ++i) res.V.at(i, j) = Vb.at(i, src);
    }
    return res;
}

}  // namespace mipslsh
