#include "mipslsh/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace mipslsh {

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matmul: shape mismatch");
    Matrix out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t k = 0; k < a.cols; ++k) {
            const double aik = a.at(i, k);
            if (aik == 0.0) continue;
            const double* brow = b.row(k);
            double* orow = out.row(i);
            for (std::size_t j = 0; j < b.cols; ++j) orow[j] += aik * brow[j];
        }
    }
    return out;
}

Matrix matmul_transA(const Matrix& a, const Matrix& b) {
    if (a.rows != b.rows) throw std::invalid_argument("matmul_transA: shape mismatch");
    Matrix out(a.cols, b.cols);
    for (std::size_t k = 0; k < a.rows; ++k) {
        const double* arow = a.row(k);
        const double* brow = b.row(k);
        for (std::size_t i = 0; i < a.cols; ++i) {
            const double aki = arow[i];
            if (aki == 0.0) continue;
            double* orow = out.row(i);
            for (std::size_t j = 0; j < b.cols; ++j) orow[j] += aki * brow[j];
        }
    }
    return out;
}

Matrix matmul_transB(const Matrix& a, const Matrix& b) {
    if (a.cols != b.cols) throw std::invalid_argument("matmul_transB: shape mismatch");
    Matrix out(a.rows, b.rows);
    for (std::size_t i = 0; i < a.rows; ++i) {
        const double* arow = a.row(i);
        for (std::size_t j = 0; j < b.rows; ++j) {
            const double* brow = b.row(j);
            double s = 0.0;
            for (std::size_t k = 0; k < a.cols; ++k) s += arow[k] * brow[k];
            out.at(i, j) = s;
        }
    }
    return out;
}

Matrix transpose(const Matrix& a) {
    Matrix out(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) out.at(j, i) = a.at(i, j);
    return out;
}

double frobenius_norm(const Matrix& a) {
    double s = 0.0;
    for (double v : a.data) s += v * v;
    return std::sqrt(s);
}

double frobenius_distance(const Matrix& a, const Matrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("frobenius_distance: shape mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        const double d = a.data[i] - b.data[i];
        s += d * d;
    }
    return std::sqrt(s);
}

std::size_t orthonormalize_columns(Matrix& a, double drop_tol) {
    const std::size_t n = a.rows;
    std::size_t kept = 0;
    double max_norm = 0.0;
    for (std::size_t j = 0; j < a.cols; ++j) {
        double nj = 0.0;
        for (std::size_t i = 0; i < n; ++i) nj += a.at(i, j) * a.at(i, j);
        max_norm = std::max(max_norm, std::sqrt(nj));
    }
    if (max_norm == 0.0) {
        a = Matrix(n, 0);
        return 0;
    }
    for (std::size_t j = 0; j < a.cols; ++j) {
        // project out previously kept columns, twice for stability
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t c = 0; c < kept; ++c) {
                double proj = 0.0;
                for (std::size_t i = 0; i < n; ++i) proj += a.at(i, c) * a.at(i, j);
                for (std::size_t i = 0; i < n; ++i) a.at(i, j) -= proj * a.at(i, c);
            }
        }
        double nj = 0.0;
        for (std::size_t i = 0; i < n; ++i) nj += a.at(i, j) * a.at(i, j);
        nj = std::sqrt(nj);
        if (nj <= drop_tol * max_norm) continue;
        for (std::size_t i = 0; i < n; ++i) a.at(i, kept) = a.at(i, j) / nj;
        ++kept;
    }
    Matrix out(n, kept);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < kept; ++j) out.at(i, j) = a.at(i, j);
    a = std::move(out);
    return kept;
}

}  // namespace mipslsh
