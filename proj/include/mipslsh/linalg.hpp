#pragma once

#include <cstddef>
#include <vector>

namespace mipslsh {

// Row-major dense matrix, just enough for the factorization pipeline.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
    double* row(std::size_t i) { return data.data() + i * cols; }
    const double* row(std::size_t i) const { return data.data() + i * cols; }
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix matmul_transA(const Matrix& a, const Matrix& b);  // a^T b
Matrix matmul_transB(const Matrix& a, const Matrix& b);  // a b^T
Matrix transpose(const Matrix& a);

double frobenius_norm(const Matrix& a);
double frobenius_distance(const Matrix& a, const Matrix& b);

// In-place modified Gram-Schmidt on the columns of `a`. Columns whose
// residual norm falls below `drop_tol` times the largest column norm are
// removed; returns the number of columns kept.
std::size_t orthonormalize_columns(Matrix& a, double drop_tol = 1e-12);

}  // namespace mipslsh
