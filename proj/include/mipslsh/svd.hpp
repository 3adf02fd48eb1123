#pragma once

#include <cstdint>

#include "mipslsh/linalg.hpp"

namespace mipslsh {

// Z ~ W diag(sigma) V^T with orthonormal W (rows x f) and V (cols x f),
// sigma descending.
struct SvdResult {
    Matrix W;
    std::vector<double> sigma;
    Matrix V;
};

// Rank-f truncated SVD by randomized subspace iteration: a seeded Gaussian
// sketch of the range, a few power iterations with re-orthonormalization,
// then an exact small factorization of the projected matrix (one-sided Jacobi).
// The sketch width is f + oversample capped at min(rows, cols); at the cap
// the subspace spans the full column space, so small inputs factor exactly.
SvdResult truncated_svd(const Matrix& Z, std::size_t f, std::uint64_t seed,
                        std::size_t oversample = 10, std::size_t power_iters = 7);

}  // namespace mipslsh
