#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "mipslsh/linalg.hpp"
#include "mipslsh/svd.hpp"
#include "mipslsh/transforms.hpp"

namespace mipslsh {

// Rating triples with ids remapped to dense 0-based indices (first-appearance
// order). Duplicate (user, item) pairs keep the last value;
// `duplicates_overwritten` counts how many were replaced.
struct RatingsMatrix {
    std::size_t n_users = 0;
    std::size_t n_items = 0;
    struct Triple {
        std::size_t user;
        std::size_t item;
        double rating;
    };
    std::vector<Triple> triples;
    std::size_t duplicates_overwritten = 0;
};

// Parses `user<delim>item<delim>rating` lines; extra trailing fields (e.g. a
// timestamp) are ignored. Malformed lines are rejected with their line number.
RatingsMatrix ingest_ratings(std::istream& in, char delim = '\t');

// User factors L (n_users x f, equal to W diag(sigma)) and item factors R
// (n_items x f); L R^T is the rank-f approximation.
struct Factorization {
    Matrix L;
    Matrix R;
};

// Rank-f factorization of the zero-filled rating matrix after subtracting the
// global mean of the observed ratings from each observed entry.
Factorization pure_svd(const RatingsMatrix& Z, std::size_t f, std::uint64_t seed = 0);

// Seeded Gaussian factors standing in for a factorization at desk scale.
Factorization synthetic_factorization(std::size_t n_users, std::size_t n_items, std::size_t f,
                                      std::uint64_t seed);

// Exact top-T item indices by inner product for each listed query row; ties
// broken toward the lower item index.
std::vector<std::vector<std::size_t>> ground_truth_topT(const Factorization& fac, std::size_t T,
                                                        const std::vector<std::size_t>& query_rows);

// Precision-recall points at recall levels k/T, k = 1..T; precision at level
// k is k over the rank position where the k-th relevant item appears,
// averaged over queries.
struct PRCurve {
    std::string scheme;
    std::size_t T = 0;
    std::size_t K = 0;
    std::vector<std::pair<double, double>> points;  // (recall, precision)
};

// Mean precision over the curve's uniform recall grid.
double curve_auprc(const PRCurve& curve);

struct RetrievalConfig {
    std::vector<std::size_t> T_values{1, 5, 10};
    std::vector<std::size_t> K_values{64, 128, 256};
    std::size_t n_query_sample = 0;  // 0 = all queries
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

// Full retrieval pass: items rescaled into the unit ball, queries normalized
// (or max-norm rescaled for the ball-domain asymmetric scheme), K-symbol
// codes built, items ranked per query by Hamming distance with seeded random
// tie-breaking, precision-recall averaged over queries. One curve per (T, K).
std::vector<PRCurve> run_retrieval(Scheme s, const L2AlshParams& l2, const SignAlshParams& sign,
                                   const Factorization& fac, const RetrievalConfig& cfg);

// CSV columns scheme,T,K,recall,precision; rows ordered as given.
void emit_pr_csv(const std::vector<PRCurve>& curves, std::ostream& out);

}  // namespace mipslsh
