#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace mipslsh {

using Vec = std::vector<double>;

// Tolerance for "unit norm" and "inside the unit ball" checks. Double
// arithmetic over a few thousand coordinates drifts by this much, so strict
// equality is not usable.
inline constexpr double kNormTol = 1e-12;

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> v);
double squared_distance(std::span<const double> a, std::span<const double> b);

// Database vectors. `norm_bound_ok` records whether every point already sits
// inside the unit ball (within kNormTol).
struct Dataset {
    std::vector<Vec> points;
    bool norm_bound_ok = false;

    static Dataset from_points(std::vector<Vec> pts);
    std::size_t dim() const { return points.empty() ? 0 : points.front().size(); }
};

// Query vectors. `normalized` records whether every query has unit norm
// (within kNormTol).
struct QuerySet {
    std::vector<Vec> points;
    bool normalized = false;

    static QuerySet from_points(std::vector<Vec> pts);
    std::size_t dim() const { return points.empty() ? 0 : points.front().size(); }
};

// The (S, cS) problem instance: similar means sim >= S, dissimilar means
// sim <= cS.
struct ThresholdPair {
    double S;
    double c;

    ThresholdPair(double S_, double c_);
    double cS() const { return c * S; }
};

struct CollisionPair {
    double p1;
    double p2;

    CollisionPair(double p1_, double p2_);
};

// Scales every query to unit norm; directions are preserved. Throws with the
// offending index if a query has zero norm.
QuerySet normalize_queries(const QuerySet& qs);

// Divides all points by the max norm M when M > 1 (identity otherwise) and
// returns the scale used. The argmax of q.x over the dataset is unchanged.
std::pair<Dataset, double> rescale_dataset(const Dataset& ds);

// rho = log p1 / log p2 for a valid collision pair 0 < p2 < p1 < 1.
double hashing_quality(const CollisionPair& p);

}  // namespace mipslsh
