#include "mipslsh/core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mipslsh {

double dot(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dot: dimension mismatch (" + std::to_string(a.size()) +
                                    " vs " + std::to_string(b.size()) + ")");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("squared_distance: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

namespace {

void check_uniform(const std::vector<Vec>& pts, const char* what) {
    if (pts.empty()) throw std::invalid_argument(std::string(what) + ": empty point set");
    const std::size_t d = pts.front().size();
    if (d == 0) throw std::invalid_argument(std::string(what) + ": zero-dimensional point");
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].size() != d)
            throw std::invalid_argument(std::string(what) + ": point " + std::to_string(i) +
                                        " has dim " + std::to_string(pts[i].size()) +
                                        ", expected " + std::to_string(d));
        for (double x : pts[i])
            if (!std::isfinite(x))
                throw std::invalid_argument(std::string(what) + ": point " + std::to_string(i) +
                                            " has a non-finite coordinate");
    }
}

}  // namespace

Dataset Dataset::from_points(std::vector<Vec> pts) {
    check_uniform(pts, "Dataset");
    Dataset ds;
    ds.points = std::move(pts);
    ds.norm_bound_ok = true;
    for (const Vec& p : ds.points)
        if (norm(p) > 1.0 + kNormTol) {
            ds.norm_bound_ok = false;
            break;
        }
    return ds;
}

QuerySet QuerySet::from_points(std::vector<Vec> pts) {
    check_uniform(pts, "QuerySet");
    QuerySet qs;
    qs.points = std::move(pts);
    qs.normalized = true;
    for (const Vec& q : qs.points)
        if (std::abs(norm(q) - 1.0) > kNormTol) {
            qs.normalized = false;
            break;
        }
    return qs;
}

ThresholdPair::ThresholdPair(double S_, double c_) : S(S_), c(c_) {
    if (!(S > 0.0 && S <= 1.0)) throw std::invalid_argument("ThresholdPair: S must be in (0,1]");
    if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("ThresholdPair: c must be in (0,1)");
}

CollisionPair::CollisionPair(double p1_, double p2_) : p1(p1_), p2(p2_) {
    if (!(p1 >= 0.0 && p1 <= 1.0 && p2 >= 0.0 && p2 <= 1.0))
        throw std::invalid_argument("CollisionPair: probabilities must be in [0,1]");
}

QuerySet normalize_queries(const QuerySet& qs) {
    QuerySet out;
    out.points.reserve(qs.points.size());
    for (std::size_t i = 0; i < qs.points.size(); ++i) {
        const double n = norm(qs.points[i]);
        if (n == 0.0)
            throw std::invalid_argument("normalize_queries: query " + std::to_string(i) +
                                        " has zero norm");
        Vec q = qs.points[i];
        for (double& x : q) x /= n;
        out.points.push_back(std::move(q));
    }
    out.normalized = true;
    return out;
}

std::pair<Dataset, double> rescale_dataset(const Dataset& ds) {
    if (ds.points.empty()) throw std::invalid_argument("rescale_dataset: empty dataset");
    double max_norm = 0.0;
    for (const Vec& p : ds.points) max_norm = std::max(max_norm, norm(p));
    if (max_norm <= 1.0) {
        Dataset out = ds;
        out.norm_bound_ok = true;
        return {std::move(out), 1.0};
    }
    Dataset out;
    out.points.reserve(ds.points.size());
    for (const Vec& p : ds.points) {
        Vec q = p;
        for (double& x : q) x /= max_norm;
        out.points.push_back(std::move(q));
    }
    out.norm_bound_ok = true;
    return {std::move(out), max_norm};
}

double hashing_quality(const CollisionPair& p) {
    if (!(p.p1 > p.p2)) throw std::invalid_argument("hashing_quality: requires p1 > p2");
    if (p.p1 >= 1.0) throw std::invalid_argument("hashing_quality: p1 = 1 gives log p1 = 0");
    if (p.p2 <= 0.0) throw std::invalid_argument("hashing_quality: p2 = 0 gives log p2 = -inf");
    return std::log(p.p1) / std::log(p.p2);
}

}  // namespace mipslsh
