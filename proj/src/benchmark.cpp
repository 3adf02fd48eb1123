#include "mipslsh/benchmark.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "mipslsh/core.hpp"
#include "mipslsh/hashers.hpp"
#include "mipslsh/rng.hpp"

namespace mipslsh {

RatingsMatrix ingest_ratings(std::istream& in, char delim) {
    RatingsMatrix out;
    std::unordered_map<long long, std::size_t> user_ids, item_ids;
    std::unordered_map<std::uint64_t, std::size_t> seen;  // (user,item) -> triple slot
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ss(line);
        std::string u_s, i_s, r_s;
        if (!std::getline(ss, u_s, delim) || !std::getline(ss, i_s, delim) ||
            !std::getline(ss, r_s, delim))
            throw std::runtime_error("ratings line " + std::to_string(line_no) +
                                     ": expected user, item, rating fields");
        long long u, i;
        double r;
        try {
            std::size_t pos;
            u = std::stoll(u_s, &pos);
            if (pos != u_s.size()) throw std::invalid_argument("");
            i = std::stoll(i_s, &pos);
            if (pos != i_s.size()) throw std::invalid_argument("");
            r = std::stod(r_s, &pos);
            if (pos != r_s.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::runtime_error("ratings line " + std::to_string(line_no) +
                                     ": malformed field in '" + line + "'");
        }
        auto [uit, unew] = user_ids.try_emplace(u, user_ids.size());
        auto [iit, inew] = item_ids.try_emplace(i, item_ids.size());
        const std::uint64_t key =
            (static_cast<std::uint64_t>(uit->second) << 32) | static_cast<std::uint64_t>(iit->second);
        auto [sit, snew] = seen.try_emplace(key, out.triples.size());
        if (snew) {
            out.triples.push_back({uit->second, iit->second, r});
        } else {
            out.triples[sit->second].rating = r;  // last value wins
            ++out.duplicates_overwritten;
        }
    }
    if (out.triples.empty()) throw std::runtime_error("ratings input is empty");
    out.n_users = user_ids.size();
    out.n_items = item_ids.size();
    return out;
}

Factorization pure_svd(const RatingsMatrix& Z, std::size_t f, std::uint64_t seed) {
    if (f < 1 || f > std::min(Z.n_users, Z.n_items))
        throw std::invalid_argument("pure_svd: f must be in [1, min(n_users, n_items)]");
    double mean = 0.0;
    for (const auto& t : Z.triples) mean += t.rating;
    mean /= static_cast<double>(Z.triples.size());

    Matrix dense(Z.n_users, Z.n_items);
    for (const auto& t : Z.triples) dense.at(t.user, t.item) = t.rating - mean;

    const SvdResult svd = truncated_svd(dense, f, seed);
    Factorization fac;
    fac.L = Matrix(Z.n_users, f);
    for (std::size_t i = 0; i < Z.n_users; ++i)
        for (std::size_t j = 0; j < f; ++j) fac.L.at(i, j) = svd.W.at(i, j) * svd.sigma[j];
    fac.R = svd.V;
    return fac;
}

Factorization synthetic_factorization(std::size_t n_users, std::size_t n_items, std::size_t f,
                                      std::uint64_t seed) {
    Factorization fac;
    fac.L = Matrix(n_users, f);
    fac.R = Matrix(n_items, f);
    Rng rng(seed);
    for (double& v : fac.L.data) v = rng.next_gaussian();
    for (double& v : fac.R.data) v = rng.next_gaussian();
    return fac;
}

std::vector<std::vector<std::size_t>> ground_truth_topT(const Factorization& fac, std::size_t T,
                                                        const std::vector<std::size_t>& query_rows) {
    const std::size_t n_items = fac.R.rows;
    if (T < 1 || T > n_items)
        throw std::invalid_argument("ground_truth_topT: T must be in [1, n_items]");
    std::vector<std::vector<std::size_t>> out;
    out.reserve(query_rows.size());
    std::vector<std::size_t> idx(n_items);
    std::vector<double> score(n_items);
    for (std::size_t qr : query_rows) {
        for (std::size_t j = 0; j < n_items; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < fac.L.cols; ++k) s += fac.L.at(qr, k) * fac.R.at(j, k);
            score[j] = s;
        }
        std::iota(idx.begin(), idx.end(), 0);
        std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(T), idx.end(),
                          [&](std::size_t a, std::size_t b) {
                              if (score[a] != score[b]) return score[a] > score[b];
                              return a < b;
                          });
        out.emplace_back(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(T));
    }
    return out;
}

double curve_auprc(const PRCurve& curve) {
    if (curve.points.empty()) return 0.0;
    double s = 0.0;
    for (const auto& [recall, precision] : curve.points) s += precision;
    return s / static_cast<double>(curve.points.size());
}

namespace {

std::vector<Vec> rows_as_vecs(const Matrix& m) {
    std::vector<Vec> out;
    out.reserve(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) out.emplace_back(m.row(i), m.row(i) + m.cols);
    return out;
}

// Per-(seed, K, query) tie-break stream, independent of processing order.
Rng tie_rng(std::uint64_t seed, std::size_t K, std::size_t query_row) {
    Rng keyed = Rng::substream(seed ^ 0x7469656272656bULL, K);  // "tiebrek"
    return Rng::substream(keyed.next_u64(), query_row);
}

}  // namespace

std::vector<PRCurve> run_retrieval(Scheme s, const L2AlshParams& l2, const SignAlshParams& sign,
                                   const Factorization& fac, const RetrievalConfig& cfg) {
    if (cfg.T_values.empty() || cfg.K_values.empty())
        throw std::invalid_argument("run_retrieval: need at least one T and one K");
    const std::size_t n_items = fac.R.rows;
    const std::size_t n_users = fac.L.rows;
    const std::size_t T_max = *std::max_element(cfg.T_values.begin(), cfg.T_values.end());
    const std::size_t K_max = *std::max_element(cfg.K_values.begin(), cfg.K_values.end());
    if (T_max > n_items) throw std::invalid_argument("run_retrieval: T exceeds item count");

    // Query sample (without replacement, seeded) over user rows.
    std::vector<std::size_t> query_rows(n_users);
    std::iota(query_rows.begin(), query_rows.end(), 0);
    if (cfg.n_query_sample > 0 && cfg.n_query_sample < n_users) {
        Rng shuffle_rng = Rng::substream(cfg.seed ^ 0x71737367, 0);
        for (std::size_t i = n_users - 1; i > 0; --i) {
            const std::size_t j = shuffle_rng.next_u64() % (i + 1);
            std::swap(query_rows[i], query_rows[j]);
        }
        query_rows.resize(cfg.n_query_sample);
        std::sort(query_rows.begin(), query_rows.end());
    }

    // Ground truth against the raw factors; the rescalings below do not
    // change any per-query ranking.
    const auto truth_topmax = ground_truth_topT(fac, T_max, query_rows);

    auto [items_ds, item_scale] = rescale_dataset(Dataset::from_points(rows_as_vecs(fac.R)));
    (void)item_scale;

    std::vector<Vec> query_vecs;
    query_vecs.reserve(query_rows.size());
    for (std::size_t qr : query_rows)
        query_vecs.emplace_back(fac.L.row(qr), fac.L.row(qr) + fac.L.cols);
    if (s == Scheme::simple_alsh) {
        // ball domain: queries stay unnormalized, bounded by their max norm
        auto [qds, qscale] = rescale_dataset(Dataset::from_points(std::move(query_vecs)));
        (void)qscale;
        query_vecs = std::move(qds.points);
    } else {
        query_vecs = normalize_queries(QuerySet::from_points(std::move(query_vecs))).points;
    }

    const auto item_codes =
        build_codes(s, l2, sign, items_ds.points, Side::data, K_max, cfg.seed);
    const auto query_codes = build_codes(s, l2, sign, query_vecs, Side::query, K_max, cfg.seed);

    std::vector<PRCurve> curves;
    for (std::size_t K : cfg.K_values) {
        // rank position of each query's t-th ground-truth item, 0-based;
        // filled in parallel, reduced serially so the thread count cannot
        // change the averaged result
        std::vector<std::vector<std::size_t>> truth_rank(query_rows.size());

        auto worker = [&](std::size_t begin, std::size_t end) {
            std::vector<std::size_t> dist(n_items);
            std::vector<std::uint32_t> perm(n_items);
            std::vector<std::size_t> rank_of_item(n_items);
            for (std::size_t qi = begin; qi < end; ++qi) {
                const HashCode& qc = query_codes[qi];
                for (std::size_t j = 0; j < n_items; ++j) {
                    const auto& is = item_codes[j].symbols;
                    const auto& qs = qc.symbols;
                    std::size_t d = 0;
                    for (std::size_t k = 0; k < K; ++k)
                        if (is[k] != qs[k]) ++d;
                    dist[j] = d;
                }
                std::iota(perm.begin(), perm.end(), 0);
                Rng rng = tie_rng(cfg.seed, K, query_rows[qi]);
                for (std::size_t i = n_items - 1; i > 0; --i) {
                    const std::size_t j = rng.next_u64() % (i + 1);
                    std::swap(perm[i], perm[j]);
                }
                std::stable_sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
                    return dist[a] < dist[b];
                });

                for (std::size_t pos = 0; pos < n_items; ++pos) rank_of_item[perm[pos]] = pos;
                auto& ranks = truth_rank[qi];
                ranks.resize(T_max);
                for (std::size_t t = 0; t < T_max; ++t)
                    ranks[t] = rank_of_item[truth_topmax[qi][t]];
            }
        };

        const unsigned n_threads = std::max(1u, cfg.threads);
        if (n_threads == 1 || query_rows.size() < 2 * n_threads) {
            worker(0, query_rows.size());
        } else {
            std::vector<std::thread> pool;
            const std::size_t chunk = (query_rows.size() + n_threads - 1) / n_threads;
            for (unsigned t = 0; t < n_threads; ++t) {
                const std::size_t b = t * chunk;
                const std::size_t e = std::min(query_rows.size(), b + chunk);
                if (b < e) pool.emplace_back(worker, b, e);
            }
            for (auto& th : pool) th.join();
        }

        for (std::size_t T : cfg.T_values) {
            PRCurve curve;
            curve.scheme = scheme_name(s);
            curve.T = T;
            curve.K = K;
            std::vector<double> prec_sum(T, 0.0);
            std::vector<std::size_t> hit_ranks;
            for (const auto& ranks : truth_rank) {
                // relevant set for this T is the top-T prefix of the exact
                // ranking; the k-th of them retrieved sits at the k-th
                // smallest of their rank positions
                hit_ranks.assign(ranks.begin(), ranks.begin() + static_cast<std::ptrdiff_t>(T));
                std::sort(hit_ranks.begin(), hit_ranks.end());
                for (std::size_t k = 1; k <= T; ++k)
                    prec_sum[k - 1] +=
                        static_cast<double>(k) / static_cast<double>(hit_ranks[k - 1] + 1);
            }
            curve.points.reserve(T);
            for (std::size_t k = 1; k <= T; ++k)
                curve.points.emplace_back(static_cast<double>(k) / static_cast<double>(T),
                                          prec_sum[k - 1] / static_cast<double>(truth_rank.size()));
            curves.push_back(std::move(curve));
        }
    }
    return curves;
}

void emit_pr_csv(const std::vector<PRCurve>& curves, std::ostream& out) {
    if (curves.empty()) throw std::invalid_argument("emit_pr_csv: no curves");
    char buf[48];
    out << "scheme,T,K,recall,precision\n";
    for (const PRCurve& c : curves) {
        for (const auto& [recall, precision] : c.points) {
            out << c.scheme << ',' << c.T << ',' << c.K << ',';
            std::snprintf(buf, sizeof(buf), "%.10g", recall);
            out << buf << ',';
            std::snprintf(buf, sizeof(buf), "%.10g", precision);
            out << buf << '\n';
        }
    }
}

}  // namespace mipslsh
