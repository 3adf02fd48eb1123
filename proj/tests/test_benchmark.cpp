#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>

#include "mipslsh/benchmark.hpp"
#include "mipslsh/core.hpp"

using namespace mipslsh;

TEST_CASE("ratings ingestion") {
    SUBCASE("dense reindex") {
        std::istringstream in("10\t7\t4.0\n10\t9\t3.0\n12\t7\t5.0\n");
        const RatingsMatrix m = ingest_ratings(in);
        CHECK(m.n_users == 2);
        CHECK(m.n_items == 2);
        CHECK(m.triples.size() == 3);
        CHECK(m.duplicates_overwritten == 0);
    }
    SUBCASE("duplicate pair keeps the last value") {
        std::istringstream in("1\t1\t2.0\n1\t1\t5.0\n2\t1\t1.0\n");
        const RatingsMatrix m = ingest_ratings(in);
        CHECK(m.duplicates_overwritten == 1);
        CHECK(m.triples.size() == 2);
        CHECK(m.triples[0].rating == 5.0);
    }
    SUBCASE("trailing fields like timestamps are ignored") {
        std::istringstream in("1\t1\t2.0\t884182806\n");
        CHECK(ingest_ratings(in).triples.size() == 1);
    }
    SUBCASE("malformed lines carry their line number") {
        std::istringstream in("1\t1\t2.0\n1\tx\t3.0\n");
        CHECK_THROWS_WITH_AS(ingest_ratings(in), doctest::Contains("line 2"), std::runtime_error);
        std::istringstream in2("1\t1\tabc\n");
        CHECK_THROWS_AS(ingest_ratings(in2), std::runtime_error);
        std::istringstream in3("1\t1\n");
        CHECK_THROWS_AS(ingest_ratings(in3), std::runtime_error);
    }
    SUBCASE("empty input is rejected") {
        std::istringstream in("");
        CHECK_THROWS_AS(ingest_ratings(in), std::runtime_error);
    }
    SUBCASE("alternate delimiter") {
        std::istringstream in("1,2,3.5\n");
        const RatingsMatrix m = ingest_ratings(in, ',');
        CHECK(m.triples[0].rating == 3.5);
    }
}

TEST_CASE("pure_svd centers by the observed mean and factors the rest") {
    // ratings whose centered matrix has rank 1: exact recovery at f = 1
    RatingsMatrix rm;
    rm.n_users = 2;
    rm.n_items = 2;
    // mean = 3; centered = [[1, -1], [-1, 1]]
    rm.triples = {{0, 0, 4.0}, {0, 1, 2.0}, {1, 0, 2.0}, {1, 1, 4.0}};
    const Factorization fac = pure_svd(rm, 1);
    Matrix approx = matmul_transB(fac.L, fac.R);
    CHECK(approx.at(0, 0) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(approx.at(0, 1) == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(approx.at(1, 0) == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(approx.at(1, 1) == doctest::Approx(1.0).epsilon(1e-10));

    CHECK_THROWS_AS(pure_svd(rm, 3), std::invalid_argument);
}

TEST_CASE("exact top-T ground truth") {
    Factorization fac;
    fac.L = Matrix(1, 2);
    fac.L.at(0, 0) = 1.0;
    fac.R = Matrix(3, 2);
    fac.R.at(0, 0) = 0.1;
    fac.R.at(1, 0) = 0.9;
    fac.R.at(2, 0) = 0.5;
    SUBCASE("distinct scores sort descending") {
        const auto t = ground_truth_topT(fac, 3, {0});
        CHECK(t[0] == std::vector<std::size_t>{1, 2, 0});
    }
    SUBCASE("T = n_items returns all items") {
        CHECK(ground_truth_topT(fac, 3, {0})[0].size() == 3);
    }
    SUBCASE("ties break toward the lower index") {
        fac.R.at(2, 0) = 0.9;
        const auto t = ground_truth_topT(fac, 2, {0});
        CHECK(t[0] == std::vector<std::size_t>{1, 2});
    }
    SUBCASE("T out of range") {
        CHECK_THROWS_AS(ground_truth_topT(fac, 4, {0}), std::invalid_argument);
        CHECK_THROWS_AS(ground_truth_topT(fac, 0, {0}), std::invalid_argument);
    }
}

namespace {

Factorization tiny_factorization(std::size_t n_users, std::size_t n_items, std::size_t f,
                                 std::uint64_t seed) {
    return synthetic_factorization(n_users, n_items, f, seed);
}

// the same PR definition computed against the exact inner-product ranking
std::vector<double> exact_ranking_precisions(const Factorization& fac, std::size_t query,
                                             std::size_t T) {
    const auto truth = ground_truth_topT(fac, T, {query});
    const auto full = ground_truth_topT(fac, fac.R.rows, {query});
    std::vector<double> prec;
    std::size_t found = 0;
    for (std::size_t pos = 0; pos < full[0].size() && found < T; ++pos) {
        for (std::size_t t = 0; t < T; ++t) {
            if (full[0][pos] == truth[0][t]) {
                ++found;
                prec.push_back(static_cast<double>(found) / static_cast<double>(pos + 1));
                break;
            }
        }
    }
    return prec;
}

}  // namespace

TEST_CASE("self-retrieval: a unit query identical to an item lands at rank 0") {
    Factorization fac;
    fac.L = Matrix(1, 2);
    fac.L.at(0, 0) = 1.0;
    fac.R = Matrix(4, 2);
    fac.R.at(0, 1) = 0.2;
    fac.R.at(1, 0) = 1.0;  // the query itself
    fac.R.at(2, 0) = -0.4;
    fac.R.at(3, 1) = -0.1;
    RetrievalConfig cfg;
    cfg.T_values = {1};
    cfg.K_values = {32};
    cfg.seed = 9;
    const auto curves = run_retrieval(Scheme::simple_lsh, {}, {}, fac, cfg);
    REQUIRE(curves.size() == 1);
    REQUIRE(curves[0].points.size() == 1);
    CHECK(curves[0].points[0].first == 1.0);
    CHECK(curves[0].points[0].second == 1.0);
}

TEST_CASE("huge K approaches the exact inner-product ranking") {
    const Factorization fac = tiny_factorization(4, 20, 4, 123);
    RetrievalConfig cfg;
    cfg.T_values = {3};
    cfg.K_values = {16384};
    cfg.seed = 77;
    const auto curves = run_retrieval(Scheme::simple_lsh, {}, {}, fac, cfg);
    REQUIRE(curves.size() == 1);
    double exact_mean_final = 0.0;
    for (std::size_t q = 0; q < 4; ++q)
        exact_mean_final += exact_ranking_precisions(fac, q, 3).back();
    exact_mean_final /= 4.0;
    const double hashed_final = curves[0].points.back().second;
    CHECK(std::abs(hashed_final - exact_mean_final) < 0.15);
}

TEST_CASE("curves are deterministic and thread-count independent") {
    const Factorization fac = tiny_factorization(10, 30, 4, 5);
    RetrievalConfig cfg;
    cfg.T_values = {2, 5};
    cfg.K_values = {16, 64};
    cfg.seed = 21;
    cfg.threads = 1;
    const auto a = run_retrieval(Scheme::sign_alsh_sl, {}, {}, fac, cfg);
    const auto b = run_retrieval(Scheme::sign_alsh_sl, {}, {}, fac, cfg);
    cfg.threads = 3;
    const auto c = run_retrieval(Scheme::sign_alsh_sl, {}, {}, fac, cfg);
    REQUIRE(a.size() == b.size());
    REQUIRE(a.size() == c.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].points == b[i].points);
        CHECK(a[i].points == c[i].points);
    }
}

TEST_CASE("PR curves stay inside the unit square with nondecreasing recall") {
    const Factorization fac = tiny_factorization(8, 25, 3, 31);
    RetrievalConfig cfg;
    cfg.T_values = {1, 4, 10};
    cfg.K_values = {8, 32};
    cfg.seed = 2;
    for (Scheme s : {Scheme::l2_alsh_sl, Scheme::sign_alsh_sl, Scheme::simple_lsh,
                     Scheme::simple_alsh}) {
        for (const PRCurve& c : run_retrieval(s, {}, {}, fac, cfg)) {
            double prev_recall = 0.0;
            for (const auto& [recall, precision] : c.points) {
                CHECK(recall >= prev_recall);
                CHECK(recall >= 0.0);
                CHECK(recall <= 1.0);
                CHECK(precision >= 0.0);
                CHECK(precision <= 1.0);
                prev_recall = recall;
            }
            CHECK(c.points.back().first == 1.0);
        }
    }
}

TEST_CASE("query sampling is reproducible and bounded") {
    const Factorization fac = tiny_factorization(20, 15, 3, 8);
    RetrievalConfig cfg;
    cfg.T_values = {2};
    cfg.K_values = {16};
    cfg.n_query_sample = 5;
    cfg.seed = 4;
    const auto a = run_retrieval(Scheme::simple_lsh, {}, {}, fac, cfg);
    const auto b = run_retrieval(Scheme::simple_lsh, {}, {}, fac, cfg);
    CHECK(a[0].points == b[0].points);
}

TEST_CASE("PR CSV layout and determinism") {
    PRCurve c;
    c.scheme = "simple-lsh";
    c.T = 10;
    c.K = 64;
    for (int k = 1; k <= 10; ++k) c.points.emplace_back(k / 10.0, 1.0 / k);
    std::ostringstream a, b;
    emit_pr_csv({c}, a);
    emit_pr_csv({c}, b);
    CHECK(a.str() == b.str());
    std::size_t lines = 0;
    std::string line;
    std::istringstream s(a.str());
    std::getline(s, line);
    CHECK(line == "scheme,T,K,recall,precision");
    while (std::getline(s, line)) ++lines;
    CHECK(lines == 10);
    std::ostringstream sink;
    CHECK_THROWS_AS(emit_pr_csv({}, sink), std::invalid_argument);
}

TEST_CASE("curve_auprc averages precision over the recall grid") {
    PRCurve c;
    c.points = {{0.5, 1.0}, {1.0, 0.5}};
    CHECK(curve_auprc(c) == doctest::Approx(0.75));
}
