#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "mipslsh/collision.hpp"
#include "mipslsh/hashers.hpp"
#include "mipslsh/sampling.hpp"

using namespace mipslsh;

TEST_CASE("quantized symbol: floor((a.z + b)/r)") {
    // a.z = 0, b = 0.3, r = 1
    CHECK(l2_symbol(Vec{0.0}, Vec{1.0}, 0.3, 1.0) == 0);
    // exact boundary goes to the upper cell: floor(2.5/2.5) = 1
    CHECK(l2_symbol(Vec{2.5}, Vec{1.0}, 0.0, 2.5) == 1);
    // negative projections floor downward
    CHECK(l2_symbol(Vec{-0.1}, Vec{1.0}, 0.0, 1.0) == -1);
    CHECK_THROWS_AS(l2_symbol(Vec{1.0, 2.0}, Vec{1.0}, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("sign bit with sign(0) = +1") {
    CHECK(sign_bit(Vec{3.2}, Vec{1.0}) == 1);
    CHECK(sign_bit(Vec{-0.001}, Vec{1.0}) == -1);
    CHECK(sign_bit(Vec{0.0}, Vec{1.0}) == 1);
}

TEST_CASE("hamming distance") {
    const HashCode a{{1, 1, -1, -1}, Alphabet::sign_bit};
    const HashCode b{{1, -1, -1, 1}, Alphabet::sign_bit};
    CHECK(hamming(a, a) == 0);
    CHECK(hamming(a, b) == 2);
    const HashCode c{{0, 1, 2}, Alphabet::integer};
    const HashCode d{{0, 1, 3}, Alphabet::integer};
    CHECK(hamming(c, d) == 1);
    CHECK_THROWS_AS(hamming(a, c), std::invalid_argument);
    const HashCode short_code{{1, 1}, Alphabet::sign_bit};
    CHECK_THROWS_AS(hamming(a, short_code), std::invalid_argument);
}

TEST_CASE("symmetric scheme hashes equal points to equal codes") {
    const Vec x{0.6, 0.8};
    const auto data = build_codes(Scheme::simple_lsh, {}, {}, {x}, Side::data, 32, 42);
    const auto query = build_codes(Scheme::simple_lsh, {}, {}, {x}, Side::query, 32, 42);
    CHECK(hamming(data[0], query[0]) == 0);
}

TEST_CASE("same seed twice gives bit-identical codes") {
    Rng rng(31);
    const std::vector<Vec> pts{random_ball_vec(rng, 6), random_ball_vec(rng, 6)};
    for (Scheme s : {Scheme::l2_alsh_sl, Scheme::sign_alsh_sl, Scheme::simple_lsh,
                     Scheme::simple_alsh}) {
        const auto a = build_codes(s, {}, {}, pts, Side::data, 64, 999);
        const auto b = build_codes(s, {}, {}, pts, Side::data, 64, 999);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].symbols == b[i].symbols);
    }
}

TEST_CASE("ball-pair codes of two zero vectors agree on about half the bits") {
    // P(0).Q(0) = 0, so each bit collides with probability 1/2; over many
    // seeds of K=8 codes the agreement rate must sit inside a generous
    // binomial band around 0.5.
    const Vec zero{0.0, 0.0};
    std::size_t agree = 0, total = 0;
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        const auto p = build_codes(Scheme::simple_alsh, {}, {}, {zero}, Side::data, 8, seed);
        const auto q = build_codes(Scheme::simple_alsh, {}, {}, {zero}, Side::query, 8, seed);
        agree += 8 - hamming(p[0], q[0]);
        total += 8;
    }
    const double rate = static_cast<double>(agree) / static_cast<double>(total);
    const double sigma = std::sqrt(0.25 / static_cast<double>(total));
    CHECK(std::abs(rate - 0.5) < 4.0 * sigma);
}

TEST_CASE("per-symbol agreement rate converges to the analytic probability") {
    // K = 1e5 symbols; the empirical collision rate of a fixed pair must be
    // within 3 sqrt(p(1-p)/K) of the analytic value under every scheme.
    Rng rng(37);
    const std::size_t K = 100000;
    for (Scheme s : {Scheme::l2_alsh_sl, Scheme::sign_alsh_sl, Scheme::simple_lsh,
                     Scheme::simple_alsh}) {
        for (int pair = 0; pair < 3; ++pair) {
            const Vec x = random_ball_vec(rng, 5);
            const Vec q =
                s == Scheme::simple_alsh ? random_ball_vec(rng, 5) : random_unit_vec(rng, 5);
            const auto cx = build_codes(s, {}, {}, {x}, Side::data, K, 1234 + pair);
            const auto cq = build_codes(s, {}, {}, {q}, Side::query, K, 1234 + pair);
            const double rate =
                1.0 - static_cast<double>(hamming(cx[0], cq[0])) / static_cast<double>(K);
            const double p = analytic_collision(s, {}, {}, x, q);
            const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(K));
            CAPTURE(scheme_name(s));
            CHECK(std::abs(rate - p) <= 3.0 * sigma);
        }
    }
}

TEST_CASE("build_codes input validation") {
    CHECK_THROWS_AS(build_codes(Scheme::simple_lsh, {}, {}, {}, Side::data, 8, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_codes(Scheme::simple_lsh, {}, {}, {Vec{0.1}}, Side::data, 0, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_codes(Scheme::simple_lsh, {}, {}, {Vec{2.0}}, Side::data, 8, 0),
                    std::invalid_argument);
}
