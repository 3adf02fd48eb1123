#pragma once

#include <cstddef>
#include <string>

#include "mipslsh/core.hpp"

namespace mipslsh {

// The four hash schemes under comparison. The two *_alsh_sl schemes use
// different mappings for data (P) and query (Q); simple_lsh applies one
// mapping to both sides; simple_alsh uses a P/Q pair over the ball.
enum class Scheme { l2_alsh_sl, sign_alsh_sl, simple_lsh, simple_alsh };

std::string scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);

struct L2AlshParams {
    int m = 3;
    double U = 0.83;
    double r = 2.5;

    void validate() const;
};

struct SignAlshParams {
    int m = 2;
    double U = 0.75;

    void validate() const;
};

// ||U x||^(2^k) for k = 1..m by repeated squaring of ||Ux||^2; powering the
// scaled vector directly would cost O(m d) and lose precision.
//
// Data map:  P(x) = [Ux; ||Ux||^2; ||Ux||^4; ...; ||Ux||^(2^m)]
// Query map: Q(q) = [q; 1/2; 1/2; ...; 1/2]
// For ||q|| = 1:  ||P(x)-Q(q)||^2 = 1 + m/4 + ||Ux||^(2^(m+1)) - 2 U q.x
Vec l2alsh_P(const Vec& x, const L2AlshParams& p);
Vec l2alsh_Q(const Vec& q, const L2AlshParams& p);

// Data map:  P(x) = [Ux; 1/2-||Ux||^2; ...; 1/2-||Ux||^(2^m)]
// Query map: Q(q) = [q; 0; ...; 0]
// Identities: ||P(x)||^2 = m/4 + ||Ux||^(2^(m+1)),  P(x).Q(q) = U q.x
Vec signalsh_P(const Vec& x, const SignAlshParams& p);
Vec signalsh_Q(const Vec& q, const SignAlshParams& p);

// P(x) = [x; sqrt(1-||x||^2)].  Unit norm by construction; for unit q,
// P(q).P(x) = q.x.
Vec simple_P(const Vec& x);

// P(x) = [x; sqrt(1-||x||^2); 0],  Q(y) = [y; 0; sqrt(1-||y||^2)].
// P(x).Q(y) = x.y and both outputs are unit for any x, y in the ball.
Vec simplealsh_P(const Vec& x);
Vec simplealsh_Q(const Vec& y);

// Dimension of the transformed space for a d-dimensional input.
std::size_t transformed_dim(Scheme s, std::size_t d, int m);

// Applies the scheme's data- or query-side mapping.
Vec transform_point(Scheme s, const L2AlshParams& l2, const SignAlshParams& sign, const Vec& v,
                    bool query_side);

}  // namespace mipslsh
